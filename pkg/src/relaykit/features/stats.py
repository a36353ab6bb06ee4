"""Time-domain statistics of transient windows."""

from __future__ import annotations

import math

import numpy as np


def change_quantile(signal, ql: float, qh: float) -> float:
    """Mean absolute consecutive change inside the [ql, qh] amplitude corridor.

    The corridor holds samples between the ql- and qh-empirical quantiles; only
    consecutive pairs with both endpoints inside contribute. Returns 0 when the
    corridor holds fewer than two samples or no consecutive pair.
    """
    if not 0.0 <= ql < qh <= 1.0:
        raise ValueError("need 0 <= ql < qh <= 1")
    x = np.asarray(signal, dtype=np.float64)
    lo, hi = np.quantile(x, [ql, qh])
    inside = (x >= lo) & (x <= hi)
    if inside.sum() < 2:
        return 0.0
    pair = inside[:-1] & inside[1:]
    if not pair.any():
        return 0.0
    return float(np.mean(np.abs(np.diff(x))[pair]))


def sample_entropy(signal, m: int = 2, r: float | None = None) -> float:
    """-ln(A/B) over Chebyshev-matching templates of length m+1 versus m.

    r defaults to 0.2 times the population standard deviation. Self-matches are
    excluded; a zero match count in either numerator or denominator is an error.
    """
    x = np.asarray(signal, dtype=np.float64)
    n = len(x)
    if n <= m + 1:
        raise ValueError("signal too short for the template length")
    if r is None:
        r = 0.2 * float(np.std(x))
    if r <= 0:
        raise ValueError("tolerance r must be positive")

    def count(length: int) -> int:
        # both template lengths range over the same n - m start positions
        tem = np.lib.stride_tricks.sliding_window_view(x, length)[:n - m]
        k = len(tem)
        total = 0
        for i in range(k - 1):
            dist = np.max(np.abs(tem[i + 1:] - tem[i]), axis=1)
            total += int(np.sum(dist < r))
        return total

    b = count(m)
    a = count(m + 1)
    if a == 0 or b == 0:
        raise ValueError("no template matches; entropy undefined for this r")
    return float(-math.log(a / b))


def variance(signal) -> float:
    """Population variance (divide by n)."""
    x = np.asarray(signal, dtype=np.float64)
    if len(x) < 2:
        raise ValueError("variance needs at least two samples")
    return float(np.var(x))


def excess_kurtosis(signal) -> float:
    """Fourth standardized moment minus three."""
    x = np.asarray(signal, dtype=np.float64)
    mu = x.mean()
    sig2 = float(np.var(x))
    if sig2 == 0.0:
        raise ValueError("kurtosis undefined for a constant signal")
    return float(np.mean((x - mu) ** 4) / sig2 ** 2 - 3.0)


def moments(signal) -> dict:
    """Variance always; excess kurtosis only when the signal is non-constant."""
    out = {"variance": variance(signal)}
    if out["variance"] > 0.0:
        out["excess_kurtosis"] = excess_kurtosis(signal)
    return out


def complexity_invariant_distance(signal) -> float:
    """Root of the summed squared consecutive differences."""
    x = np.asarray(signal, dtype=np.float64)
    if len(x) < 2:
        raise ValueError("needs at least two samples")
    d = np.diff(x)
    return float(math.sqrt(np.sum(d * d)))
