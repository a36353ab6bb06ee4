"""Frequency-domain and regression features: DFT bins, windowed linear trends,
Welch spectral density, and autoregressive coefficient estimation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


def fft_coefficients(signal) -> np.ndarray:
    """One-sided DFT X(k) = sum x_t exp(-j 2 pi k t / n), k = 0..floor(n/2)."""
    x = np.asarray(signal, dtype=np.float64)
    if len(x) < 1:
        raise ValueError("signal must be non-empty")
    return np.fft.rfft(x)


_TREND_ATTRS = ("slope", "intercept", "stderr")
_AGG_FNS = {"mean": np.mean, "min": np.min, "max": np.max, "var": np.var}


def linear_trend(signal, chunk_len: int, aggregate: str = "slope",
                 agg_fn: str = "mean") -> float:
    """Least-squares line fit per full chunk, then one statistic aggregated."""
    if aggregate not in _TREND_ATTRS:
        raise ValueError(f"aggregate must be one of {_TREND_ATTRS}")
    if agg_fn not in _AGG_FNS:
        raise ValueError(f"agg_fn must be one of {tuple(_AGG_FNS)}")
    if chunk_len < 2:
        raise ValueError("chunk_len must be at least 2")
    x = np.asarray(signal, dtype=np.float64)
    n_chunks = len(x) // chunk_len
    if n_chunks < 1:
        raise ValueError("signal shorter than one chunk")
    t = np.arange(chunk_len, dtype=np.float64)
    t_mean = t.mean()
    t_var = np.sum((t - t_mean) ** 2)
    values = []
    for c in range(n_chunks):
        y = x[c * chunk_len:(c + 1) * chunk_len]
        y_mean = y.mean()
        slope = float(np.sum((t - t_mean) * (y - y_mean)) / t_var)
        if aggregate == "slope":
            values.append(slope)
            continue
        intercept = y_mean - slope * t_mean
        if aggregate == "intercept":
            values.append(intercept)
        else:
            resid = y - (intercept + slope * t)
            dof = chunk_len - 2
            if dof <= 0:
                values.append(0.0)
            else:
                values.append(math.sqrt(float(np.sum(resid ** 2)) / dof / t_var))
    return float(_AGG_FNS[agg_fn](np.asarray(values)))


@dataclass(frozen=True)
class WelchConfig:
    segment_len: int = 64
    overlap_fraction: float = 0.5
    window: str = "hann"

    def __post_init__(self):
        if self.segment_len < 2:
            raise ValueError("segment_len must be at least 2")
        if not 0.0 <= self.overlap_fraction < 1.0:
            raise ValueError("overlap_fraction must lie in [0, 1)")
        if self.window not in ("hann", "boxcar"):
            raise ValueError("window must be 'hann' or 'boxcar'")


def welch_density(signal, cfg: WelchConfig = WelchConfig()) -> np.ndarray:
    """One-sided averaged periodogram; unit sample rate, density scaling.

    The bin powers sum (times the bin width 1/segment_len) to the windowed
    mean square of the signal, so for zero-mean stationary input the total
    matches the variance.
    """
    x = np.asarray(signal, dtype=np.float64)
    nseg = cfg.segment_len
    if nseg > len(x):
        raise ValueError("segment longer than the signal")
    if cfg.window == "hann":
        k = np.arange(nseg)
        w = 0.5 - 0.5 * np.cos(2.0 * np.pi * k / nseg)
    else:
        w = np.ones(nseg)
    hop = max(1, int(round(nseg * (1.0 - cfg.overlap_fraction))))
    starts = range(0, len(x) - nseg + 1, hop)
    u = float(np.sum(w * w))
    acc = np.zeros(nseg // 2 + 1)
    count = 0
    for s in starts:
        seg = x[s:s + nseg] * w
        spec = np.abs(np.fft.rfft(seg)) ** 2
        acc += spec
        count += 1
    psd = acc / (count * u)
    # one-sided: double everything except DC (and Nyquist for even segments)
    psd[1:] *= 2.0
    if nseg % 2 == 0:
        psd[-1] /= 2.0
    return psd


def ar_fit(signal, k: int, with_intercept: bool = True) -> dict:
    """Ordinary least squares of x_t on (1, x_{t-1}, ..., x_{t-k}).

    Returns {"phi0": intercept, "phi": array of length k in lag order}.
    A rank-deficient design matrix (for example a constant signal regressed
    with both an intercept and lags) is an error.
    """
    x = np.asarray(signal, dtype=np.float64)
    n = len(x)
    if k < 1:
        raise ValueError("lag order k must be at least 1")
    if n < k + 2:
        raise ValueError(f"need at least {k + 2} samples for lag {k}")
    rows = n - k
    cols = []
    if with_intercept:
        cols.append(np.ones(rows))
    for lag in range(1, k + 1):
        cols.append(x[k - lag:n - lag])
    design = np.column_stack(cols)
    target = x[k:]
    coef, _, rank, _ = np.linalg.lstsq(design, target, rcond=None)
    if rank < design.shape[1]:
        raise ValueError("rank-deficient design matrix; AR coefficients not identifiable")
    if with_intercept:
        return {"phi0": float(coef[0]), "phi": coef[1:].copy()}
    return {"phi0": 0.0, "phi": coef.copy()}
