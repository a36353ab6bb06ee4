"""Multilevel discrete wavelet transform over the vendored filter banks.

Signal extension is symmetric (half-point) by default; periodic extension is
available and is the mode under which the orthogonal families satisfy Parseval
exactly. The inverse transform reproduces the input to machine precision in
both modes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._filter_data import FILTER_BANKS

FAMILY_PREFIX = {
    "daubechies": "db",
    "symlet": "sym",
    "coiflet": "coif",
    "biorthogonal": "bior",
    "reverse_biorthogonal": "rbio",
}

MAX_FILTER_LENGTH = 24

_BANK_CACHE: dict[str, tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]] = {}


def supported_wavelets() -> tuple[str, ...]:
    return tuple(sorted(FILTER_BANKS))


def filter_bank(name: str):
    if name not in FILTER_BANKS:
        raise ValueError(f"unsupported wavelet {name!r}")
    if name not in _BANK_CACHE:
        _BANK_CACHE[name] = tuple(np.asarray(f, dtype=np.float64) for f in FILTER_BANKS[name])
    return _BANK_CACHE[name]


def filter_length(name: str) -> int:
    return len(filter_bank(name)[0])


@dataclass(frozen=True)
class WaveletSpec:
    """Wavelet family, order designator, and decomposition level."""

    family: str
    order: object
    level: int

    def __post_init__(self):
        if self.family not in FAMILY_PREFIX:
            raise ValueError(f"unknown wavelet family {self.family!r}")
        if self.level < 1:
            raise ValueError("level must be a positive integer")
        name = self.name
        if name not in FILTER_BANKS:
            raise ValueError(f"unsupported wavelet {name!r}")
        if filter_length(name) > MAX_FILTER_LENGTH:
            raise ValueError(f"{name}: filter length exceeds {MAX_FILTER_LENGTH} taps")

    @property
    def name(self) -> str:
        return f"{FAMILY_PREFIX[self.family]}{self.order}"


def max_level(signal_len: int, filter_len: int) -> int:
    """Deepest decomposition that keeps every level free of pure edge content."""
    if filter_len < 2:
        raise ValueError("filter_len must be at least 2")
    if signal_len < filter_len:
        raise ValueError("signal shorter than the filter")
    return int(math.floor(math.log2(signal_len / (filter_len - 1))))


def _dwt_step_sym(x, dec_lo, dec_hi):
    L = len(dec_lo)
    p = L - 1
    xp = np.concatenate([x[:p][::-1], x, x[-p:][::-1]]) if p else x.copy()
    return (np.convolve(xp, dec_lo, mode="valid")[1::2],
            np.convolve(xp, dec_hi, mode="valid")[1::2])


def _idwt_step_sym(a, d, rec_lo, rec_hi, n):
    L = len(rec_lo)
    ua = np.zeros(2 * len(a))
    ud = np.zeros(2 * len(d))
    ua[::2] = a
    ud[::2] = d
    y = np.convolve(ua, rec_lo) + np.convolve(ud, rec_hi)
    return y[L - 2:L - 2 + n]


def _dwt_step_per(x, dec_lo, dec_hi):
    L = len(dec_lo)
    if len(x) % 2:
        x = np.concatenate([x, x[-1:]])   # periodization pads odd lengths
    n = len(x)
    reps = -(-L // n) + 1
    xp = np.concatenate([x] * (2 * reps + 1))
    sl = slice(reps * n - L + 2, reps * n - L + 2 + n, 2)
    return (np.convolve(xp, dec_lo, mode="valid")[sl].copy(),
            np.convolve(xp, dec_hi, mode="valid")[sl].copy())


def _idwt_step_per(a, d, rec_lo, rec_hi, n):
    L = len(rec_lo)
    m = 2 * len(a)
    ua = np.zeros(m)
    ud = np.zeros(m)
    ua[::2] = a
    ud[::2] = d
    reps = -(-L // m) + 1
    up = np.concatenate([ua] * (2 * reps + 1))
    dp = np.concatenate([ud] * (2 * reps + 1))
    y = np.convolve(up, rec_lo) + np.convolve(dp, rec_hi)
    off = reps * m + L - 2
    return y[off:off + n]


@dataclass(frozen=True)
class DwtResult:
    """approx at the deepest level plus details; details[l] is level l+1 (finest first)."""

    approx: np.ndarray
    details: tuple[np.ndarray, ...]
    wavelet: str
    mode: str
    input_lengths: tuple[int, ...]   # signal length entering each analysis step


def dwt(signal, spec: WaveletSpec, mode: str = "symmetric") -> DwtResult:
    """Cascade filter bank with downsample-by-two per level."""
    x = np.asarray(signal, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError("signal must be one-dimensional")
    if mode not in ("symmetric", "periodic"):
        raise ValueError(f"unknown extension mode {mode!r}")
    name = spec.name
    dec_lo, dec_hi, _, _ = filter_bank(name)
    flen = len(dec_lo)
    if len(x) < flen:
        raise ValueError(f"signal length {len(x)} is shorter than the {flen}-tap filter")
    cap = max_level(len(x), flen)
    if spec.level > cap:
        raise ValueError(f"level {spec.level} exceeds max level {cap} for length {len(x)}")
    step = _dwt_step_sym if mode == "symmetric" else _dwt_step_per
    details = []
    lengths = []
    a = x
    for _ in range(spec.level):
        lengths.append(len(a))
        a, d = step(a, dec_lo, dec_hi)
        details.append(d)
    return DwtResult(a, tuple(details), name, mode, tuple(lengths))


def idwt(result: DwtResult) -> np.ndarray:
    """Inverse of dwt; exact up to floating-point roundoff."""
    _, _, rec_lo, rec_hi = filter_bank(result.wavelet)
    step = _idwt_step_sym if result.mode == "symmetric" else _idwt_step_per
    a = result.approx
    for d, n in zip(result.details[::-1], result.input_lengths[::-1]):
        a = step(a, d, rec_lo, rec_hi, n)
    return a


def wavelet_energy(detail) -> float:
    """Sum of squared detail coefficients."""
    d = np.asarray(detail, dtype=np.float64)
    return float(np.sum(d * d))


def parse_wavelet_name(name: str) -> tuple[str, str]:
    """Split a registry key like 'rbio3.9' into (family, order)."""
    for family, prefix in sorted(FAMILY_PREFIX.items(), key=lambda kv: -len(kv[1])):
        if name.startswith(prefix):
            return family, name[len(prefix):]
    raise ValueError(f"unrecognized wavelet name {name!r}")


def total_detail_energy(signal, name: str, mode: str = "symmetric") -> float:
    """Detail energy summed over all permissible levels for one wavelet."""
    x = np.asarray(signal, dtype=np.float64)
    level = max(max_level(len(x), filter_length(name)), 1)
    family, order = parse_wavelet_name(name)
    res = dwt(x, WaveletSpec(family, order, level), mode)
    return float(sum(wavelet_energy(d) for d in res.details))
