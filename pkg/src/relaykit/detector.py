"""Event detection on three-phase currents: cycle-ratio index scan and window capture.

Both detectors compare the cumulative sum of sample magnitudes of two adjacent
cycles. The scan advances one sample at a time; the index at decision sample u
compares the just-completed cycle [u-n_c, u) against the one before it
[u-2n_c, u-n_c). A trigger is declared only when a full lookahead cycle exists
after u, so a post-trigger capture is always possible; changes confined to the
final cycle of a record are therefore reported as not triggered.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .waveform import ThreePhaseRecord

PHASE_NAMES = ("a", "b", "c")


@dataclass(frozen=True)
class DetectorConfig:
    alpha: float = 0.05       # trigger threshold on the normalized index
    th: float = 0.05          # threshold for the change-detection scan
    pre_cycles: float = 0.5
    post_cycles: float = 1.0

    def __post_init__(self):
        if self.alpha <= 0 or self.th <= 0:
            raise ValueError("thresholds must be positive")
        if self.pre_cycles < 0:
            raise ValueError("pre_cycles must be non-negative")
        if self.post_cycles < 1:
            raise ValueError("post_cycles must be at least one cycle")


@dataclass(frozen=True)
class DetectionResult:
    triggered: bool
    trigger_index: int | None
    trigger_phase: str | None
    index_trace: np.ndarray          # (3, n) normalized index, zero outside scan range
    raw_trace: np.ndarray | None = None   # (3, n) unnormalized difference of cycle sums
    scan_start: int = 0
    scan_stop: int = 0

    def __post_init__(self):
        if self.triggered != (self.trigger_index is not None):
            raise ValueError("trigger_index must be present iff triggered")


def _cycle_sums(x: np.ndarray, n_c: int) -> np.ndarray:
    """W[k] = sum of |x| over [k, k+n_c) for k = 0..n-n_c."""
    c = np.concatenate([[0.0], np.cumsum(np.abs(x))])
    return c[n_c:] - c[:-n_c]


def _scan(record: ThreePhaseRecord, threshold: float, keep_raw: bool) -> DetectionResult:
    n_c = record.sampling.samples_per_cycle
    n = record.n_samples
    if n < 2 * n_c:
        raise ValueError(f"record holds {n} samples; need at least two cycles ({2 * n_c})")

    eps = max(1e-12 * float(np.abs(record.phases).max()), 1e-30)
    # decision samples u: both cycles [u-2nc, u-nc) and [u-nc, u) exist, plus one
    # lookahead cycle after u
    u_lo, u_hi = 2 * n_c, n - n_c
    traces = np.zeros((3, n))
    raw = np.zeros((3, n)) if keep_raw else None
    trigger_u: int | None = None
    trigger_phase: str | None = None
    if u_hi >= u_lo:      # nonempty scan requires at least three cycles
        for i in range(3):
            w = _cycle_sums(record.phases[i], n_c)   # w[k] = sum over [k, k+nc)
            cur = w[n_c:n - 2 * n_c + 1]             # cycle ending at u = k+2nc
            prev = w[:n - 3 * n_c + 1]
            diff = cur - prev
            idx = np.where(cur > eps, diff / np.where(cur > eps, cur, 1.0), 0.0)
            traces[i, u_lo:u_hi + 1] = idx
            if keep_raw:
                raw[i, u_lo:u_hi + 1] = diff
        hits = traces[:, u_lo:u_hi + 1] >= threshold
        if hits.any():
            flat_u = np.where(hits.any(axis=0))[0][0]
            trigger_u = u_lo + int(flat_u)
            trigger_phase = PHASE_NAMES[int(np.argmax(hits[:, flat_u]))]
    return DetectionResult(
        triggered=trigger_u is not None,
        trigger_index=trigger_u,
        trigger_phase=trigger_phase,
        index_trace=traces,
        raw_trace=raw,
        scan_start=u_lo,
        scan_stop=min(u_hi + 1, n),
    )


def ed_scan(record: ThreePhaseRecord, cfg: DetectorConfig) -> DetectionResult:
    """Fractional cycle-to-cycle increase of rectified current; triggers at >= alpha."""
    return _scan(record, cfg.alpha, keep_raw=False)


def cdf_scan(record: ThreePhaseRecord, cfg: DetectorConfig) -> DetectionResult:
    """Difference of adjacent-cycle rectified sums, normalized by the trailing cycle.

    The raw unnormalized difference is exposed in raw_trace; the threshold applies
    to the normalized index so the same th works in amperes or per-unit.
    """
    return _scan(record, cfg.th, keep_raw=True)


def capture(record: ThreePhaseRecord, det: DetectionResult,
            cfg: DetectorConfig) -> ThreePhaseRecord:
    """Window around the trigger: pre_cycles before it, post_cycles after it."""
    if not det.triggered:
        raise ValueError("cannot capture from an untriggered detection result")
    n_c = record.sampling.samples_per_cycle
    total = round((cfg.pre_cycles + cfg.post_cycles) * n_c)
    pre = int(cfg.pre_cycles * n_c)
    start = det.trigger_index - pre
    if start < 0:
        raise ValueError(f"capture needs {pre} pre-trigger samples, have {det.trigger_index}")
    if start + total > record.n_samples:
        raise ValueError("capture extends past the end of the record")
    from .waveform import window
    return window(record, start, total)
