"""Three-phase transient records: sampling arithmetic, noise injection, windowing, CSV I/O.

Records are immutable after construction and safe to share between threads;
every operation here is a pure function of its inputs plus an explicit seed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Sequence

import numpy as np

CATEGORIES = (
    "internal_fault",
    "magnetizing_inrush",
    "sympathetic_inrush",
    "overexcitation",
    "external_fault_ct_sat",
    "ferroresonance",
    "capacitor_switching",
    "nonlinear_load_switching",
    "power_swing",
    "fault_during_swing",
)

FAULT_UNITS = ("power_transformer", "ispar_series", "ispar_exciting")

FAULT_TYPES = (
    "wa-g", "wb-g", "wc-g",
    "wab-g", "wac-g", "wbc-g",
    "wab", "wac", "wbc",
    "w-w", "t-t", "3-ph", "3-ph-g",
)

SWING_STABILITIES = ("stable", "unstable")
SWING_SYMMETRIES = ("symmetrical", "asymmetrical")

#: categories that must carry a fault_detail
_FAULTISH = ("internal_fault", "fault_during_swing")


@dataclass(frozen=True)
class FaultDetail:
    unit: str
    type: str

    def __post_init__(self):
        if self.unit not in FAULT_UNITS:
            raise ValueError(f"unknown fault unit {self.unit!r}")
        if self.type not in FAULT_TYPES:
            raise ValueError(f"unknown fault type {self.type!r}")


@dataclass(frozen=True)
class SwingDetail:
    stability: str
    symmetry: str

    def __post_init__(self):
        if self.stability not in SWING_STABILITIES:
            raise ValueError(f"unknown swing stability {self.stability!r}")
        if self.symmetry not in SWING_SYMMETRIES:
            raise ValueError(f"unknown swing symmetry {self.symmetry!r}")


@dataclass(frozen=True)
class TransientLabel:
    """Event class of a record, with per-category detail blocks."""

    category: str
    fault_detail: FaultDetail | None = None
    swing_detail: SwingDetail | None = None

    def __post_init__(self):
        if self.category not in CATEGORIES:
            raise ValueError(f"unknown category {self.category!r}")
        if (self.fault_detail is not None) != (self.category in _FAULTISH):
            raise ValueError(
                f"fault_detail must be present iff category in {_FAULTISH}, got {self.category!r}"
            )
        if (self.swing_detail is not None) != (self.category == "power_swing"):
            raise ValueError("swing_detail must be present iff category is power_swing")

    def to_string(self) -> str:
        if self.fault_detail is not None:
            return f"{self.category}/{self.fault_detail.unit}/{self.fault_detail.type}"
        if self.swing_detail is not None:
            return f"{self.category}/{self.swing_detail.stability}/{self.swing_detail.symmetry}"
        return self.category

    @staticmethod
    def from_string(text: str) -> "TransientLabel | None":
        if not text:
            return None
        parts = text.split("/")
        category = parts[0]
        if category in _FAULTISH:
            if len(parts) != 3:
                raise ValueError(f"label {text!r}: expected category/unit/type")
            return TransientLabel(category, fault_detail=FaultDetail(parts[1], parts[2]))
        if category == "power_swing":
            if len(parts) != 3:
                raise ValueError(f"label {text!r}: expected category/stability/symmetry")
            return TransientLabel(category, swing_detail=SwingDetail(parts[1], parts[2]))
        if len(parts) != 1:
            raise ValueError(f"label {text!r}: category {category!r} takes no detail")
        return TransientLabel(category)


@dataclass(frozen=True)
class SamplingSpec:
    """Sampling rate and nominal system frequency; samples_per_cycle is derived."""

    sample_rate_hz: float
    nominal_freq_hz: float

    def __post_init__(self):
        if self.sample_rate_hz <= 0 or self.nominal_freq_hz <= 0:
            raise ValueError("sample_rate_hz and nominal_freq_hz must be positive")
        if self.sample_rate_hz <= 2 * self.nominal_freq_hz:
            raise ValueError("sample_rate_hz must exceed twice the nominal frequency")
        if self.samples_per_cycle < 8:
            raise ValueError("fewer than 8 samples per cycle")

    @property
    def samples_per_cycle(self) -> int:
        return int(round(self.sample_rate_hz / self.nominal_freq_hz))

    @property
    def dt_s(self) -> float:
        return 1.0 / self.sample_rate_hz


def _as_phase_array(phases) -> np.ndarray:
    arr = np.asarray(phases, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != 3:
        raise ValueError(f"phases must be a 3 x n array, got shape {arr.shape}")
    if arr.shape[1] < 1:
        raise ValueError("phases must hold at least one sample")
    if not np.isfinite(arr).all():
        raise ValueError("phases contain non-finite samples")
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class ThreePhaseRecord:
    """Sampled 3-phase current or voltage window with optional label."""

    phases: np.ndarray
    kind: str
    sampling: SamplingSpec
    label: TransientLabel | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "phases", _as_phase_array(self.phases))
        if self.kind not in ("current", "voltage"):
            raise ValueError(f"kind must be 'current' or 'voltage', got {self.kind!r}")

    def __len__(self) -> int:
        return self.phases.shape[1]

    @property
    def n_samples(self) -> int:
        return self.phases.shape[1]

    def phase(self, name: str) -> np.ndarray:
        return self.phases["abc".index(name)]

    def with_label(self, label: TransientLabel | None) -> "ThreePhaseRecord":
        return replace(self, label=label)


def cycle_count(spec: SamplingSpec, seconds: float) -> int:
    """Whole nominal-frequency cycles contained in a duration."""
    if seconds < 0:
        raise ValueError("seconds must be non-negative")
    scaled = seconds * spec.nominal_freq_hz
    n = math.floor(scaled)
    # absorb float representation error when the duration is an exact multiple
    if scaled - n > 1 - 1e-9:
        n += 1
    return n


def add_noise(record: ThreePhaseRecord, snr_db: float, seed: int) -> ThreePhaseRecord:
    """Add zero-mean white Gaussian noise per phase at the requested SNR.

    snr_db = math.inf is the no-noise sentinel and returns an identical record.
    """
    if math.isinf(snr_db) and snr_db > 0:
        return replace(record, meta=dict(record.meta))
    rng = np.random.default_rng(seed)
    out = np.empty_like(record.phases)
    for i in range(3):
        x = record.phases[i]
        signal_power = float(np.mean(x * x))
        if signal_power == 0.0:
            raise ValueError(f"phase {'abc'[i]} is all-zero; SNR undefined")
        noise_power = signal_power / (10.0 ** (snr_db / 10.0))
        out[i] = x + rng.normal(0.0, math.sqrt(noise_power), x.shape[0])
    meta = dict(record.meta)
    meta["snr_db"] = repr(snr_db)
    return replace(record, phases=out, meta=meta)


def window(record: ThreePhaseRecord, start_index: int, length: int) -> ThreePhaseRecord:
    """Exact slice of a record; label and sampling are preserved."""
    if start_index < 0 or length < 1:
        raise ValueError("start_index must be >= 0 and length >= 1")
    if start_index + length > record.n_samples:
        raise ValueError(
            f"window [{start_index}, {start_index + length}) exceeds record length {record.n_samples}"
        )
    return replace(record, phases=record.phases[:, start_index:start_index + length].copy())


CSV_HEADER = "t,pa,pb,pc,label"


def _sidecar_path(path: Path) -> Path:
    return path.with_suffix(".json")


def write_csv(records: Sequence[ThreePhaseRecord], path) -> None:
    """Write records to one CSV file plus a JSON sidecar with the sampling spec.

    All records in a file share one sampling spec and kind; the time column
    restarts at zero for each record.
    """
    path = Path(path)
    records = list(records)
    if records:
        spec = records[0].sampling
        kind = records[0].kind
        for r in records:
            if r.sampling != spec or r.kind != kind:
                raise ValueError("all records in one file must share sampling spec and kind")
    else:
        spec, kind = SamplingSpec(10_000.0, 60.0), "current"
    lines = [CSV_HEADER]
    for r in records:
        lbl = r.label.to_string() if r.label is not None else ""
        dt = r.sampling.dt_s
        for i in range(r.n_samples):
            t = 0.0 if i == 0 else i * dt
            lines.append(
                f"{t:.17g},{r.phases[0, i]:.17g},{r.phases[1, i]:.17g},{r.phases[2, i]:.17g},{lbl}"
            )
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    sidecar = {
        "kind": kind,
        "sample_rate_hz": spec.sample_rate_hz,
        "nominal_freq_hz": spec.nominal_freq_hz,
        "units": "A" if kind == "current" else "kV",
    }
    _sidecar_path(path).write_text(json.dumps(sidecar) + "\n", encoding="utf-8")


def read_csv(path) -> list[ThreePhaseRecord]:
    """Read records written by write_csv; errors name the offending line number."""
    path = Path(path)
    sidecar_file = _sidecar_path(path)
    if not sidecar_file.exists():
        raise ValueError(f"missing sidecar {sidecar_file.name}")
    sidecar = json.loads(sidecar_file.read_text(encoding="utf-8"))
    spec = SamplingSpec(float(sidecar["sample_rate_hz"]), float(sidecar["nominal_freq_hz"]))
    kind = sidecar["kind"]

    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or lines[0].strip() != CSV_HEADER:
        raise ValueError(f"line 1: expected header {CSV_HEADER!r}")

    records: list[ThreePhaseRecord] = []
    cur: list[list[float]] = []
    cur_label = ""

    def flush():
        if cur:
            arr = np.array(cur, dtype=np.float64).T
            records.append(
                ThreePhaseRecord(arr, kind, spec, label=TransientLabel.from_string(cur_label))
            )

    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cells = line.split(",")
        if len(cells) != 5:
            raise ValueError(f"line {lineno}: expected 5 columns, got {len(cells)}")
        try:
            t = float(cells[0])
            pa, pb, pc = float(cells[1]), float(cells[2]), float(cells[3])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if not all(map(math.isfinite, (t, pa, pb, pc))):
            raise ValueError(f"line {lineno}: non-finite value")
        if t == 0.0:
            flush()
            cur = []
            cur_label = cells[4]
        elif cells[4] != cur_label:
            raise ValueError(f"line {lineno}: label changed mid-record")
        if not cur and t != 0.0:
            raise ValueError(f"line {lineno}: record does not start at t=0")
        cur.append([pa, pb, pc])
    flush()
    return records
