"""Transformer fault models, inrush/sympathetic flux equations, PAR power identities,
and a parametric synthesizer that produces labeled three-phase transient records.

The inductance-matrix builders follow the single-phase 2- and 3-winding fault-model
scripts line by line (units taken literally: voltages in kV, power in MVA, ω in rad/s).
The synthesizer is an explicit surrogate: each event class is a parametric waveform
family, not a circuit solution; circuit-accurate traces come from simulate_coupled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .waveform import SamplingSpec, ThreePhaseRecord, TransientLabel

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class TwoWindingParams:
    """Rating and test data of a single-phase 2-winding transformer."""

    mva: float
    v1: float
    v2: float
    f: float
    im: float   # reactive no-load current, fraction of rated
    xl: float   # per-unit leakage reactance

    def __post_init__(self):
        if min(self.mva, self.v1, self.v2, self.f, self.im, self.xl) <= 0:
            raise ValueError("all 2-winding parameters must be strictly positive")
        if self.im >= 1:
            raise ValueError("im is a fraction of rated current and must be < 1")


@dataclass(frozen=True)
class ThreeWindingParams:
    """Rating and pairwise short-circuit reactances of a 3-winding transformer."""

    mva: float
    v1: float
    v2: float
    v3: float
    f: float
    im: float
    x12: float
    x13: float
    x23: float

    def __post_init__(self):
        vals = (self.mva, self.v1, self.v2, self.v3, self.f, self.im,
                self.x12, self.x13, self.x23)
        if min(vals) <= 0:
            raise ValueError("all 3-winding parameters must be strictly positive")
        if self.im >= 1:
            raise ValueError("im is a fraction of rated current and must be < 1")


@dataclass(frozen=True)
class WindingFaultSpec:
    """Tap split of each winding in percent of turns; the complements are derived."""

    fault1_pct: float
    fault2_pct: float

    def __post_init__(self):
        for p in (self.fault1_pct, self.fault2_pct):
            if not 0.0 <= p <= 100.0:
                raise ValueError(f"fault percentage {p} outside [0, 100]")


@dataclass(frozen=True)
class InductanceMatrix:
    """Symmetric PSD self/mutual inductance matrix of the coupled-coil fault model."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=np.float64)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in (4, 6):
            raise ValueError("inductance matrix must be 4x4 or 6x6")
        scale = float(np.abs(m).max()) or 1.0
        if np.abs(m - m.T).max() > 1e-12 * scale:
            raise ValueError("inductance matrix must be symmetric")
        if np.diag(m).min() < 0:
            raise ValueError("self inductances must be non-negative")
        if np.linalg.eigvalsh(m).min() < -1e-9 * scale:
            raise ValueError("inductance matrix must be positive semidefinite")
        m = np.ascontiguousarray(m)
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @property
    def order(self) -> int:
        return self.entries.shape[0]


def two_winding_matrix(p: TwoWindingParams, f: WindingFaultSpec) -> InductanceMatrix:
    """4x4 coupled-coil matrix of a faulted 2-winding transformer.

    Each winding is split in two sub-coils at the fault tap; leakage halves scale
    with the split fractions, magnetizing parts with their squares, mutuals as
    geometric means of the magnetizing parts.
    """
    fa = f.fault1_pct * 0.01
    fb = 1.0 - fa
    fc = f.fault2_pct * 0.01
    fd = 1.0 - fc
    i1 = p.mva / p.v1
    i2 = p.mva / p.v2
    z1 = p.v1 / i1
    z2 = p.v2 / i2
    w = TWO_PI * p.f
    lk1 = p.xl * z1 / w
    lk2 = p.xl * z2 / w
    leak = np.array([lk1 / 2 * fa, lk1 / 2 * fb, lk2 / 2 * fc, lk2 / 2 * fd])
    l1 = p.v1 / (w * p.im * i1)
    l2 = p.v2 / (w * p.im * i2)
    mag = np.array([l1 * fa * fa, l1 * fb * fb, l2 * fc * fc, l2 * fd * fd])
    return _assemble(leak, mag)


def three_winding_matrix(p: ThreeWindingParams, f1_pct: float, f2_pct: float,
                         f3_pct: float) -> InductanceMatrix:
    """6x6 coupled-coil matrix of a faulted 3-winding transformer.

    Winding leakages come from the delta-to-star split of the pairwise
    short-circuit reactances; negative star terms mean inconsistent test data.
    """
    for pct in (f1_pct, f2_pct, f3_pct):
        if not 0.0 <= pct <= 100.0:
            raise ValueError(f"fault percentage {pct} outside [0, 100]")
    fa = f1_pct * 0.01
    fb = 1.0 - fa
    fc = f2_pct * 0.01
    fd = 1.0 - fc
    fe = f3_pct * 0.01
    ff = 1.0 - fe
    i1, i2, i3 = p.mva / p.v1, p.mva / p.v2, p.mva / p.v3
    z1, z2, z3 = p.v1 / i1, p.v2 / i2, p.v3 / i3
    w = TWO_PI * p.f
    x1 = (p.x13 - p.x23 + p.x12) / 2
    x2 = (p.x23 - p.x13 + p.x12) / 2
    x3 = (p.x13 - p.x12 + p.x23) / 2
    if min(x1, x2, x3) < 0:
        raise ValueError("inconsistent short-circuit reactances: negative star term")
    lk1, lk2, lk3 = x1 * z1 / w, x2 * z2 / w, x3 * z3 / w
    leak = np.array([lk1 * fa, lk1 * fb, lk2 * fc, lk2 * fd, lk3 * fe, lk3 * ff])
    l1 = p.v1 / (w * p.im * i1)
    l2 = p.v2 / (w * p.im * i2)
    l3 = p.v3 / (w * p.im * i3)
    mag = np.array([l1 * fa ** 2, l1 * fb ** 2, l2 * fc ** 2, l2 * fd ** 2,
                    l3 * fe ** 2, l3 * ff ** 2])
    return _assemble(leak, mag)


def _assemble(leak: np.ndarray, mag: np.ndarray) -> InductanceMatrix:
    # magnetizing block is the rank-1 outer product of sqrt(mag), hence PSD
    root = np.sqrt(mag)
    m = np.outer(root, root)
    np.fill_diagonal(m, leak + mag)
    return InductanceMatrix(m)


def simulate_coupled(L: InductanceMatrix, series_resistance: Sequence[float],
                     source: Sequence[Callable[[float], float]],
                     duration_s: float, dt_s: float) -> tuple[np.ndarray, np.ndarray]:
    """Fixed-step trapezoidal integration of v = R i + L di/dt from i(0) = 0.

    Returns (times, currents) with currents shaped (n_coils, len(times)).
    """
    n = L.order
    r = np.asarray(series_resistance, dtype=np.float64)
    if r.shape != (n,):
        raise ValueError(f"expected {n} series resistances")
    if len(source) != n:
        raise ValueError(f"expected {n} source functions")
    if duration_s <= 0 or dt_s <= 0:
        raise ValueError("duration_s and dt_s must be positive")
    rmat = np.diag(r)
    lhs = L.entries + 0.5 * dt_s * rmat
    if np.linalg.cond(lhs) > 1e14:
        raise ValueError("coupling matrix is singular; add series resistance")
    rhs_mat = L.entries - 0.5 * dt_s * rmat
    steps = int(round(duration_s / dt_s))
    times = np.arange(steps + 1) * dt_s
    v = np.array([[fn(t) for fn in source] for t in times])
    currents = np.zeros((steps + 1, n))
    lu = np.linalg.inv(lhs)  # constant system matrix, invert once
    for k in range(steps):
        b = rhs_mat @ currents[k] + 0.5 * dt_s * (v[k] + v[k + 1])
        currents[k + 1] = lu @ b
    return times, currents.T


def energy_balance(L: InductanceMatrix, series_resistance: Sequence[float],
                   times: np.ndarray, currents: np.ndarray,
                   source: Sequence[Callable[[float], float]]) -> dict:
    """Delivered, dissipated, and stored energy of a simulate_coupled run."""
    r = np.asarray(series_resistance, dtype=np.float64)
    v = np.array([[fn(t) for fn in source] for t in times]).T
    delivered = float(np.trapezoid(np.sum(v * currents, axis=0), times))
    dissipated = float(np.trapezoid(np.sum(r[:, None] * currents ** 2, axis=0), times))
    i_end = currents[:, -1]
    stored = float(0.5 * i_end @ L.entries @ i_end)
    return {"delivered": delivered, "dissipated": dissipated, "stored": stored}


def inrush_flux(phi_r: float, phi_m: float, t_switch_s: float, t_s: float,
                omega: float) -> float:
    """Core flux after switching: residual plus the offset cosine pair."""
    if phi_m <= 0:
        raise ValueError("phi_m must be positive")
    return phi_r + phi_m * math.cos(omega * t_switch_s) - phi_m * math.cos(omega * (t_s + t_switch_s))


def sympathetic_flux_increment(r_sys: float, r_par: float, i1_cycle: Sequence[float],
                               i2_cycle: Sequence[float], dt_s: float) -> float:
    """Per-cycle flux change driving an energized unit toward saturation."""
    i1 = np.asarray(i1_cycle, dtype=np.float64)
    i2 = np.asarray(i2_cycle, dtype=np.float64)
    if i1.shape != i2.shape:
        raise ValueError("current sequences must have equal length")
    integrand = (r_sys + r_par) * i1 + r_sys * i2
    return float(np.trapezoid(integrand, dx=dt_s))


def quadrature_voltage(v_ph: float, alpha_deg: float) -> float:
    """Quadrature voltage magnitude required for a given phase shift."""
    if abs(alpha_deg) > 180:
        raise ValueError("alpha_deg must lie in [-180, 180]")
    return v_ph * 2.0 * math.sin(math.radians(alpha_deg) / 2.0)


def par_power(v_s: float, v_l: float, x_line: float, x_par: float,
              delta_deg: float, alpha_deg: float) -> float:
    """Real power across a line with a phase angle regulator in series."""
    x_total = x_line + x_par
    if x_total <= 0:
        raise ValueError("total reactance must be positive")
    return v_s * v_l / x_total * math.sin(math.radians(delta_deg + alpha_deg))


# ---------------------------------------------------------------------------
# Parametric scenario synthesizer
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SynthesisScenario:
    """Recipe for one labeled transient record."""

    label: TransientLabel
    amplitude_pu: float = 5.0
    dc_tau_s: float = 0.05
    harmonic_mix: Mapping[int, float] = field(default_factory=dict)
    saturation_knee: float = 0.6
    inception_index: int = -1   # -1 selects two cycles into the record
    seed: int = 0

    def __post_init__(self):
        if self.amplitude_pu <= 0:
            raise ValueError("amplitude_pu must be positive")
        if any(v < 0 for v in self.harmonic_mix.values()):
            raise ValueError("harmonic fractions must be non-negative")
        if not 0.0 < self.saturation_knee < 1.0:
            raise ValueError("saturation_knee must lie in (0, 1)")


def scenario_to_dict(sc: SynthesisScenario) -> dict:
    return {
        "label": sc.label.to_string(),
        "amplitude_pu": sc.amplitude_pu,
        "dc_tau_s": sc.dc_tau_s,
        "harmonic_mix": {str(h): f for h, f in sc.harmonic_mix.items()},
        "saturation_knee": sc.saturation_knee,
        "inception_index": sc.inception_index,
        "seed": sc.seed,
    }


def scenario_from_dict(d: dict) -> SynthesisScenario:
    label = TransientLabel.from_string(d["label"])
    if label is None:
        raise ValueError("scenario needs a non-empty label")
    defaults = SynthesisScenario(label=label)
    return SynthesisScenario(
        label=label,
        amplitude_pu=float(d.get("amplitude_pu", defaults.amplitude_pu)),
        dc_tau_s=float(d.get("dc_tau_s", defaults.dc_tau_s)),
        harmonic_mix={int(h): float(f)
                      for h, f in dict(d.get("harmonic_mix", {})).items()},
        saturation_knee=float(d.get("saturation_knee", defaults.saturation_knee)),
        inception_index=int(d.get("inception_index", defaults.inception_index)),
        seed=int(d.get("seed", defaults.seed)),
    )


#: phases carrying fault current per fault type; turn-to-turn and
#: winding-to-winding faults strike a seed-chosen phase or pair at low current
_FAULT_PHASES = {
    "wa-g": (0,), "wb-g": (1,), "wc-g": (2,),
    "wab-g": (0, 1), "wac-g": (0, 2), "wbc-g": (1, 2),
    "wab": (0, 1), "wac": (0, 2), "wbc": (1, 2),
    "3-ph": (0, 1, 2), "3-ph-g": (0, 1, 2),
}

#: fault types whose ground path admits a decaying DC component
_GROUNDED_TYPES = frozenset(
    {"wa-g", "wb-g", "wc-g", "wab-g", "wac-g", "wbc-g", "3-ph-g"})

_UNIT_SCALE = {"power_transformer": 1.0, "ispar_series": 0.8, "ispar_exciting": 0.65}

#: pre-event differential current level (CT mismatch) for transformer-side
#: classes; swing-side classes ride on full load current instead
_MISMATCH_PU = 0.02
_PHASE_OFFSETS = (0.0, -TWO_PI / 3.0, TWO_PI / 3.0)


def steady_record(spec: SamplingSpec, n_cycles: int, amplitude_pu: float = 1.0,
                  seed: int = 0, kind: str = "current") -> ThreePhaseRecord:
    """Unlabeled steady-state sinusoid; the quiescent (no event) waveform."""
    rng = np.random.default_rng(seed)
    t, _ = _time_base(spec, n_cycles)
    w = TWO_PI * spec.nominal_freq_hz
    jitter = rng.uniform(0, TWO_PI)
    phases = np.stack([amplitude_pu * np.sin(w * t + jitter + off)
                       for off in _PHASE_OFFSETS])
    return ThreePhaseRecord(phases, kind, spec)


def _time_base(spec: SamplingSpec, n_cycles: int) -> tuple[np.ndarray, int]:
    n_c = spec.samples_per_cycle
    n = n_cycles * n_c
    return np.arange(n) / spec.sample_rate_hz, n_c


def synthesize(scenario: SynthesisScenario, spec: SamplingSpec,
               n_cycles: int) -> ThreePhaseRecord:
    """Labeled current record whose waveform family matches the scenario category."""
    current, _ = _synthesize_impl(scenario, spec, n_cycles, want_voltage=False)
    return current


def synthesize_pair(scenario: SynthesisScenario, spec: SamplingSpec,
                    n_cycles: int) -> tuple[ThreePhaseRecord, ThreePhaseRecord]:
    """Current and matching voltage record; the swing pipeline needs both."""
    return _synthesize_impl(scenario, spec, n_cycles, want_voltage=True)


def _synthesize_impl(scenario, spec, n_cycles, want_voltage):
    if n_cycles < 3:
        raise ValueError("n_cycles must be at least 3")
    category = scenario.label.category
    if category not in (
        "internal_fault", "magnetizing_inrush", "sympathetic_inrush",
        "overexcitation", "external_fault_ct_sat", "ferroresonance",
        "capacitor_switching", "nonlinear_load_switching", "power_swing",
        "fault_during_swing",
    ):
        raise ValueError(f"unknown category {category!r}")

    rng = np.random.default_rng(scenario.seed)
    t, n_c = _time_base(spec, n_cycles)
    n = t.shape[0]
    f0 = spec.nominal_freq_hz
    w = TWO_PI * f0
    s0 = scenario.inception_index if scenario.inception_index >= 0 else 2 * n_c
    if not n_c <= s0 < n - n_c:
        raise ValueError("inception_index must leave one pre-event cycle and one post-event cycle")
    t0 = t[s0]
    tau = np.where(t >= t0, t - t0, 0.0)
    on = (t >= t0).astype(np.float64)
    jitter = rng.uniform(0, TWO_PI)
    amp = scenario.amplitude_pu

    swingish = category in ("power_swing", "fault_during_swing")
    base_amp = 1.0 if swingish else _MISMATCH_PU
    phases = np.stack([base_amp * np.sin(w * t + jitter + off) for off in _PHASE_OFFSETS])
    volts = np.stack([np.sin(w * t + jitter + off + TWO_PI / 4) for off in _PHASE_OFFSETS])

    if category == "internal_fault":
        _add_fault(phases, volts, scenario, t, tau, on, w, jitter, rng, amp)
    elif category == "magnetizing_inrush":
        decay = np.exp(-tau / max(10 * scenario.dc_tau_s, 0.1))
        knee = scenario.saturation_knee
        for i, off in enumerate(_PHASE_OFFSETS):
            hump = np.maximum(np.cos(w * t + jitter + off) - knee, 0.0) / (1.0 - knee)
            phases[i] += on * amp * decay * hump
        for i in range(3):
            volts[i] *= 1.0 - 0.08 * on
    elif category == "sympathetic_inrush":
        ramp = 1.0 - np.exp(-tau / 0.08)
        knee = scenario.saturation_knee
        for i, off in enumerate(_PHASE_OFFSETS):
            hump = np.maximum(np.cos(w * t + jitter + off) - knee, 0.0) / (1.0 - knee)
            phases[i] -= on * 0.7 * amp * ramp * hump
        for i in range(3):
            volts[i] *= 1.0 - 0.05 * on
    elif category == "overexcitation":
        level = 0.35 * amp
        for i, off in enumerate(_PHASE_OFFSETS):
            ph = w * t + jitter + off
            phases[i] += on * level * (np.sin(ph) + 0.50 * np.sin(5 * ph)
                                       + 0.25 * np.sin(3 * ph) + 0.15 * np.sin(7 * ph))
        for i in range(3):
            volts[i] *= 1.0 + 0.12 * on
    elif category == "external_fault_ct_sat":
        # saturated CTs reproduce the early part of each half cycle and then
        # collapse, leaving spiky crescents plus a strong second harmonic
        dc_sign = rng.choice((-1.0, 1.0))
        for i, off in enumerate(_PHASE_OFFSETS):
            ph = w * t + jitter + off
            raw = amp * (np.sin(ph) + dc_sign * 0.6 * np.exp(-tau / max(scenario.dc_tau_s, 1e-3)))
            half_pos = np.mod(ph, np.pi) / np.pi
            gate = 0.12 + 0.88 * np.exp(-4.0 * half_pos)
            phases[i] += on * (raw * gate + 0.15 * amp * np.sin(2 * ph))
        for i in range(3):
            volts[i] *= 1.0 - 0.25 * on
    elif category == "ferroresonance":
        for i, off in enumerate(_PHASE_OFFSETS):
            ph = w * t + jitter + off
            sq = np.tanh(3.2 * np.sin(ph + 0.15 * np.sin(0.5 * w * t)))
            phases[i] += on * 0.8 * amp * (sq + 0.22 * np.sin(3 * ph) + 0.12 * np.sin(5 * ph))
        for i in range(3):
            volts[i] *= 1.0 + 0.18 * on * np.sin(0.5 * w * t + jitter)
    elif category == "capacitor_switching":
        f_hf = min(650.0, 0.35 * spec.sample_rate_hz)
        ring = np.exp(-tau / 0.015) * np.sin(TWO_PI * f_hf * tau + jitter)
        for i, off in enumerate(_PHASE_OFFSETS):
            ph = w * t + jitter + off
            phases[i] += on * (0.25 * amp * np.sin(ph) + amp * ring * (0.9 + 0.1 * math.cos(off)))
        for i in range(3):
            volts[i] *= 1.0 + 0.10 * on * np.exp(-tau / 0.02)
    elif category == "nonlinear_load_switching":
        for i, off in enumerate(_PHASE_OFFSETS):
            ph = w * t + jitter + off
            phases[i] += on * 0.5 * amp * (np.sin(ph) + 0.30 * np.sin(5 * ph + 0.4)
                                           + 0.18 * np.sin(7 * ph) + 0.10 * np.sin(11 * ph)
                                           + 0.06 * np.sin(13 * ph))
    elif category == "power_swing":
        detail = scenario.label.swing_detail
        _add_swing(phases, volts, detail.stability, detail.symmetry, t, tau, on, w,
                   jitter, rng, amp)
    elif category == "fault_during_swing":
        _add_swing(phases, volts, "stable", "symmetrical", t, t - t[n_c], (t >= t[n_c]).astype(float),
                   w, jitter, rng, amp)
        _add_fault(phases, volts, scenario, t, tau, on, w, jitter, rng, 2.2 * amp)

    for h, frac in scenario.harmonic_mix.items():
        if frac:
            for i, off in enumerate(_PHASE_OFFSETS):
                phases[i] += on * frac * amp * np.sin(h * (w * t + jitter + off))

    meta = {"scenario_seed": str(scenario.seed), "inception_index": str(s0)}
    current = ThreePhaseRecord(phases, "current", spec, label=scenario.label, meta=dict(meta))
    if not want_voltage:
        return current, None
    voltage = ThreePhaseRecord(volts, "voltage", spec, label=scenario.label, meta=dict(meta))
    return current, voltage


def _add_fault(phases, volts, scenario, t, tau, on, w, jitter, rng, amp):
    label = scenario.label
    detail = label.fault_detail
    unit_scale = _UNIT_SCALE[detail.unit] if detail is not None else 1.0
    ftype = detail.type if detail is not None else "3-ph-g"
    if ftype == "t-t":
        involved: tuple = (int(rng.integers(0, 3)),)
        level = amp * unit_scale * 0.15
    elif ftype == "w-w":
        involved = ((0, 1), (0, 2), (1, 2))[int(rng.integers(0, 3))]
        level = amp * unit_scale * 0.30
    else:
        involved = _FAULT_PHASES[ftype]
        level = amp * unit_scale
    dc_gain = 1.0 if ftype in _GROUNDED_TYPES else 0.0
    theta = rng.uniform(0, TWO_PI)
    tau_dc = max(scenario.dc_tau_s, 1e-4)
    for i in involved:
        ph = w * t + jitter + _PHASE_OFFSETS[i] + theta
        inc = ph[np.argmax(on > 0)] if on.any() else 0.0
        wave = np.sin(ph) - dc_gain * math.sin(inc) * np.exp(-tau / tau_dc)
        phases[i] += on * level * wave
        volts[i] *= 1.0 - on * 0.45
    # unit fingerprints: the locate stage learns these harmonic signatures
    if detail is not None:
        for i in involved:
            ph = w * t + jitter + _PHASE_OFFSETS[i] + theta
            if detail.unit == "ispar_exciting":
                phases[i] += on * 0.18 * level * np.sin(2 * ph)
            elif detail.unit == "ispar_series":
                phases[i] += on * 0.12 * level * np.sin(3 * ph)


def _add_swing(phases, volts, stability, symmetry, t, tau, on, w, jitter, rng, amp):
    f_slip = rng.uniform(3.0, 7.0)   # slip frequency inside the 0.3..7 Hz band
    depth_scale = (1.0, 1.0, 1.0) if symmetry == "symmetrical" else (1.0, 0.45, 0.7)
    unstable = stability == "unstable"
    for i, off in enumerate(_PHASE_OFFSETS):
        if unstable:
            # losing synchronism: amplitude grows while the slip wobble persists
            env = 1.0 + 3.5 * tau
            depth = 0.20 * np.ones_like(tau)
        else:
            env = np.ones_like(tau)
            depth = 0.40 * np.exp(-tau / 0.4)
        mod = env * (1.0 + depth_scale[i] * depth * np.sin(TWO_PI * f_slip * tau))
        swing = amp * 0.6 * mod * np.sin(w * t + jitter + off + 0.8 * np.sin(TWO_PI * f_slip * tau))
        phases[i] = np.where(on > 0, swing, phases[i])
        dip = np.minimum(0.3 + 2.0 * tau, 0.7) if unstable else 0.25 * np.exp(-tau / 0.6)
        vdip = 1.0 - depth_scale[i] * dip * (0.5 + 0.5 * np.sin(TWO_PI * f_slip * tau - TWO_PI / 4))
        volts[i] *= np.where(on > 0, vdip, 1.0)
