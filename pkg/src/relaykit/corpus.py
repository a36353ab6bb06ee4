"""Desk-scale labeled corpus: scenario plans for the twelve event classes,
record generation with per-record noise, and assembly of per-stage training
datasets for the classifier cascade."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .detector import capture, cdf_scan
from .features import extract
from .learn import Dataset
from .relay.cascade import DISTURBANCE_CLASSES, CascadeConfig, SwingCapture
from .txmodel import SynthesisScenario, synthesize, synthesize_pair
from .waveform import (FAULT_TYPES, FAULT_UNITS, FaultDetail, SamplingSpec, SwingDetail,
                       ThreePhaseRecord, TransientLabel, add_noise, window)

#: the twelve corpus classes: three fault locations, seven disturbances, and
#: the two swing-side events
CORPUS_CLASSES = (
    "internal_fault/power_transformer",
    "internal_fault/ispar_series",
    "internal_fault/ispar_exciting",
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

#: classes that carry a voltage channel (needed by the swing stages)
_PAIRED = ("internal_fault/power_transformer", "internal_fault/ispar_series",
           "internal_fault/ispar_exciting", "power_swing", "fault_during_swing")

_SWINGISH = ("power_swing", "fault_during_swing")

DIFFERENTIAL_CYCLES = 7
SWING_CYCLES = 14


def class_key(label: TransientLabel) -> str:
    """Corpus class of a label: category, with internal faults split by unit."""
    if label.category == "internal_fault":
        return f"internal_fault/{label.fault_detail.unit}"
    return label.category


@dataclass(frozen=True)
class CorpusRecord:
    current: ThreePhaseRecord
    voltage: ThreePhaseRecord | None
    scenario: SynthesisScenario

    @property
    def key(self) -> str:
        return class_key(self.scenario.label)


def _label_for(key: str, i: int, rng) -> TransientLabel:
    if key.startswith("internal_fault/"):
        unit = key.split("/", 1)[1]
        return TransientLabel("internal_fault",
                              fault_detail=FaultDetail(unit, FAULT_TYPES[i % len(FAULT_TYPES)]))
    if key == "fault_during_swing":
        unit = FAULT_UNITS[i % 3]
        return TransientLabel("fault_during_swing",
                              fault_detail=FaultDetail(unit, FAULT_TYPES[i % len(FAULT_TYPES)]))
    if key == "power_swing":
        stability = "stable" if i % 2 == 0 else "unstable"
        symmetry = "symmetrical" if (i // 2) % 2 == 0 else "asymmetrical"
        return TransientLabel("power_swing", swing_detail=SwingDetail(stability, symmetry))
    return TransientLabel(key)


def scenario_plan(per_class: int = 200, seed: int = 0,
                  classes=CORPUS_CLASSES) -> list[SynthesisScenario]:
    """Deterministic scenario list: per_class scenarios of every corpus class
    with jittered amplitudes, time constants, and inception samples."""
    master = np.random.default_rng(seed)
    plan = []
    for key in classes:
        for i in range(per_class):
            rng = np.random.default_rng(master.integers(0, 2 ** 62))
            label = _label_for(key, i, rng)
            swingish = key in _SWINGISH
            amplitude = rng.uniform(1.4, 2.6) if swingish else rng.uniform(3.5, 8.0)
            plan.append(SynthesisScenario(
                label=label,
                amplitude_pu=float(amplitude),
                dc_tau_s=float(rng.uniform(0.02, 0.08)),
                saturation_knee=float(rng.uniform(0.45, 0.7)),
                seed=int(rng.integers(0, 2 ** 62)),
            ))
    return plan


def generate_corpus(plan, spec: SamplingSpec, snr_db: float = math.inf,
                    noise_seed: int = 1) -> list[CorpusRecord]:
    """Synthesize every scenario, attach voltage channels where needed, and add
    per-record seeded noise at the requested SNR."""
    records = []
    for k, sc in enumerate(plan):
        key = class_key(sc.label)
        cycles = SWING_CYCLES if key in _SWINGISH else DIFFERENTIAL_CYCLES
        if key == "fault_during_swing":
            sc = SynthesisScenario(sc.label, sc.amplitude_pu, sc.dc_tau_s,
                                   dict(sc.harmonic_mix), sc.saturation_knee,
                                   6 * spec.samples_per_cycle, sc.seed)
        if key in _PAIRED:
            cur, volt = synthesize_pair(sc, spec, cycles)
        else:
            cur, volt = synthesize(sc, spec, cycles), None
        if not math.isinf(snr_db):
            cur = add_noise(cur, snr_db, seed=noise_seed + 7919 * k)
            if volt is not None:
                volt = add_noise(volt, snr_db, seed=noise_seed + 7919 * k + 1)
        records.append(CorpusRecord(cur, volt, sc))
    return records


def split_records(records, test_fraction: float = 0.2, seed: int = 0):
    """Stratified train/test split over full labels (including fault type and
    swing detail), deterministic per seed. Strata too small to round to a test
    row are pooled at class level instead."""
    rng = np.random.default_rng(seed)
    min_stratum = max(2, int(math.ceil(0.5 / test_fraction))) if test_fraction > 0 else 2
    fine: dict[str, list[int]] = {}
    for i, r in enumerate(records):
        fine.setdefault(r.scenario.label.to_string(), []).append(i)
    by_class: dict[str, list[int]] = {}
    for i, r in enumerate(records):
        stratum = r.scenario.label.to_string()
        if len(fine[stratum]) < min_stratum:
            stratum = r.key
        by_class.setdefault(stratum, []).append(i)
    train_idx, test_idx = [], []
    for key in sorted(by_class):
        idx = np.asarray(by_class[key])
        rng.shuffle(idx)
        cut = int(round(len(idx) * test_fraction))
        test_idx.extend(idx[:cut].tolist())
        train_idx.extend(idx[cut:].tolist())
    return [records[i] for i in sorted(train_idx)], [records[i] for i in sorted(test_idx)]


def _stage_capture(rec: CorpusRecord, det, cfg: CascadeConfig, spec_name: str):
    from dataclasses import replace
    stage = cfg.stages[spec_name]
    det_cfg = replace(cfg.detector, pre_cycles=stage.capture_cycles[0],
                      post_cycles=stage.capture_cycles[1])
    try:
        return capture(rec.current, det, det_cfg)
    except ValueError:
        return None


def _inception_window(rec: CorpusRecord, n_cycles: float) -> SwingCapture | None:
    s0 = int(rec.current.meta.get("inception_index", "0"))
    n_c = rec.current.sampling.samples_per_cycle
    length = round(n_cycles * n_c)
    if s0 + length > rec.current.n_samples:
        return None
    cur = window(rec.current, s0, length)
    volt = window(rec.voltage, s0, length) if rec.voltage is not None else None
    return SwingCapture(cur, volt)


def assemble_stage_datasets(records, cfg: CascadeConfig,
                            stages=None) -> dict[str, Dataset]:
    """Extract features per stage from the corpus records.

    Differential stages use detector-gated captures (records the detector does
    not register are skipped, mirroring live operation); swing stages use fixed
    windows at the known inception.
    """
    wanted = set(stages) if stages is not None else set(cfg.stages)
    rows: dict[str, list] = {name: [] for name in wanted}
    labels: dict[str, list] = {name: [] for name in wanted}

    def put(name, vec, cls):
        spec = cfg.stages[name]
        rows[name].append(vec)
        labels[name].append(spec.classes.index(cls))

    for rec in records:
        key = rec.key
        label = rec.scenario.label
        if key in _SWINGISH or key.startswith("internal_fault/"):
            if "swing_detect" in wanted and rec.voltage is not None:
                cap = _inception_window(rec, cfg.stages["swing_detect"].capture_cycles[1])
                if cap is not None:
                    cls = ("power_swing" if key == "power_swing" else
                           "fault_during_swing" if key == "fault_during_swing" else "fault")
                    vec = extract(cap.current, cfg.stages["swing_detect"].feature_cfg,
                                  voltage=cap.voltage)
                    put("swing_detect", vec.values, cls)
            if key == "power_swing" and rec.voltage is not None and \
                    ("swing_stability" in wanted or "swing_symmetry" in wanted):
                cap10 = _inception_window(rec, cfg.stages["swing_stability"].capture_cycles[1])
                if cap10 is not None:
                    vec10 = extract(cap10.current, cfg.stages["swing_stability"].feature_cfg,
                                    voltage=cap10.voltage)
                    if "swing_stability" in wanted:
                        put("swing_stability", vec10.values, label.swing_detail.stability)
                    if "swing_symmetry" in wanted:
                        put("swing_symmetry", vec10.values, label.swing_detail.symmetry)
        if key in _SWINGISH:
            continue

        is_fault = key.startswith("internal_fault/")
        det = cdf_scan(rec.current, cfg.detector)
        if not det.triggered:
            continue
        if "detect" in wanted:
            snip = _stage_capture(rec, det, cfg, "detect")
            if snip is not None:
                vec = extract(snip, cfg.stages["detect"].feature_cfg)
                put("detect", vec.values, "fault" if is_fault else "disturbance")
        if is_fault:
            unit = label.fault_detail.unit
            stage_t = f"fault_type_{unit}"
            for name in ("locate", stage_t):
                if name in wanted:
                    snip = _stage_capture(rec, det, cfg, name)
                    if snip is not None:
                        vec = extract(snip, cfg.stages[name].feature_cfg)
                        put(name, vec.values, unit if name == "locate"
                            else label.fault_detail.type)
        elif key in DISTURBANCE_CLASSES and "disturbance_type" in wanted:
            snip = _stage_capture(rec, det, cfg, "disturbance_type")
            if snip is not None:
                vec = extract(snip, cfg.stages["disturbance_type"].feature_cfg)
                put("disturbance_type", vec.values, key)

    out = {}
    for name in wanted:
        if rows[name]:
            out[name] = Dataset(np.asarray(rows[name]),
                                np.asarray(labels[name], dtype=np.int64),
                                cfg.stages[name].classes)
    return out
