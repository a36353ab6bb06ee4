"""Classifier cascade: stage definitions, training, and the two decision
pipelines (differential event classification and the swing pipeline)."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from ..detector import DetectionResult, DetectorConfig, capture, cdf_scan
from ..features import FeatureConfig, extract
from ..learn import (BoostConfig, cross_validated_accuracy, model_from_dict,
                     model_to_dict, predict, train_boosted)
from ..waveform import FAULT_TYPES, FAULT_UNITS, ThreePhaseRecord

#: the six transient disturbances of the disturbance-type stage
DISTURBANCE_CLASSES = (
    "magnetizing_inrush", "sympathetic_inrush", "external_fault_ct_sat",
    "ferroresonance", "capacitor_switching", "nonlinear_load_switching",
)

SWING_DETECT_CLASSES = ("fault", "fault_during_swing", "power_swing")


@dataclass(frozen=True)
class StageSpec:
    name: str
    feature_cfg: FeatureConfig
    capture_cycles: tuple       # (pre_cycles, post_cycles)
    classes: tuple

    def __post_init__(self):
        if self.capture_cycles[0] + self.capture_cycles[1] < 1.0:
            raise ValueError(f"stage {self.name}: capture must span at least one cycle")
        if len(self.classes) < 2:
            raise ValueError(f"stage {self.name}: need at least two classes")

    def expected_width(self) -> int:
        return expected_feature_width(self.feature_cfg)


def expected_feature_width(cfg: FeatureConfig) -> int:
    if cfg.set == "td5":
        return 15
    if cfg.set == "we6":
        return 3 * len(cfg.we_wavelets)
    if cfg.set == "swing6":
        return 6
    if cfg.set == "ar_relay":
        return 3
    if cfg.set == "f5":
        per_phase = (len(cfg.change_quantile_bounds) + len(cfg.fft_bins)
                     + len(cfg.trend_chunk_lens) + len(cfg.welch_bins)
                     + len(cfg.ar_coef_indices))
        return 3 * per_phase
    raise ValueError(f"width undefined for set {cfg.set!r}")


def default_stage_specs() -> dict:
    """Six differential stages plus the three swing stages."""
    f5 = FeatureConfig
    # the detect capture spans 1.5 cycles, so harmonic h sits at bin 1.5 h;
    # bin 3 reads the second harmonic exactly
    detect = f5(set="f5", change_quantile_bounds=((0.4, 0.8), (0.2, 0.8)),
                fft_bins=(3,), trend_chunk_lens=(10,), welch_bins=(0,),
                ar_coef_indices=(2,))
    # captures for these stages span three cycles, so the fundamental sits at
    # bin 3 and the unit-fingerprint harmonics at bins 6 and 9
    locate = f5(set="f5", change_quantile_bounds=((0.4, 0.8), (0.2, 0.8)),
                fft_bins=(6, 9), trend_chunk_lens=(5, 10), welch_bins=(),
                ar_coef_indices=())
    ftype_series = f5(set="f5",
                      change_quantile_bounds=((0.4, 0.8), (0.2, 0.8), (0.1, 0.9)),
                      fft_bins=(3,), trend_chunk_lens=(5, 10), welch_bins=(2,),
                      ar_coef_indices=())
    ftype_other = f5(set="f5",
                     change_quantile_bounds=((0.4, 0.8), (0.2, 0.8), (0.1, 0.9)),
                     fft_bins=(3, 6), trend_chunk_lens=(5, 10), welch_bins=(),
                     ar_coef_indices=())
    disturb = f5(set="f5", change_quantile_bounds=((0.4, 0.8), (0.2, 0.8)),
                 fft_bins=(2,), trend_chunk_lens=(10,), welch_bins=(),
                 ar_coef_indices=(2,))
    swing_1 = FeatureConfig(set="swing6", fft_bins=(1,), trend_chunk_lens=(10,),
                            trend_agg="var")
    swing_10 = FeatureConfig(set="swing6", fft_bins=(10,), trend_chunk_lens=(10,),
                             trend_agg="var")
    specs = {
        "detect": StageSpec("detect", detect, (0.5, 1.0), ("fault", "disturbance")),
        "locate": StageSpec("locate", locate, (0.0, 3.0), FAULT_UNITS),
        "fault_type_power_transformer": StageSpec(
            "fault_type_power_transformer", ftype_other, (0.0, 3.0), FAULT_TYPES),
        "fault_type_ispar_series": StageSpec(
            "fault_type_ispar_series", ftype_series, (0.0, 3.0), FAULT_TYPES),
        "fault_type_ispar_exciting": StageSpec(
            "fault_type_ispar_exciting", ftype_other, (0.0, 3.0), FAULT_TYPES),
        "disturbance_type": StageSpec("disturbance_type", disturb, (0.0, 3.0),
                                      DISTURBANCE_CLASSES),
        "swing_detect": StageSpec("swing_detect", swing_1, (0.0, 1.0),
                                  SWING_DETECT_CLASSES),
        "swing_stability": StageSpec("swing_stability", swing_10, (0.0, 10.0),
                                     ("stable", "unstable")),
        "swing_symmetry": StageSpec("swing_symmetry", swing_10, (0.0, 10.0),
                                    ("symmetrical", "asymmetrical")),
    }
    return specs


@dataclass(frozen=True)
class CascadeConfig:
    detector: DetectorConfig = field(default_factory=DetectorConfig)
    stages: dict = field(default_factory=default_stage_specs)


@dataclass
class CascadeModel:
    config: CascadeConfig
    models: dict                  # stage name -> trained model
    cv_scores: dict               # stage name -> float or None

    def to_dict(self) -> dict:
        return {
            "schema": "cascade_v1",
            "detector": vars(self.config.detector),
            "stages": {
                name: {
                    "classes": list(spec.classes),
                    "capture_cycles": list(spec.capture_cycles),
                    "feature_set": spec.feature_cfg.set,
                    "feature_cfg": _feature_cfg_to_dict(spec.feature_cfg),
                    "model": model_to_dict(self.models[name]),
                    "cv_score": self.cv_scores.get(name),
                }
                for name, spec in self.config.stages.items() if name in self.models
            },
        }

    @staticmethod
    def from_dict(blob: dict) -> "CascadeModel":
        if blob.get("schema") != "cascade_v1":
            raise ValueError(f"unsupported cascade schema {blob.get('schema')!r}")
        stages = {}
        models = {}
        scores = {}
        for name, sd in blob["stages"].items():
            cfg = _feature_cfg_from_dict(sd["feature_cfg"])
            stages[name] = StageSpec(name, cfg, tuple(sd["capture_cycles"]),
                                     tuple(sd["classes"]))
            models[name] = model_from_dict(sd["model"])
            scores[name] = sd.get("cv_score")
        det = DetectorConfig(**blob["detector"])
        return CascadeModel(CascadeConfig(det, stages), models, scores)


def _feature_cfg_to_dict(cfg: FeatureConfig) -> dict:
    return {
        "set": cfg.set,
        "change_quantile_bounds": [list(b) for b in cfg.change_quantile_bounds],
        "ar_lag": cfg.ar_lag,
        "fft_bins": list(cfg.fft_bins),
        "welch_segment_len": cfg.welch.segment_len,
        "welch_overlap": cfg.welch.overlap_fraction,
        "welch_bins": list(cfg.welch_bins),
        "trend_chunk_lens": list(cfg.trend_chunk_lens),
        "trend_attr": cfg.trend_attr,
        "trend_agg": cfg.trend_agg,
        "ar_coef_indices": list(cfg.ar_coef_indices),
        "ar_relay_coef": cfg.ar_relay_coef,
    }


def _feature_cfg_from_dict(d: dict) -> FeatureConfig:
    from ..features import WelchConfig
    return FeatureConfig(
        set=d["set"],
        change_quantile_bounds=tuple(tuple(b) for b in d["change_quantile_bounds"]),
        ar_lag=d["ar_lag"],
        fft_bins=tuple(d["fft_bins"]),
        welch=WelchConfig(d["welch_segment_len"], d["welch_overlap"]),
        welch_bins=tuple(d["welch_bins"]),
        trend_chunk_lens=tuple(d["trend_chunk_lens"]),
        trend_attr=d["trend_attr"],
        trend_agg=d["trend_agg"],
        ar_coef_indices=tuple(d["ar_coef_indices"]),
        ar_relay_coef=d["ar_relay_coef"],
    )


@dataclass(frozen=True)
class RelayDecision:
    verdict: str                       # trip, restrain, block, no_event
    category: str | None = None
    faulty_unit: str | None = None
    fault_type: str | None = None
    direction: str | None = None
    zone: str | None = None
    stability: str | None = None
    symmetry: str | None = None
    confidences: dict = field(default_factory=dict)
    trigger_index: int | None = None

    def __post_init__(self):
        if self.verdict not in ("trip", "restrain", "block", "no_event"):
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "category": self.category,
            "unit": self.faulty_unit,
            "fault_type": self.fault_type,
            "direction": self.direction,
            "zone": self.zone,
            "stability": self.stability,
            "symmetry": self.symmetry,
            "stage_confidences": {k: float(v) for k, v in self.confidences.items()},
            "trigger_index": self.trigger_index,
        }


def build_cascade(stage_data: dict, cfg: CascadeConfig,
                  trainer: BoostConfig = BoostConfig(n_stages=120, learning_rate=0.1,
                                                     max_depth=3),
                  cv_folds: int = 0, seed: int = 0) -> CascadeModel:
    """Train every stage present in stage_data independently.

    stage_data maps a stage name to a Dataset whose class_names match the stage
    spec. cv_folds > 0 additionally records a stratified-CV balanced accuracy
    per stage (at extra training cost).
    """
    models = {}
    scores = {}
    for name, d in stage_data.items():
        if name not in cfg.stages:
            raise ValueError(f"unknown stage {name!r}")
        spec = cfg.stages[name]
        if d.x.shape[1] != spec.expected_width():
            raise ValueError(
                f"stage {name}: feature width {d.x.shape[1]} does not match the "
                f"configured set width {spec.expected_width()}")
        present = np.bincount(d.y, minlength=d.n_classes)
        live = present[present > 0]
        if len(live) < 2:
            raise ValueError(f"stage {name}: needs at least two populated classes")
        if live.min() < 10:
            raise ValueError(f"stage {name}: every class needs at least 10 rows")
        models[name] = train_boosted(d, trainer)
        if cv_folds and cv_folds > 1:
            scores[name] = cross_validated_accuracy(
                d, lambda dd: train_boosted(dd, trainer),
                lambda m, rows: predict(m, rows)[0], cv_folds, seed)
        else:
            scores[name] = None
    return CascadeModel(cfg, models, scores)


def _stage_predict(model: CascadeModel, name: str, features: np.ndarray):
    spec = model.config.stages[name]
    labels, scores = predict(model.models[name], features.reshape(1, -1))
    cls = spec.classes[int(labels[0])]
    return cls, float(scores[0].max())


def _capture_for(model: CascadeModel, name: str, record, trigger_index: int):
    spec = model.config.stages[name]
    det_cfg = replace(model.config.detector, pre_cycles=spec.capture_cycles[0],
                      post_cycles=spec.capture_cycles[1])
    det = DetectionResult(True, trigger_index, "a",
                          np.zeros((3, record.n_samples)))
    return capture(record, det, det_cfg)


def classify_event(model: CascadeModel, record: ThreePhaseRecord) -> RelayDecision:
    """Differential pipeline: detector gate, fault/disturbance discrimination,
    then unit and fault type or disturbance type."""
    if "detect" not in model.models:
        raise ValueError("cascade has no trained detect stage")
    det = cdf_scan(record, model.config.detector)
    if not det.triggered:
        return RelayDecision("no_event")
    confidences = {}

    def run_stage(name):
        snip = _capture_for(model, name, record, det.trigger_index)
        vec = extract(snip, model.config.stages[name].feature_cfg)
        cls, conf = _stage_predict(model, name, vec.values)
        confidences[name] = conf
        return cls

    detect_cls = run_stage("detect")
    if detect_cls == "fault":
        unit = run_stage("locate") if "locate" in model.models else None
        ftype = None
        stage_name = f"fault_type_{unit}"
        if unit is not None and stage_name in model.models:
            ftype = run_stage(stage_name)
        return RelayDecision("trip", category="internal_fault", faulty_unit=unit,
                             fault_type=ftype, confidences=confidences,
                             trigger_index=det.trigger_index)
    dist_cls = (run_stage("disturbance_type")
                if "disturbance_type" in model.models else None)
    return RelayDecision("restrain", category=dist_cls, confidences=confidences,
                         trigger_index=det.trigger_index)


@dataclass(frozen=True)
class SwingCapture:
    """Aligned current and voltage windows for the swing pipeline."""

    current: ThreePhaseRecord
    voltage: ThreePhaseRecord | None

    def __post_init__(self):
        if self.voltage is not None and self.voltage.n_samples != self.current.n_samples:
            raise ValueError("current and voltage captures must align")


def classify_swing(model: CascadeModel, capture1: SwingCapture,
                   capture10: SwingCapture) -> RelayDecision:
    """Swing pipeline: one-cycle fault discrimination, then stability over ten
    cycles and a symmetry annotation for swings."""
    for cap, name in ((capture1, "swing_detect"), (capture10, "swing_stability")):
        if cap.voltage is None:
            raise ValueError(f"{name}: voltage channels are required")
    confidences = {}
    spec1 = model.config.stages["swing_detect"]
    vec1 = extract(capture1.current, spec1.feature_cfg, voltage=capture1.voltage)
    cls1, conf = _stage_predict(model, "swing_detect", vec1.values)
    confidences["swing_detect"] = conf
    if cls1 in ("fault", "fault_during_swing"):
        category = "internal_fault" if cls1 == "fault" else "fault_during_swing"
        return RelayDecision("trip", category=category, confidences=confidences)
    spec10 = model.config.stages["swing_stability"]
    vec10 = extract(capture10.current, spec10.feature_cfg, voltage=capture10.voltage)
    stability, conf = _stage_predict(model, "swing_stability", vec10.values)
    confidences["swing_stability"] = conf
    symmetry = None
    if "swing_symmetry" in model.models:
        spec_s = model.config.stages["swing_symmetry"]
        vec_s = extract(capture10.current, spec_s.feature_cfg, voltage=capture10.voltage)
        symmetry, conf = _stage_predict(model, "swing_symmetry", vec_s.values)
        confidences["swing_symmetry"] = conf
    verdict = "block" if stability == "unstable" else "restrain"
    return RelayDecision(verdict, category="power_swing", stability=stability,
                         symmetry=symmetry, confidences=confidences)
