"""Operation core behind the service endpoints; the CLI drives these through
the HTTP layer. Every operation is deterministic given its request payload."""

from __future__ import annotations

import hashlib
import json
import math
import time
from pathlib import Path

import numpy as np

from ..corpus import CorpusRecord, assemble_stage_datasets, generate_corpus, scenario_plan
from ..features import write_feature_csv
from ..learn import balanced_accuracy, confusion_matrix, per_class_recall, predict
from ..learn.boosting import BoostConfig
from ..relay import CascadeConfig, CascadeModel, build_cascade, classify_event
from ..waveform import SamplingSpec, ThreePhaseRecord, read_csv, write_csv
from . import schemas


class ConfigError(ValueError):
    """Bad request payload or inconsistent configuration (exit code 2)."""


class DataError(ValueError):
    """Missing or malformed corpus data (exit code 3)."""


class ModelError(ValueError):
    """Missing or incompatible model file (exit code 4)."""


def config_hash(request) -> str:
    payload = json.dumps(request.model_dump(), sort_keys=True, default=str)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _sampling(req: schemas.SamplingModel) -> SamplingSpec:
    try:
        return SamplingSpec(req.sample_rate_hz, req.nominal_freq_hz)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def op_gen(req: schemas.GenRequest) -> schemas.GenReport:
    out_dir = Path(req.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise DataError(f"cannot create output directory: {exc}") from exc
    spec = _sampling(req.sampling)
    if req.scenarios is not None:
        from ..txmodel import scenario_from_dict
        try:
            plan = [scenario_from_dict(d) for d in req.scenarios]
        except (ValueError, KeyError, TypeError) as exc:
            raise ConfigError(f"scenario batch: {exc}") from exc
    else:
        plan = scenario_plan(req.per_class, req.seed, classes=tuple(req.classes))
    snr = math.inf if req.snr_db is None else req.snr_db
    records = generate_corpus(plan, spec, snr_db=snr, noise_seed=req.seed + 1)
    currents = [r.current for r in records]
    voltages = [r.voltage for r in records if r.voltage is not None]
    files = []
    write_csv(currents, out_dir / "currents.csv")
    files += ["currents.csv", "currents.json"]
    if voltages:
        write_csv(voltages, out_dir / "voltages.csv")
        files += ["voltages.csv", "voltages.json"]
    counts: dict[str, int] = {}
    for r in records:
        counts[r.key] = counts.get(r.key, 0) + 1
    report = schemas.GenReport(config_hash=config_hash(req), out_dir=str(out_dir),
                               n_records=len(records), class_counts=counts,
                               files=sorted(files))
    (out_dir / "manifest.json").write_text(report.model_dump_json(indent=2) + "\n")
    return report


def load_corpus(corpus_dir) -> list[CorpusRecord]:
    """Rebuild corpus records from the CSV pair; voltage records re-attach to
    the paired classes in file order."""
    corpus_dir = Path(corpus_dir)
    cur_path = corpus_dir / "currents.csv"
    if not cur_path.exists():
        raise DataError(f"no corpus at {corpus_dir} (missing currents.csv)")
    try:
        currents = read_csv(cur_path)
    except ValueError as exc:
        raise DataError(f"currents.csv: {exc}") from exc
    volt_path = corpus_dir / "voltages.csv"
    voltages = []
    if volt_path.exists():
        try:
            voltages = read_csv(volt_path)
        except ValueError as exc:
            raise DataError(f"voltages.csv: {exc}") from exc
    paired = ("internal_fault", "power_swing", "fault_during_swing")
    out = []
    vi = 0
    from ..txmodel import SynthesisScenario
    for k, cur in enumerate(currents):
        if cur.label is None:
            raise DataError(f"record {k} in currents.csv carries no label")
        volt = None
        if cur.label.category in paired and vi < len(voltages):
            volt = voltages[vi]
            vi += 1
        # the CSV schema carries no metadata, so the generator's inception
        # convention is reapplied: fault-during-swing faults start at cycle
        # six, every other event at cycle two
        n_c = cur.sampling.samples_per_cycle
        s0 = 6 * n_c if cur.label.category == "fault_during_swing" else 2 * n_c
        scenario = SynthesisScenario(label=cur.label, seed=k, inception_index=s0)
        meta = dict(cur.meta)
        meta.setdefault("inception_index", str(s0))
        cur = ThreePhaseRecord(cur.phases, cur.kind, cur.sampling, cur.label, meta)
        out.append(CorpusRecord(cur, volt, scenario))
    return out


def op_features(req: schemas.FeaturesRequest) -> schemas.FeaturesReport:
    from dataclasses import replace
    from ..detector import capture, cdf_scan
    from ..features import extract

    records = load_corpus(req.corpus_dir)
    cfg = CascadeConfig()
    if req.stage not in cfg.stages:
        raise ConfigError(f"unknown stage {req.stage!r}; known: {sorted(cfg.stages)}")
    stage = cfg.stages[req.stage]
    vectors = []
    labels = []
    skipped = 0
    for rec in records:
        if stage.feature_cfg.set == "swing6":
            raise ConfigError("feature export for swing stages is not file-backed")
        det = cdf_scan(rec.current, cfg.detector)
        if not det.triggered:
            skipped += 1
            continue
        det_cfg = replace(cfg.detector, pre_cycles=stage.capture_cycles[0],
                          post_cycles=stage.capture_cycles[1])
        try:
            snip = capture(rec.current, det, det_cfg)
        except ValueError:
            skipped += 1
            continue
        vectors.append(extract(snip, stage.feature_cfg))
        labels.append(rec.scenario.label.to_string())
    if not vectors:
        raise DataError("no record produced a capture; nothing to export")
    out_path = Path(req.out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    write_feature_csv(out_path, vectors, labels)
    return schemas.FeaturesReport(config_hash=config_hash(req), out_path=str(out_path),
                                  stage=req.stage, n_rows=len(vectors),
                                  n_skipped=skipped,
                                  feature_names=list(vectors[0].names))


def op_train(req: schemas.TrainRequest) -> schemas.TrainReport:
    records = load_corpus(req.corpus_dir)
    cfg = CascadeConfig()
    wanted = tuple(req.stages) if req.stages else None
    if wanted:
        unknown = [s for s in wanted if s not in cfg.stages]
        if unknown:
            raise ConfigError(f"unknown stages: {unknown}")
    t0 = time.time()
    data = assemble_stage_datasets(records, cfg, stages=wanted)
    if not data:
        raise DataError("corpus produced no training rows for the requested stages")
    try:
        trainer = BoostConfig(mode=req.trainer.mode, n_stages=req.trainer.n_stages,
                              learning_rate=req.trainer.learning_rate,
                              max_depth=req.trainer.max_depth,
                              subsample=req.trainer.subsample, gamma=req.trainer.gamma,
                              lam=req.trainer.lam, seed=req.seed)
    except ValueError as exc:
        raise ConfigError(f"trainer: {exc}") from exc
    try:
        model = build_cascade(data, cfg, trainer, cv_folds=req.cv_folds, seed=req.seed)
    except ValueError as exc:
        raise DataError(str(exc)) from exc
    model_path = Path(req.model_path)
    model_path.parent.mkdir(parents=True, exist_ok=True)
    model_path.write_text(json.dumps(model.to_dict()) + "\n")
    stages = {
        name: {"rows": int(len(data[name].y)),
               "classes": list(data[name].class_names),
               "cv_score": model.cv_scores.get(name)}
        for name in data
    }
    return schemas.TrainReport(config_hash=config_hash(req), model_path=str(model_path),
                               stages=stages, train_seconds=time.time() - t0)


def load_model(model_path) -> CascadeModel:
    path = Path(model_path)
    if not path.exists():
        raise ModelError(f"no model file at {path}")
    try:
        return CascadeModel.from_dict(json.loads(path.read_text()))
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise ModelError(f"cannot load model: {exc}") from exc


def op_eval(req: schemas.EvalRequest) -> schemas.EvalReport:
    records = load_corpus(req.corpus_dir)
    model = load_model(req.model_path)
    data = assemble_stage_datasets(records, model.config,
                                   stages=tuple(model.models))
    if not data:
        raise DataError("corpus produced no evaluation rows")
    stages = {}
    for name, d in sorted(data.items()):
        try:
            labels, _ = predict(model.models[name], d.x)
        except ValueError as exc:
            raise ModelError(f"stage {name}: {exc}") from exc
        cm = confusion_matrix(d.y, labels, d.n_classes)
        keep = cm.sum(axis=1) > 0
        cm_kept = cm[np.ix_(keep, keep)]
        stages[name] = schemas.StageMetrics(
            confusion=cm.tolist(),
            classes=list(d.class_names),
            balanced_accuracy=balanced_accuracy(cm_kept),
            per_class_recall=[float(v) for v in per_class_recall(cm_kept)],
            n_rows=int(len(d.y)),
        ).model_dump()
    report = schemas.EvalReport(config_hash=config_hash(req), stages=stages)
    if req.out_path:
        out = Path(req.out_path)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(report.model_dump_json(indent=2) + "\n")
        csv_path = out.with_suffix(".csv")
        lines = ["stage,balanced_accuracy,n_rows"]
        for name, m in stages.items():
            lines.append(f"{name},{m['balanced_accuracy']:.6f},{m['n_rows']}")
        csv_path.write_text("\n".join(lines) + "\n")
    return report


def op_classify(req: schemas.ClassifyRequest) -> schemas.ClassifyReport:
    # classification input may be unlabeled, so read the current records
    # directly instead of rebuilding labeled corpus entries
    cur_path = Path(req.corpus_dir) / "currents.csv"
    if not cur_path.exists():
        raise DataError(f"no corpus at {req.corpus_dir} (missing currents.csv)")
    try:
        records = read_csv(cur_path)
    except ValueError as exc:
        raise DataError(f"currents.csv: {exc}") from exc
    model = load_model(req.model_path)
    if req.limit:
        records = records[:req.limit]
    decisions = []
    for rec in records:
        try:
            decision = classify_event(model, rec)
        except ValueError as exc:
            raise DataError(f"record {len(decisions)}: {exc}") from exc
        payload = decision.to_json_dict()
        payload["true_label"] = rec.label.to_string() if rec.label else None
        decisions.append(payload)
    return schemas.ClassifyReport(config_hash=config_hash(req),
                                  n_records=len(decisions), decisions=decisions)
