"""Service endpoints end to end on a tiny corpus: gen, features, train, eval,
classify, plus error mapping."""

import json

import pytest
from fastapi.testclient import TestClient

from relaykit.service.app import app

client = TestClient(app)

SMOKE_STAGES = ["detect", "disturbance_type"]


@pytest.fixture(scope="module")
def tiny_corpus(tmp_path_factory):
    out = tmp_path_factory.mktemp("corpus")
    req = {"out_dir": str(out), "per_class": 14, "seed": 5, "snr_db": 35.0,
           "classes": ["internal_fault/power_transformer", "internal_fault/ispar_series",
                       "magnetizing_inrush", "sympathetic_inrush", "ferroresonance",
                       "external_fault_ct_sat", "capacitor_switching",
                       "nonlinear_load_switching"]}
    r = client.post("/gen", json=req)
    assert r.status_code == 200, r.text
    return out, r.json()


def test_health_and_schemas():
    assert client.get("/health").json()["status"] == "ok"
    schemas = client.get("/schemas").json()
    assert set(schemas) == {"gen", "features", "train", "eval", "classify"}
    assert "out_dir" in schemas["gen"]["properties"]


def test_gen_writes_corpus(tiny_corpus):
    out, report = tiny_corpus
    assert (out / "currents.csv").exists()
    assert (out / "currents.json").exists()
    assert (out / "manifest.json").exists()
    assert report["n_records"] == 14 * 8
    assert report["class_counts"]["magnetizing_inrush"] == 14
    assert report["config_hash"]


def test_gen_deterministic(tmp_path):
    req = {"out_dir": str(tmp_path / "a"), "per_class": 3, "seed": 9,
           "classes": ["ferroresonance", "capacitor_switching"]}
    client.post("/gen", json=req)
    req2 = dict(req, out_dir=str(tmp_path / "b"))
    client.post("/gen", json=req2)
    a = (tmp_path / "a" / "currents.csv").read_bytes()
    b = (tmp_path / "b" / "currents.csv").read_bytes()
    assert a == b


def test_gen_empty_plan(tmp_path):
    r = client.post("/gen", json={"out_dir": str(tmp_path), "per_class": 0, "seed": 1})
    assert r.status_code == 200
    assert r.json()["n_records"] == 0
    assert (tmp_path / "currents.csv").read_text().strip() == "t,pa,pb,pc,label"
    assert (tmp_path / "manifest.json").exists()


def test_gen_from_explicit_scenario_batch(tmp_path):
    from relaykit.txmodel import SynthesisScenario, scenario_from_dict, scenario_to_dict
    from relaykit.waveform import TransientLabel

    batch = [
        {"label": "magnetizing_inrush", "amplitude_pu": 6.0, "seed": 11},
        {"label": "internal_fault/ispar_series/t-t", "dc_tau_s": 0.04, "seed": 12,
         "harmonic_mix": {"5": 0.1}},
    ]
    r = client.post("/gen", json={"out_dir": str(tmp_path), "scenarios": batch})
    assert r.status_code == 200, r.text
    body = r.json()
    assert body["n_records"] == 2
    assert body["class_counts"] == {"magnetizing_inrush": 1,
                                    "internal_fault/ispar_series": 1}
    # scenario serialization round trip
    sc = SynthesisScenario(label=TransientLabel("ferroresonance"), amplitude_pu=4.2,
                           harmonic_mix={3: 0.2}, seed=7)
    assert scenario_from_dict(scenario_to_dict(sc)) == sc
    bad = client.post("/gen", json={"out_dir": str(tmp_path),
                                    "scenarios": [{"label": ""}]})
    assert bad.status_code == 400
    assert bad.json()["exit_code"] == 2


def test_gen_rejects_unknown_class(tmp_path):
    r = client.post("/gen", json={"out_dir": str(tmp_path), "per_class": 2,
                                  "classes": ["lightning"]})
    assert r.status_code == 422


def test_features_export(tiny_corpus, tmp_path):
    out, _ = tiny_corpus
    path = tmp_path / "features.csv"
    r = client.post("/features", json={"corpus_dir": str(out),
                                       "out_path": str(path), "stage": "detect"})
    assert r.status_code == 200, r.text
    body = r.json()
    assert body["n_rows"] > 0
    header = path.read_text().splitlines()[0]
    assert header.endswith(",label")
    assert len(header.split(",")) == 19   # 18 detect features plus the label


@pytest.fixture(scope="module")
def trained_model(tiny_corpus, tmp_path_factory):
    out, _ = tiny_corpus
    model_path = tmp_path_factory.mktemp("model") / "cascade.json"
    req = {"corpus_dir": str(out), "model_path": str(model_path),
           "stages": SMOKE_STAGES,
           "trainer": {"n_stages": 40, "learning_rate": 0.15, "max_depth": 2},
           "cv_folds": 0, "seed": 3}
    r = client.post("/train", json=req)
    assert r.status_code == 200, r.text
    return model_path, r.json()


def test_train_reports_stages(trained_model):
    model_path, report = trained_model
    assert model_path.exists()
    assert set(report["stages"]) == set(SMOKE_STAGES)
    assert report["stages"]["detect"]["rows"] > 0
    blob = json.loads(model_path.read_text())
    assert blob["schema"] == "cascade_v1"


def test_train_with_cv_scores(tiny_corpus, tmp_path):
    out, _ = tiny_corpus
    req = {"corpus_dir": str(out), "model_path": str(tmp_path / "m.json"),
           "stages": ["detect"], "trainer": {"n_stages": 10, "max_depth": 2},
           "cv_folds": 3, "seed": 1}
    r = client.post("/train", json=req)
    assert r.status_code == 200
    score = r.json()["stages"]["detect"]["cv_score"]
    assert score is not None and 0.0 <= score <= 1.0


def test_eval_reports_consistent_metrics(tiny_corpus, trained_model, tmp_path):
    out, _ = tiny_corpus
    model_path, _ = trained_model
    report_path = tmp_path / "eval.json"
    r = client.post("/eval", json={"corpus_dir": str(out),
                                   "model_path": str(model_path),
                                   "out_path": str(report_path)})
    assert r.status_code == 200, r.text
    body = r.json()
    for name, metrics in body["stages"].items():
        cm = metrics["confusion"]
        recalls = [row[i] / sum(row) for i, row in enumerate(cm) if sum(row) > 0]
        recomputed = sum(recalls) / len(recalls)
        assert metrics["balanced_accuracy"] == pytest.approx(recomputed, abs=1e-12)
    assert report_path.exists()
    assert report_path.with_suffix(".csv").read_text().startswith("stage,")


def test_classify_streams_decisions(tiny_corpus, trained_model):
    out, _ = tiny_corpus
    model_path, _ = trained_model
    r = client.post("/classify", json={"corpus_dir": str(out),
                                       "model_path": str(model_path), "limit": 8})
    assert r.status_code == 200, r.text
    body = r.json()
    assert body["n_records"] == 8
    for d in body["decisions"]:
        assert d["verdict"] in ("trip", "restrain", "block", "no_event")
        assert "stage_confidences" in d


def test_classify_accepts_unlabeled_records(trained_model, tmp_path):
    from relaykit.txmodel import steady_record
    from relaykit.waveform import SamplingSpec, write_csv

    model_path, _ = trained_model
    rec = steady_record(SamplingSpec(10_000.0, 60.0), 7, amplitude_pu=1.0, seed=3)
    assert rec.label is None
    write_csv([rec], tmp_path / "currents.csv")
    r = client.post("/classify", json={"corpus_dir": str(tmp_path),
                                       "model_path": str(model_path)})
    assert r.status_code == 200, r.text
    d = r.json()["decisions"][0]
    assert d["verdict"] == "no_event"
    assert d["true_label"] is None


def test_train_rejects_bad_trainer_mode(tiny_corpus, tmp_path):
    out, _ = tiny_corpus
    r = client.post("/train", json={"corpus_dir": str(out),
                                    "model_path": str(tmp_path / "m.json"),
                                    "stages": ["detect"],
                                    "trainer": {"mode": "third_order"}})
    assert r.status_code == 400
    assert r.json()["exit_code"] == 2


def test_error_mapping(tmp_path):
    r = client.post("/train", json={"corpus_dir": str(tmp_path / "nope"),
                                    "model_path": str(tmp_path / "m.json")})
    assert r.status_code == 400
    assert r.json()["exit_code"] == 3
    r2 = client.post("/eval", json={"corpus_dir": str(tmp_path / "nope"),
                                    "model_path": str(tmp_path / "m.json")})
    assert r2.status_code == 400
    r3 = client.post("/classify", json={"corpus_dir": "x", "model_path": ""})
    assert r3.status_code == 400
    r4 = client.post("/gen", json={"per_class": 2})
    assert r4.status_code == 422
