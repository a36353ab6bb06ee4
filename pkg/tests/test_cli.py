"""CLI thin client: subcommand flow, flag overrides, and exit codes."""

import json

import pytest

from relaykit.cli import main


def write_config(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture(scope="module")
def corpus_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("clicorpus")
    cfg = tmp_path_factory.mktemp("cfg") / "gen.json"
    code = main(["gen", "--config", write_config(cfg, {
        "out_dir": str(out), "per_class": 12, "seed": 2, "snr_db": 35.0,
        "classes": ["internal_fault/power_transformer", "magnetizing_inrush",
                    "ferroresonance", "capacitor_switching"],
    })])
    assert code == 0
    return out


def test_gen_requires_valid_config(tmp_path, capsys):
    assert main(["gen", "--config", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["gen", "--config", str(bad)]) == 2
    # schema violations from the service map to the config exit code
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"per_class": 2}))
    assert main(["gen", "--config", str(cfg)]) == 2


def test_gen_out_flag_overrides_config(tmp_path, capsys):
    cfg = tmp_path / "gen.json"
    cfg.write_text(json.dumps({"out_dir": str(tmp_path / "ignored"),
                               "per_class": 2, "seed": 1,
                               "classes": ["ferroresonance"]}))
    dest = tmp_path / "flagged"
    assert main(["gen", "--config", str(cfg), "--out", str(dest)]) == 0
    assert (dest / "currents.csv").exists()
    assert not (tmp_path / "ignored").exists()
    out = capsys.readouterr().out
    assert "ferroresonance: 2" in out


def test_train_eval_classify_flow(corpus_dir, tmp_path, capsys):
    model_path = tmp_path / "model.json"
    train_cfg = write_config(tmp_path / "train.json", {
        "corpus_dir": str(corpus_dir), "model_path": str(model_path),
        "stages": ["detect"], "trainer": {"n_stages": 25, "max_depth": 2},
        "seed": 4,
    })
    assert main(["train", "--config", train_cfg]) == 0
    assert model_path.exists()

    eval_cfg = write_config(tmp_path / "eval.json", {
        "corpus_dir": str(corpus_dir), "model_path": str(model_path),
    })
    assert main(["eval", "--config", eval_cfg]) == 0
    out = capsys.readouterr().out
    assert "balanced_accuracy" in out

    classify_cfg = write_config(tmp_path / "classify.json", {
        "corpus_dir": str(corpus_dir), "model_path": str(model_path), "limit": 5,
    })
    assert main(["classify", "--config", classify_cfg]) == 0
    lines = [json.loads(line) for line in capsys.readouterr().out.strip().splitlines()]
    assert len(lines) == 5
    assert all("verdict" in d for d in lines)


def test_features_subcommand(corpus_dir, tmp_path):
    cfg = write_config(tmp_path / "features.json", {
        "corpus_dir": str(corpus_dir), "out_path": str(tmp_path / "feat.csv"),
        "stage": "detect",
    })
    assert main(["features", "--config", cfg]) == 0
    assert (tmp_path / "feat.csv").exists()


def test_exit_codes_for_missing_data_and_model(corpus_dir, tmp_path):
    train_cfg = write_config(tmp_path / "t.json", {
        "corpus_dir": str(tmp_path / "empty"), "model_path": str(tmp_path / "m.json"),
    })
    assert main(["train", "--config", train_cfg]) == 3

    classify_cfg = write_config(tmp_path / "c.json", {
        "corpus_dir": str(corpus_dir), "model_path": str(tmp_path / "absent.json"),
    })
    assert main(["classify", "--config", classify_cfg]) == 4

    corrupt = tmp_path / "corrupt.json"
    corrupt.write_text('{"schema": "model_v0"}')
    classify_cfg2 = write_config(tmp_path / "c2.json", {
        "corpus_dir": str(corpus_dir), "model_path": str(corrupt),
    })
    assert main(["classify", "--config", classify_cfg2]) == 4


def test_json_flag_prints_raw_report(corpus_dir, tmp_path, capsys):
    cfg = write_config(tmp_path / "gen2.json", {
        "out_dir": str(tmp_path / "o2"), "per_class": 1,
        "classes": ["ferroresonance"],
    })
    assert main(["gen", "--config", cfg, "--json"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["schema_name"] == "report_v1"
    assert body["config_hash"]
