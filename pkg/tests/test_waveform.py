"""Sampling arithmetic, noise injection, windowing, and CSV round trips."""

import math

import numpy as np
import pytest

from relaykit.waveform import (FaultDetail, SamplingSpec, SwingDetail, ThreePhaseRecord,
                               TransientLabel, add_noise, cycle_count, read_csv,
                               window, write_csv)

SPEC_10K = SamplingSpec(10_000.0, 60.0)


def sine_record(n, amp=1.0, spec=SPEC_10K, kind="current"):
    t = np.arange(n) / spec.sample_rate_hz
    w = 2 * np.pi * spec.nominal_freq_hz
    phases = np.stack([amp * np.sin(w * t + off) for off in (0, -2 * np.pi / 3, 2 * np.pi / 3)])
    return ThreePhaseRecord(phases, kind, spec)


def test_samples_per_cycle_rounding():
    assert SPEC_10K.samples_per_cycle == 167
    assert SamplingSpec(5000.0, 60.0).samples_per_cycle == 83
    assert SamplingSpec(1920.0, 60.0).samples_per_cycle == 32


def test_sampling_spec_invariants():
    with pytest.raises(ValueError):
        SamplingSpec(100.0, 60.0)          # below twice the nominal frequency
    with pytest.raises(ValueError):
        SamplingSpec(-1.0, 60.0)
    with pytest.raises(ValueError):
        SamplingSpec(130.0, 60.0)          # above 2f but under 8 samples per cycle


def test_cycle_count():
    assert cycle_count(SPEC_10K, 0.05) == 3
    assert cycle_count(SPEC_10K, 0.0) == 0
    assert cycle_count(SamplingSpec(5000.0, 60.0), 1.0 / 60.0) == 1
    with pytest.raises(ValueError):
        cycle_count(SPEC_10K, -0.1)


def test_record_invariants():
    with pytest.raises(ValueError):
        ThreePhaseRecord(np.zeros((2, 10)), "current", SPEC_10K)
    with pytest.raises(ValueError):
        ThreePhaseRecord(np.full((3, 10), np.nan), "current", SPEC_10K)
    with pytest.raises(ValueError):
        ThreePhaseRecord(np.zeros((3, 10)), "r.m.s.", SPEC_10K)
    rec = sine_record(100)
    assert rec.n_samples == 100
    with pytest.raises(ValueError):
        rec.phases[0, 0] = 5.0   # immutable storage


def test_label_invariants():
    with pytest.raises(ValueError):
        TransientLabel("internal_fault")                       # missing fault_detail
    with pytest.raises(ValueError):
        TransientLabel("magnetizing_inrush", fault_detail=FaultDetail("ispar_series", "t-t"))
    with pytest.raises(ValueError):
        TransientLabel("power_swing")                          # missing swing_detail
    lbl = TransientLabel("internal_fault", fault_detail=FaultDetail("power_transformer", "wab-g"))
    assert TransientLabel.from_string(lbl.to_string()) == lbl
    swing = TransientLabel("power_swing", swing_detail=SwingDetail("unstable", "asymmetrical"))
    assert TransientLabel.from_string(swing.to_string()) == swing
    assert TransientLabel.from_string("") is None


def test_add_noise_infinite_snr_is_identity():
    rec = sine_record(600)
    noisy = add_noise(rec, math.inf, seed=1)
    assert np.array_equal(noisy.phases, rec.phases)


def test_add_noise_variance_matches_power_ratio():
    # unit sinusoid: signal power 1/2, so 20 dB noise variance is 0.005
    rec = sine_record(5000)
    noisy = add_noise(rec, 20.0, seed=7)
    for i in range(3):
        resid = noisy.phases[i] - rec.phases[i]
        assert np.var(resid) == pytest.approx(0.005, rel=0.1)
        assert abs(resid.mean()) < 0.01


def test_add_noise_measured_snr_within_half_db():
    rec = sine_record(600)
    for snr in (10.0, 20.0, 40.0):
        noisy = add_noise(rec, snr, seed=3)
        for i in range(3):
            resid = noisy.phases[i] - rec.phases[i]
            measured = 10 * np.log10(np.mean(rec.phases[i] ** 2) / np.mean(resid ** 2))
            assert abs(measured - snr) <= 0.5


def test_add_noise_rms_shift_small_at_40db():
    rec = sine_record(600)
    noisy = add_noise(rec, 40.0, seed=11)
    for i in range(3):
        r0 = np.sqrt(np.mean(rec.phases[i] ** 2))
        r1 = np.sqrt(np.mean(noisy.phases[i] ** 2))
        assert abs(r1 - r0) / r0 < 0.02


def test_add_noise_deterministic_and_errors():
    rec = sine_record(500)
    a = add_noise(rec, 25.0, seed=42)
    b = add_noise(rec, 25.0, seed=42)
    assert np.array_equal(a.phases, b.phases)
    dead = ThreePhaseRecord(np.zeros((3, 100)), "current", SPEC_10K)
    with pytest.raises(ValueError):
        add_noise(dead, 30.0, seed=0)


def test_window_identity_and_bounds():
    rec = sine_record(1000)
    same = window(rec, 0, 1000)
    assert np.array_equal(same.phases, rec.phases)
    assert same.label == rec.label and same.sampling == rec.sampling
    with pytest.raises(ValueError):
        window(rec, 999, 2)
    piece = window(sine_record(500), 167, 167)
    assert piece.n_samples == 167


def test_csv_round_trip_small(tmp_path):
    rec = sine_record(3)
    path = tmp_path / "one.csv"
    write_csv([rec], path)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "t,pa,pb,pc,label"
    assert len(lines) == 4
    back = read_csv(path)
    assert len(back) == 1
    assert np.allclose(back[0].phases, rec.phases, rtol=1e-12, atol=0)


def test_csv_empty_list(tmp_path):
    path = tmp_path / "empty.csv"
    write_csv([], path)
    assert path.read_text().strip() == "t,pa,pb,pc,label"
    assert read_csv(path) == []


def test_csv_round_trip_corpus(tmp_path):
    rng = np.random.default_rng(5)
    records = []
    for i in range(100):
        n = int(rng.integers(10, 80))
        phases = rng.standard_normal((3, n)) * 10.0 ** rng.integers(-3, 4)
        lbl = None
        if i % 3 == 0:
            lbl = TransientLabel("internal_fault",
                                 fault_detail=FaultDetail("ispar_series", "t-t"))
        elif i % 3 == 1:
            lbl = TransientLabel("ferroresonance")
        records.append(ThreePhaseRecord(phases, "current", SPEC_10K, label=lbl))
    path = tmp_path / "corpus.csv"
    write_csv(records, path)
    back = read_csv(path)
    assert len(back) == 100
    for orig, rt in zip(records, back):
        assert rt.label == orig.label
        assert np.allclose(rt.phases, orig.phases, rtol=1e-12, atol=0)


def test_csv_errors_name_line_numbers(tmp_path):
    path = tmp_path / "bad.csv"
    sidecar = tmp_path / "bad.json"
    sidecar.write_text('{"kind":"current","sample_rate_hz":10000,"nominal_freq_hz":60,"units":"A"}')
    path.write_text("wrong,header\n")
    with pytest.raises(ValueError, match="line 1"):
        read_csv(path)
    path.write_text("t,pa,pb,pc,label\n0,1,2,3\n")
    with pytest.raises(ValueError, match="line 2"):
        read_csv(path)
    path.write_text("t,pa,pb,pc,label\n0,1,2,3,\n0.0001,1,nan,3,\n")
    with pytest.raises(ValueError, match="line 3"):
        read_csv(path)
