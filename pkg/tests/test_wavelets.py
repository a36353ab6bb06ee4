"""Reconstruction and Parseval across every supported wavelet, Haar identities,
and the decomposition-depth formula."""

import numpy as np
import pytest

from relaykit.features import (WaveletSpec, dwt, filter_length, idwt, max_level,
                               parse_wavelet_name, supported_wavelets, total_detail_energy,
                               wavelet_energy)

ORTHOGONAL = tuple(n for n in supported_wavelets() if n[:2] in ("db", "sy", "co"))


def spec_for(name, level):
    family, order = parse_wavelet_name(name)
    return WaveletSpec(family, order, level)


def test_registry_contents():
    names = supported_wavelets()
    assert len(names) == 35
    assert {"db1", "db10", "sym2", "sym10", "coif1", "coif4",
            "bior2.2", "rbio3.9", "bior4.4"}.issubset(names)
    assert max(filter_length(n) for n in names) <= 24


def test_max_level_values():
    assert max_level(167, 8) == 4
    assert max_level(167, 2) == 7
    assert max_level(250, 6) == 5
    with pytest.raises(ValueError):
        max_level(100, 1)
    with pytest.raises(ValueError):
        max_level(5, 8)


def test_haar_constant_has_zero_details():
    res = dwt(np.full(64, 3.7), spec_for("db1", 1))
    assert np.abs(res.details[0]).max() < 1e-12


def test_haar_alternating_signal_energy_in_details():
    x = np.array([1.0, -1.0] * 32)
    res = dwt(x, spec_for("db1", 1), mode="periodic")
    assert wavelet_energy(res.details[0]) == pytest.approx(np.sum(x * x))
    assert np.abs(res.approx).max() < 1e-12


def test_db4_level4_reconstruction_on_167():
    rng = np.random.default_rng(2)
    x = rng.standard_normal(167)
    res = dwt(x, spec_for("db4", 4))
    assert len(res.details) == 4
    assert np.abs(idwt(res) - x).max() < 1e-8


def test_reconstruction_all_wavelets_100_random_signals():
    rng = np.random.default_rng(3)
    for name in supported_wavelets():
        flen = filter_length(name)
        worst = 0.0
        for _ in range(100 // len(supported_wavelets()) + 3):
            n = int(rng.integers(max(flen, 32), 300))
            lvl = max(1, min(3, max_level(n, flen)))
            x = rng.standard_normal(n)
            res = dwt(x, spec_for(name, lvl))
            worst = max(worst, float(np.abs(idwt(res) - x).max()))
        assert worst < 1e-8, name


def test_parseval_orthogonal_periodic():
    rng = np.random.default_rng(4)
    for name in ORTHOGONAL:
        flen = filter_length(name)
        for n in (64, 128, 256):
            lvl = max(1, min(3, max_level(n, flen)))
            x = rng.standard_normal(n)
            res = dwt(x, spec_for(name, lvl), mode="periodic")
            total = wavelet_energy(res.approx) + sum(map(wavelet_energy, res.details))
            assert abs(total - np.sum(x * x)) / np.sum(x * x) < 1e-10, name


def test_level_cap_enforced():
    with pytest.raises(ValueError, match="max level"):
        dwt(np.ones(167), spec_for("db4", 5))
    with pytest.raises(ValueError):
        WaveletSpec("daubechies", 4, 0)
    with pytest.raises(ValueError):
        WaveletSpec("daubechies", 99, 1)


def test_wavelet_energy_values():
    assert wavelet_energy([]) == 0.0
    assert wavelet_energy([3.0, 4.0]) == 25.0


def test_total_detail_energy_runs_everywhere():
    rng = np.random.default_rng(5)
    x = rng.standard_normal(167)
    for name in ("db4", "rbio3.1", "bior3.9", "sym10", "coif4"):
        assert total_detail_energy(x, name) > 0
