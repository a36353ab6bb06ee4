"""Mutual information identities, greedy redundancy-aware ranking, forest
importance, and exhaustive subset search."""

import math

import numpy as np
import pytest

from relaykit.learn import ForestConfig
from relaykit.select import FeatureMatrix, mrmr_rank, mutual_information, rf_importance, subset_search


def test_mi_deterministic_dependence_equals_entropy():
    rng = np.random.default_rng(0)
    y = rng.integers(0, 3, 3000)
    x = y.astype(float)
    probs = np.bincount(y) / len(y)
    entropy = -np.sum(probs * np.log2(probs))
    assert mutual_information(x, y, bins=16) == pytest.approx(entropy, abs=1e-9)


def test_mi_independent_near_zero():
    rng = np.random.default_rng(1)
    x = rng.standard_normal(10_000)
    y = rng.integers(0, 2, 10_000)
    assert mutual_information(x, y) < 0.01


def test_mi_constant_column_zero():
    y = np.array([0, 1] * 50)
    assert mutual_information(np.full(100, 3.3), y) == 0.0


def test_mi_nonnegative_and_affine_invariant():
    rng = np.random.default_rng(2)
    for _ in range(20):
        x = rng.standard_normal(500)
        y = rng.integers(0, 3, 500)
        mi = mutual_information(x, y)
        assert mi >= 0
        assert mutual_information(3.7 * x + 11.0, y) == pytest.approx(mi, abs=1e-12)


def make_matrix(seed=3, n=800):
    rng = np.random.default_rng(seed)
    y = rng.integers(0, 2, n)
    f = y + 0.3 * rng.standard_normal(n)          # informative
    g = 0.7 * y + 0.8 * rng.standard_normal(n)    # weaker, independent noise path
    copy_f = f.copy()                             # perfectly redundant with f
    noise = rng.standard_normal(n)
    rows = np.column_stack([f, copy_f, g, noise])
    return FeatureMatrix(("f", "f_copy", "g", "noise"), rows, y)


def test_mrmr_first_pick_is_max_relevance():
    m = make_matrix()
    ranked = mrmr_rank(m, k=1)
    names = [n for n, _ in ranked.ranking]
    mis = {name: mutual_information(m.column(name), m.target) for name in m.columns}
    assert names[0] == max(sorted(mis), key=lambda n: mis[n])


def test_mrmr_penalizes_redundant_copy():
    m = make_matrix()
    ranked = mrmr_rank(m, k=3)
    names = ranked.names()
    # the duplicate of the winner must fall behind the independent feature
    assert names[0] in ("f", "f_copy")
    assert names[1] == "g"


def test_mrmr_exhaustion_is_permutation():
    m = make_matrix()
    names = mrmr_rank(m, k=4).names()
    assert sorted(names) == sorted(m.columns)
    with pytest.raises(ValueError):
        mrmr_rank(m, k=5)


def test_mrmr_first_matches_mi_argmax_random_trials():
    rng = np.random.default_rng(4)
    for _ in range(100):
        n = 120
        y = rng.integers(0, 2, n)
        rows = rng.standard_normal((n, 5))
        rows[:, rng.integers(0, 5)] += y * rng.uniform(0.5, 2.0)
        cols = tuple(f"c{i}" for i in range(5))
        m = FeatureMatrix(cols, rows, y)
        first = mrmr_rank(m, k=1).names()[0]
        mis = {name: mutual_information(m.column(name), y) for name in cols}
        best = max(mis.values())
        ties = sorted(name for name, v in mis.items() if v == best)
        assert first == ties[0]


def test_rf_importance_constant_feature_zero():
    rng = np.random.default_rng(5)
    n = 300
    y = rng.integers(0, 2, n)
    rows = np.column_stack([y + 0.2 * rng.standard_normal(n), np.full(n, 2.0)])
    m = FeatureMatrix(("hot", "flat"), rows, y)
    ranked = rf_importance(m, ForestConfig(n_estimators=10, seed=1))
    scores = dict(ranked.ranking)
    assert scores["flat"] == 0.0
    assert scores["hot"] > 0.0
    assert all(s >= 0 and np.isfinite(s) for s in scores.values())


def test_rf_importance_separating_feature_ranks_first():
    rng = np.random.default_rng(6)
    wins = 0
    for trial in range(100):
        n = 120
        y = rng.integers(0, 2, n)
        rows = rng.standard_normal((n, 6))
        rows[:, 0] = y * 4.0 + 0.05 * rng.standard_normal(n)   # perfect separator
        m = FeatureMatrix(tuple(f"c{i}" for i in range(6)), rows, y)
        ranked = rf_importance(m, ForestConfig(n_estimators=12, max_features=2,
                                               seed=trial))
        if ranked.names()[0] == "c0":
            wins += 1
    assert wins >= 95


def test_rf_importance_single_class_rejected():
    m = FeatureMatrix(("a",), np.zeros((10, 1)), np.zeros(10, dtype=int))
    with pytest.raises(ValueError):
        rf_importance(m)


def test_subset_search_counts_and_winner():
    rng = np.random.default_rng(7)
    n = 80
    y = rng.integers(0, 2, n)
    rows = rng.standard_normal((n, 10))
    rows[:, 4] = y * 10.0   # one perfectly separating feature
    cols = tuple(f"c{i}" for i in range(10))
    m = FeatureMatrix(cols, rows, y)
    subset, score, n_eval = subset_search(m, cols, cv_folds=4, seed=0)
    assert n_eval == 1023
    assert subset == ("c4",)       # smallest winning subset under the tie-break
    assert score == 1.0


def test_subset_search_singleton():
    m = make_matrix(n=60)
    subset, score, n_eval = subset_search(m, ["f"], cv_folds=3)
    assert subset == ("f",) and n_eval == 1


def test_subset_search_winner_at_least_best_single():
    m = make_matrix(seed=8, n=120)
    cands = list(m.columns)
    subset, best, _ = subset_search(m, cands, cv_folds=4, seed=1)
    for name in cands:
        _, single, _ = subset_search(m, [name], cv_folds=4, seed=1)
        assert best >= single - 1e-12


def test_subset_search_validates():
    m = make_matrix(n=60)
    with pytest.raises(ValueError):
        subset_search(m, [])
    with pytest.raises(ValueError):
        subset_search(m, ["nope"])
