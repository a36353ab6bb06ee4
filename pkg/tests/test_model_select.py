"""Grid search and Gaussian-process Bayesian optimization."""

import numpy as np
import pytest

from relaykit.learn import (BoxAxis, CategoricalAxis, Dataset, SearchSpace, bayes_opt,
                            cross_validated_accuracy, grid_search, make_trainer)


def xorish_dataset(n=240, seed=0):
    rng = np.random.default_rng(seed)
    x = rng.uniform(-1, 1, (n, 2))
    y = ((x[:, 0] > 0) ^ (x[:, 1] > 0)).astype(int)
    x += 0.05 * rng.standard_normal((n, 2))
    return Dataset(x, y, ("a", "b"))


def test_grid_search_single_point():
    d = xorish_dataset()
    params, score = grid_search(d, "tree", [{"max_depth": 3}], cv_folds=3)
    assert params == {"max_depth": 3}
    assert 0.0 <= score <= 1.0


def test_grid_search_prefers_deeper_tree_on_xor():
    d = xorish_dataset()
    grid = [{"max_depth": 1}, {"max_depth": 5}]
    params, score = grid_search(d, "tree", grid, cv_folds=5, seed=1)
    assert params == {"max_depth": 5}
    assert score > 0.9


def test_grid_search_score_reproducible():
    d = xorish_dataset(seed=2)
    params, score = grid_search(d, "knn", [{"k": 3}], cv_folds=4, seed=7)
    train_fn, predict_fn = make_trainer("knn", params)
    again = cross_validated_accuracy(d, train_fn, predict_fn, 4, seed=7)
    assert score == pytest.approx(again, abs=1e-12)


def test_grid_search_empty_grid_rejected():
    with pytest.raises(ValueError):
        grid_search(xorish_dataset(), "tree", [], cv_folds=3)


def test_bayes_opt_finds_quadratic_optimum_all_seeds():
    space = SearchSpace([BoxAxis("z", 0.0, 1.0)])
    hits = 0
    for seed in range(10):
        best, val, _ = bayes_opt(lambda p: -(p["z"] - 0.33) ** 2, space,
                                 n_init=4, n_iter=11, seed=seed)
        if abs(best["z"] - 0.33) <= 0.02:
            hits += 1
    assert hits == 10


def test_bayes_opt_zero_iterations_returns_best_init():
    space = SearchSpace([BoxAxis("z", 0.0, 1.0)])
    best, val, history = bayes_opt(lambda p: p["z"], space, n_init=5, n_iter=0, seed=3)
    assert len(history) == 5
    assert val == max(h[1] for h in history)


def test_bayes_opt_deterministic_per_seed():
    space = SearchSpace([BoxAxis("z", -2.0, 2.0), CategoricalAxis("kind", ("lin", "quad"))])

    def f(p):
        base = -(p["z"] - 0.5) ** 2
        return base + (0.3 if p["kind"] == "quad" else 0.0)

    a = bayes_opt(f, space, n_init=4, n_iter=6, seed=11)
    b = bayes_opt(f, space, n_init=4, n_iter=6, seed=11)
    assert a[0] == b[0] and a[1] == b[1]


def test_bayes_opt_validates_inputs():
    with pytest.raises(ValueError):
        SearchSpace([])
    space = SearchSpace([BoxAxis("z", 0.0, 1.0)])
    with pytest.raises(ValueError):
        bayes_opt(lambda p: 0.0, space, n_init=1, n_iter=2)
