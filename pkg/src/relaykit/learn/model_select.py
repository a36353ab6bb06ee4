"""Model selection: stratified folds, grid search, and Gaussian-process
Bayesian optimization with expected improvement."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import qmc

from .metrics import balanced_accuracy, confusion_matrix
from .trees import Dataset


def stratified_folds(y, k: int, seed: int = 0) -> list[np.ndarray]:
    """Disjoint covering folds whose per-class counts differ from the exact
    proportion by at most one; deterministic per seed."""
    y = np.asarray(y, dtype=np.int64)
    if k < 2:
        raise ValueError("need at least two folds")
    classes, counts = np.unique(y, return_counts=True)
    if k > counts.min():
        raise ValueError(f"k={k} exceeds the smallest class count {counts.min()}")
    rng = np.random.default_rng(seed)
    folds: list[list[int]] = [[] for _ in range(k)]
    for cls in classes:
        idx = np.where(y == cls)[0]
        rng.shuffle(idx)
        base, extra = divmod(len(idx), k)
        start = 0
        for f in range(k):
            size = base + (1 if f < extra else 0)
            folds[f].extend(idx[start:start + size].tolist())
            start += size
    return [np.sort(np.asarray(f, dtype=np.int64)) for f in folds]


def cross_validated_accuracy(d: Dataset, train_fn, predict_fn, cv_folds: int,
                             seed: int = 0) -> float:
    """Mean balanced accuracy over stratified folds."""
    folds = stratified_folds(d.y, cv_folds, seed)
    scores = []
    for f in folds:
        test_mask = np.zeros(len(d.y), dtype=bool)
        test_mask[f] = True
        train = Dataset(d.x[~test_mask], d.y[~test_mask], d.class_names)
        model = train_fn(train)
        pred = predict_fn(model, d.x[test_mask])
        cm = confusion_matrix(d.y[test_mask], pred, d.n_classes)
        keep = cm.sum(axis=1) > 0
        scores.append(balanced_accuracy(cm[np.ix_(keep, keep)]))
    return float(np.mean(scores))


def grid_search(d: Dataset, family: str, grid, cv_folds: int = 10,
                metric: str = "balanced_accuracy", seed: int = 0):
    """Evaluate every grid point with stratified CV; ties go to the first point
    in declared order. Returns (best_params, best_score)."""
    from .predict import make_trainer   # local import avoids a cycle
    if metric != "balanced_accuracy":
        raise ValueError("only balanced_accuracy is supported")
    grid = list(grid)
    if not grid:
        raise ValueError("empty hyperparameter grid")
    best_params, best_score = None, -math.inf
    for params in grid:
        train_fn, predict_fn = make_trainer(family, params)
        score = cross_validated_accuracy(d, train_fn, predict_fn, cv_folds, seed)
        if score > best_score:
            best_params, best_score = params, score
    return best_params, best_score


# ---------------------------------------------------------------------------
# Bayesian optimization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoxAxis:
    name: str
    low: float
    high: float


@dataclass(frozen=True)
class CategoricalAxis:
    name: str
    values: tuple


class SearchSpace:
    """Box plus categorical axes, encoded on the unit cube (one-hot for
    categorical axes)."""

    def __init__(self, axes):
        if not axes:
            raise ValueError("empty search space")
        self.axes = list(axes)
        self.enc_dim = sum(1 if isinstance(a, BoxAxis) else len(a.values)
                           for a in self.axes)

    def decode(self, u: np.ndarray) -> dict:
        out = {}
        pos = 0
        for a in self.axes:
            if isinstance(a, BoxAxis):
                out[a.name] = a.low + (a.high - a.low) * float(u[pos])
                pos += 1
            else:
                w = u[pos:pos + len(a.values)]
                out[a.name] = a.values[int(np.argmax(w))]
                pos += len(a.values)
        return out


def _gp_fit(xn, y, noise=1e-6):
    """Squared-exponential GP; hyperparameters from an 8x8 marginal-likelihood grid."""
    y_mean, y_std = float(np.mean(y)), float(np.std(y)) or 1.0
    ys = (y - y_mean) / y_std
    d2 = np.sum((xn[:, None, :] - xn[None, :, :]) ** 2, axis=-1)
    best = None
    for ell in np.logspace(-1.5, 0.7, 8):
        for sig2 in np.logspace(-2, 1, 8):
            k = sig2 * np.exp(-0.5 * d2 / ell ** 2) + (noise + 1e-9) * np.eye(len(ys))
            try:
                chol = np.linalg.cholesky(k)
            except np.linalg.LinAlgError:
                continue
            alpha = np.linalg.solve(chol.T, np.linalg.solve(chol, ys))
            ll = (-0.5 * float(ys @ alpha) - float(np.sum(np.log(np.diag(chol))))
                  - 0.5 * len(ys) * math.log(2 * math.pi))
            if best is None or ll > best[0]:
                best = (ll, ell, sig2, chol, alpha)
    _, ell, sig2, chol, alpha = best
    return {"x": xn, "ell": ell, "sig2": sig2, "chol": chol, "alpha": alpha,
            "y_mean": y_mean, "y_std": y_std}


def _gp_predict(gp, q: np.ndarray):
    d2 = np.sum((q[:, None, :] - gp["x"][None, :, :]) ** 2, axis=-1)
    ks = gp["sig2"] * np.exp(-0.5 * d2 / gp["ell"] ** 2)
    mu = ks @ gp["alpha"]
    v = np.linalg.solve(gp["chol"], ks.T)
    var = np.maximum(gp["sig2"] - np.sum(v * v, axis=0), 1e-12)
    return gp["y_mean"] + gp["y_std"] * mu, gp["y_std"] * np.sqrt(var)


def _expected_improvement(mu, sigma, best):
    z = (mu - best) / sigma
    phi = np.exp(-0.5 * z * z) / math.sqrt(2 * math.pi)
    cdf = 0.5 * (1 + np.vectorize(math.erf)(z / math.sqrt(2)))
    return (mu - best) * cdf + sigma * phi


def bayes_opt(objective, space: SearchSpace, n_init: int = 4, n_iter: int = 20,
              seed: int = 0, n_candidates: int = 1024):
    """Maximize a black-box objective; returns (best_params, best_value, history).

    The acquisition is expected improvement, maximized over seeded quasi-random
    candidates each iteration; the result is the best observed point.
    """
    if n_init < 2:
        raise ValueError("n_init must be at least 2")
    dim = space.enc_dim
    sob = qmc.Sobol(dim, scramble=True, seed=seed)
    draw = 1 << max(0, (n_init - 1).bit_length())
    xn = sob.random(draw)[:n_init]
    ys = np.array([objective(space.decode(u)) for u in xn], dtype=float)
    history = [(space.decode(u), float(v)) for u, v in zip(xn, ys)]
    for it in range(n_iter):
        gp = _gp_fit(xn, ys)
        cand = qmc.Sobol(dim, scramble=True, seed=seed + 1000 + it).random(n_candidates)
        mu, sigma = _gp_predict(gp, cand)
        ei = _expected_improvement(mu, sigma, float(ys.max()))
        pick = cand[int(np.argmax(ei))]
        val = float(objective(space.decode(pick)))
        xn = np.vstack([xn, pick])
        ys = np.append(ys, val)
        history.append((space.decode(pick), val))
    best = int(np.argmax(ys))
    return space.decode(xn[best]), float(ys[best]), history
