"""Instance-based and probabilistic baselines: k-nearest-neighbor and Gaussian
naive Bayes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .trees import Dataset


@dataclass(frozen=True)
class KnnConfig:
    k: int = 1
    p: float = 2.0    # Minkowski exponent

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.p <= 0:
            raise ValueError("p must be positive")


@dataclass
class KnnModel:
    x: np.ndarray
    y: np.ndarray
    n_classes: int
    config: KnnConfig


def train_knn(d: Dataset, cfg: KnnConfig = KnnConfig()) -> KnnModel:
    if cfg.k > d.x.shape[0]:
        raise ValueError("k exceeds the number of training samples")
    return KnnModel(d.x.copy(), d.y.copy(), d.n_classes, cfg)


def knn_distributions(model: KnnModel, rows: np.ndarray) -> np.ndarray:
    rows = np.asarray(rows, dtype=np.float64)
    out = np.zeros((rows.shape[0], model.n_classes))
    k, p = model.config.k, model.config.p
    n = model.x.shape[0]
    tiebreak = np.arange(n)
    for i, q in enumerate(rows):
        diff = np.abs(model.x - q)
        dist = np.sum(diff ** p, axis=1)
        nearest = np.lexsort((tiebreak, dist))[:k]
        votes = np.bincount(model.y[nearest], minlength=model.n_classes)
        out[i] = votes / k
    return out


@dataclass
class NbModel:
    means: np.ndarray       # (c, d)
    variances: np.ndarray   # (c, d), smoothed
    log_priors: np.ndarray
    n_classes: int


def train_nb(d: Dataset) -> NbModel:
    """Per-class Gaussian per feature with variance smoothing 1e-9 times the
    largest feature variance."""
    c, dim = d.n_classes, d.x.shape[1]
    means = np.zeros((c, dim))
    variances = np.zeros((c, dim))
    counts = np.zeros(c)
    eps = 1e-9 * float(np.var(d.x, axis=0).max())
    for cls in range(c):
        rows = d.x[d.y == cls]
        counts[cls] = len(rows)
        if len(rows) == 0:
            raise ValueError(f"class {cls} has no training rows")
        means[cls] = rows.mean(axis=0)
        variances[cls] = np.var(rows, axis=0) + max(eps, 1e-300)
    if np.any(variances <= 0):
        raise ValueError("zero variance after smoothing")
    log_priors = np.log(counts / counts.sum())
    return NbModel(means, variances, log_priors, c)


def nb_distributions(model: NbModel, rows: np.ndarray) -> np.ndarray:
    rows = np.asarray(rows, dtype=np.float64)
    n = rows.shape[0]
    logp = np.zeros((n, model.n_classes))
    for cls in range(model.n_classes):
        mu = model.means[cls]
        var = model.variances[cls]
        ll = -0.5 * (np.log(2 * np.pi * var) + (rows - mu) ** 2 / var)
        logp[:, cls] = ll.sum(axis=1) + model.log_priors[cls]
    z = logp - logp.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)
