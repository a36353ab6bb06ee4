"""Stage-wise gradient boosting with one-vs-rest regression trees per class.

first_order fits trees to the negative gradient of the multinomial deviance and
steps by the learning rate; second_order additionally uses the diagonal hessian
for Newton leaf weights -G/(H+lambda) and prunes splits whose structural gain
does not exceed the complexity penalty gamma.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .trees import Dataset, fit_regression_tree, reg_tree_predict


@dataclass(frozen=True)
class BoostConfig:
    mode: str = "first_order"
    n_stages: int = 100
    learning_rate: float = 0.1
    max_depth: int = 3
    subsample: float = 1.0
    gamma: float = 0.0
    lam: float = 1.0
    min_samples_leaf: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("first_order", "second_order"):
            raise ValueError("mode must be 'first_order' or 'second_order'")
        if self.n_stages < 0:
            raise ValueError("n_stages must be non-negative")
        if self.learning_rate < 0:
            raise ValueError("learning_rate must be non-negative")
        if not 0.0 < self.subsample <= 1.0:
            raise ValueError("subsample must lie in (0, 1]")
        if self.gamma < 0 or self.lam < 0:
            raise ValueError("gamma and lam must be non-negative")


@dataclass
class BoostedModel:
    priors: np.ndarray               # class log-odds, the stage-0 model
    stages: list                     # stages[s][k] is the class-k tree of stage s
    n_features: int
    n_classes: int
    config: BoostConfig
    train_deviance: list = field(default_factory=list)


def _softmax(f: np.ndarray) -> np.ndarray:
    z = f - f.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


def multinomial_deviance(prob: np.ndarray, y: np.ndarray) -> float:
    eps = 1e-12
    return float(-np.mean(np.log(prob[np.arange(len(y)), y] + eps)))


def train_boosted(d: Dataset, cfg: BoostConfig = BoostConfig()) -> BoostedModel:
    n, _ = d.x.shape
    k = d.n_classes
    counts = np.bincount(d.y, minlength=k).astype(np.float64)
    priors = np.log(np.maximum(counts, 1e-12) / n)
    f = np.tile(priors, (n, 1))
    onehot = np.zeros((n, k))
    onehot[np.arange(n), d.y] = 1.0
    rng = np.random.default_rng(cfg.seed)
    newton = cfg.mode == "second_order"

    model = BoostedModel(priors=priors, stages=[], n_features=d.x.shape[1],
                         n_classes=k, config=cfg)
    model.train_deviance.append(multinomial_deviance(_softmax(f), d.y))
    for _ in range(cfg.n_stages):
        prob = _softmax(f)
        if cfg.subsample < 1.0:
            m = max(1, int(round(cfg.subsample * n)))
            idx = np.sort(rng.choice(n, size=m, replace=False))
        else:
            idx = np.arange(n)
        stage_trees = []
        for c in range(k):
            if newton:
                grad = prob[:, c] - onehot[:, c]
                hess = prob[:, c] * (1.0 - prob[:, c])
                tree = fit_regression_tree(d.x, grad, hess, idx, cfg.max_depth,
                                           lam=cfg.lam, gamma=cfg.gamma,
                                           min_leaf=cfg.min_samples_leaf, newton=True)
            else:
                resid = onehot[:, c] - prob[:, c]
                tree = fit_regression_tree(d.x, resid, np.ones(n), idx, cfg.max_depth,
                                           min_leaf=cfg.min_samples_leaf, newton=False)
            stage_trees.append(tree)
            f[:, c] += cfg.learning_rate * reg_tree_predict(tree, d.x)
        model.stages.append(stage_trees)
        model.train_deviance.append(multinomial_deviance(_softmax(f), d.y))
    return model


def boosted_scores(model: BoostedModel, rows: np.ndarray) -> np.ndarray:
    """Per-class probabilities: softmax of prior log-odds plus tree sums."""
    rows = np.asarray(rows, dtype=np.float64)
    f = np.tile(model.priors, (rows.shape[0], 1))
    lr = model.config.learning_rate
    for stage in model.stages:
        for c, tree in enumerate(stage):
            f[:, c] += lr * reg_tree_predict(tree, rows)
    return _softmax(f)
