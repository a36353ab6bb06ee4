"""CART classification trees and the regression trees used inside boosting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class Dataset:
    """Feature matrix with integer class labels 0..c-1."""

    x: np.ndarray
    y: np.ndarray
    class_names: tuple

    def __post_init__(self):
        x = np.ascontiguousarray(np.asarray(self.x, dtype=np.float64))
        y = np.asarray(self.y, dtype=np.int64)
        if x.ndim != 2 or len(y) != x.shape[0]:
            raise ValueError("x must be (n, d) with one label per row")
        if not np.isfinite(x).all():
            raise ValueError("feature matrix contains non-finite entries")
        if len(y) and (y.min() < 0 or y.max() >= len(self.class_names)):
            raise ValueError("labels must index class_names")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def n_classes(self) -> int:
        return len(self.class_names)


def impurity(counts, criterion: str = "gini") -> float:
    """Gini impurity or entropy (bits) of a class-count vector."""
    c = np.asarray(counts, dtype=np.float64)
    total = c.sum()
    if total < 1:
        raise ValueError("impurity needs at least one sample")
    p = c / total
    if criterion == "gini":
        return float(1.0 - np.sum(p * p))
    if criterion == "entropy":
        nz = p[p > 0]
        return float(-np.sum(nz * np.log2(nz)))
    raise ValueError(f"unknown criterion {criterion!r}")


def split_gain(parent, left, right, criterion: str = "gini") -> float:
    """Information gain of splitting parent counts into left and right."""
    pa = np.asarray(parent, dtype=np.float64)
    le = np.asarray(left, dtype=np.float64)
    ri = np.asarray(right, dtype=np.float64)
    if not np.array_equal(le + ri, pa):
        raise ValueError("left + right must equal parent elementwise")
    n_p, n_l, n_r = pa.sum(), le.sum(), ri.sum()
    gain = impurity(pa, criterion)
    if n_l > 0:
        gain -= n_l / n_p * impurity(le, criterion)
    if n_r > 0:
        gain -= n_r / n_p * impurity(ri, criterion)
    return float(gain)


@dataclass(frozen=True)
class TreeConfig:
    criterion: str = "gini"
    max_depth: int | None = None
    min_samples_split: int = 2

    def __post_init__(self):
        if self.criterion not in ("gini", "entropy"):
            raise ValueError("criterion must be 'gini' or 'entropy'")
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError("max_depth must be non-negative")
        if self.min_samples_split < 2:
            raise ValueError("min_samples_split must be at least 2")


@dataclass
class TreeNode:
    counts: np.ndarray
    impurity: float
    feature: int | None = None
    threshold: float = 0.0
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.feature is None

    @property
    def distribution(self) -> np.ndarray:
        total = self.counts.sum()
        return self.counts / total if total else self.counts


@dataclass
class TreeModel:
    root: TreeNode
    n_features: int
    n_classes: int
    config: TreeConfig


def _impurity_from_counts(counts: np.ndarray, criterion: str) -> np.ndarray:
    """Vectorized impurity of rows of a counts matrix; zero-total rows give 0."""
    totals = counts.sum(axis=-1, keepdims=True)
    safe = np.where(totals > 0, totals, 1.0)
    p = counts / safe
    if criterion == "gini":
        out = 1.0 - np.sum(p * p, axis=-1)
    else:
        with np.errstate(divide="ignore", invalid="ignore"):
            logs = np.where(p > 0, np.log2(np.where(p > 0, p, 1.0)), 0.0)
        out = -np.sum(p * logs, axis=-1)
    return np.where(totals[..., 0] > 0, out, 0.0)


def _best_class_split(x, onehot, idx, criterion, features):
    """(gain, feature, threshold) maximizing information gain at one node.

    Ties resolve to the lowest feature index, then the lowest threshold.
    """
    n = len(idx)
    parent = onehot[idx].sum(axis=0)
    parent_imp = impurity(parent, criterion)
    best = (-np.inf, None, 0.0)
    for j in features:
        vals = x[idx, j]
        order = np.argsort(vals, kind="stable")
        sv = vals[order]
        cum = np.cumsum(onehot[idx][order], axis=0)
        pos = np.nonzero(sv[1:] > sv[:-1])[0]
        if len(pos) == 0:
            continue
        left = cum[pos]
        right = parent - left
        n_l = (pos + 1).astype(np.float64)
        n_r = n - n_l
        child = (n_l * _impurity_from_counts(left, criterion)
                 + n_r * _impurity_from_counts(right, criterion)) / n
        gains = parent_imp - child
        k = int(np.argmax(gains))
        # strict comparison keeps the lowest feature index on exact ties;
        # argmax keeps the lowest threshold within a feature
        if gains[k] > best[0]:
            thr = 0.5 * (sv[pos[k]] + sv[pos[k] + 1])
            best = (float(gains[k]), j, float(thr))
    return best


def _grow(x, y, onehot, idx, depth, cfg, rng, max_features, n_classes):
    counts = onehot[idx].sum(axis=0)
    node = TreeNode(counts=counts, impurity=impurity(counts, cfg.criterion))
    n = len(idx)
    if (cfg.max_depth is not None and depth >= cfg.max_depth) \
            or n < cfg.min_samples_split or node.impurity == 0.0:
        return node
    d = x.shape[1]
    if max_features is not None and max_features < d:
        features = np.sort(rng.choice(d, size=max_features, replace=False))
    else:
        features = np.arange(d)
    # zero-gain splits stay allowed (an impure node may need two levels, as in
    # XOR); termination is guaranteed because both children are always smaller
    gain, feat, thr = _best_class_split(x, onehot, idx, cfg.criterion, features)
    if feat is None or gain < 0.0:
        return node
    node.feature = feat
    node.threshold = thr
    mask = x[idx, feat] <= thr
    node.left = _grow(x, y, onehot, idx[mask], depth + 1, cfg, rng, max_features, n_classes)
    node.right = _grow(x, y, onehot, idx[~mask], depth + 1, cfg, rng, max_features, n_classes)
    return node


def train_tree(d: Dataset, cfg: TreeConfig = TreeConfig(), rng=None,
               max_features: int | None = None,
               sample_indices: Sequence[int] | None = None) -> TreeModel:
    """Greedy CART: thresholds at midpoints of sorted distinct values."""
    if d.x.shape[0] < 1:
        raise ValueError("empty dataset")
    onehot = np.zeros((d.x.shape[0], d.n_classes))
    onehot[np.arange(len(d.y)), d.y] = 1.0
    idx = np.arange(d.x.shape[0]) if sample_indices is None \
        else np.asarray(sample_indices, dtype=np.int64)
    rng = rng or np.random.default_rng(0)
    root = _grow(d.x, d.y, onehot, idx, 0, cfg, rng, max_features, d.n_classes)
    return TreeModel(root, d.x.shape[1], d.n_classes, cfg)


def tree_distributions(model: TreeModel, rows: np.ndarray) -> np.ndarray:
    """Per-row leaf class distributions."""
    rows = np.asarray(rows, dtype=np.float64)
    if rows.ndim != 2 or rows.shape[1] != model.n_features:
        raise ValueError(f"expected rows of width {model.n_features}")
    out = np.empty((rows.shape[0], model.n_classes))

    def descend(node, mask):
        if node.is_leaf:
            out[mask] = node.distribution
            return
        go_left = rows[:, node.feature] <= node.threshold
        descend(node.left, mask & go_left)
        descend(node.right, mask & ~go_left)

    descend(model.root, np.ones(rows.shape[0], dtype=bool))
    return out


# ---------------------------------------------------------------------------
# Regression trees for gradient boosting
# ---------------------------------------------------------------------------

@dataclass
class RegNode:
    value: float
    feature: int | None = None
    threshold: float = 0.0
    left: "RegNode | None" = None
    right: "RegNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.feature is None


def fit_regression_tree(x, grad, hess, idx, max_depth, lam=0.0, gamma=0.0,
                        min_leaf=1, newton=False) -> RegNode:
    """Depth-bounded regression tree on (gradient, hessian) statistics.

    newton=False fits leaf means of grad (hess acts as the sample count);
    newton=True uses second-order leaf weights -G/(H+lam) and drops splits
    whose structural gain does not exceed gamma.
    """

    def leaf_value(g_sum, h_sum):
        if newton:
            return float(-g_sum / (h_sum + lam)) if (h_sum + lam) > 0 else 0.0
        return float(g_sum / h_sum) if h_sum > 0 else 0.0

    def grow(node_idx, depth):
        g_tot = float(grad[node_idx].sum())
        h_tot = float(hess[node_idx].sum())
        node = RegNode(value=leaf_value(g_tot, h_tot))
        if depth >= max_depth or len(node_idx) < 2 * min_leaf:
            return node
        xs = x[node_idx]
        order = np.argsort(xs, axis=0, kind="stable")
        sv = np.take_along_axis(xs, order, axis=0)
        gs = np.cumsum(grad[node_idx][order], axis=0)
        hs = np.cumsum(hess[node_idx][order], axis=0)
        n = len(node_idx)
        valid = sv[1:] > sv[:-1]
        counts = np.arange(1, n)[:, None]
        ok = valid & (counts >= min_leaf) & ((n - counts) >= min_leaf)
        if not ok.any():
            return node
        gl, hl = gs[:-1], hs[:-1]
        gr, hr = g_tot - gl, h_tot - hl
        with np.errstate(divide="ignore", invalid="ignore"):
            gain = (gl * gl / (hl + lam) + gr * gr / (hr + lam)
                    - g_tot * g_tot / (h_tot + lam))
        gain = np.where(ok, gain, -np.inf)
        # feature-major argmax: lowest feature index, then lowest threshold
        k = int(np.argmax(gain.T))
        feat, pos = divmod(k, gain.shape[0])
        g_best = gain.T.flat[k]
        if newton:
            if 0.5 * g_best <= gamma:
                return node
        elif g_best <= 1e-12:
            return node
        node.feature = int(feat)
        node.threshold = float(0.5 * (sv[pos, feat] + sv[pos + 1, feat]))
        mask = xs[:, feat] <= node.threshold
        node.left = grow(node_idx[mask], depth + 1)
        node.right = grow(node_idx[~mask], depth + 1)
        return node

    return grow(idx, 0)


def reg_tree_predict(node: RegNode, rows: np.ndarray) -> np.ndarray:
    out = np.empty(rows.shape[0])

    def descend(nd, mask):
        if nd.is_leaf:
            out[mask] = nd.value
            return
        go_left = rows[:, nd.feature] <= nd.threshold
        descend(nd.left, mask & go_left)
        descend(nd.right, mask & ~go_left)

    descend(node, np.ones(rows.shape[0], dtype=bool))
    return out
