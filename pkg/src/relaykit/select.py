"""Feature ranking and subset selection: mutual information, greedy
relevance-minus-redundancy ranking, forest impurity importance, and exhaustive
subset search with a baseline classifier."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .learn import (Dataset, ForestConfig, cross_validated_accuracy,
                    feature_importances, make_trainer, train_forest)


@dataclass(frozen=True)
class FeatureMatrix:
    """Rectangular named feature columns with one target label per row."""

    columns: tuple
    rows: np.ndarray
    target: np.ndarray

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=np.float64)
        target = np.asarray(self.target, dtype=np.int64)
        if rows.ndim != 2 or rows.shape[1] != len(self.columns):
            raise ValueError("rows must be (n, len(columns))")
        if len(target) != rows.shape[0]:
            raise ValueError("one target per row required")
        if not np.isfinite(rows).all():
            raise ValueError("feature matrix contains non-finite entries")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "target", target)

    def column(self, name: str) -> np.ndarray:
        return self.rows[:, self.columns.index(name)]

    def to_dataset(self, names: Sequence[str] | None = None) -> Dataset:
        classes = tuple(str(c) for c in np.unique(self.target))
        remap = {c: i for i, c in enumerate(np.unique(self.target))}
        y = np.array([remap[v] for v in self.target])
        if names is None:
            return Dataset(self.rows, y, classes)
        cols = [self.columns.index(n) for n in names]
        return Dataset(self.rows[:, cols], y, classes)


@dataclass(frozen=True)
class RankedFeatures:
    """(name, score) pairs in the method's selection order."""

    ranking: tuple

    def names(self) -> tuple:
        return tuple(name for name, _ in self.ranking)

    def report(self) -> list[dict]:
        return [{"name": n, "score": float(s), "rank": i + 1}
                for i, (n, s) in enumerate(self.ranking)]


def _discretize(x: np.ndarray, bins: int) -> np.ndarray:
    lo, hi = float(x.min()), float(x.max())
    if hi <= lo:
        return np.zeros(len(x), dtype=np.int64)
    edges = np.linspace(lo, hi, bins + 1)
    idx = np.searchsorted(edges, x, side="right") - 1
    return np.clip(idx, 0, bins - 1)


def _mi_discrete(a: np.ndarray, b: np.ndarray) -> float:
    """Plug-in mutual information (bits) of two integer-coded variables."""
    n = len(a)
    joint: dict[tuple[int, int], int] = {}
    ca: dict[int, int] = {}
    cb: dict[int, int] = {}
    for va, vb in zip(a.tolist(), b.tolist()):
        joint[(va, vb)] = joint.get((va, vb), 0) + 1
        ca[va] = ca.get(va, 0) + 1
        cb[vb] = cb.get(vb, 0) + 1
    mi = 0.0
    for (va, vb), c in joint.items():
        p_ab = c / n
        mi += p_ab * math.log2(p_ab / (ca[va] / n * cb[vb] / n))
    return max(mi, 0.0)


def mutual_information(x, y, bins: int = 16) -> float:
    """Equal-width-binned MI estimate between a real column and class labels."""
    if bins < 2:
        raise ValueError("bins must be at least 2")
    xv = np.asarray(x, dtype=np.float64)
    if not np.isfinite(xv).all():
        raise ValueError("column contains non-finite values")
    yv = np.asarray(y)
    _, y_codes = np.unique(yv, return_inverse=True)
    return _mi_discrete(_discretize(xv, bins), y_codes.astype(np.int64))


def mrmr_rank(m: FeatureMatrix, k: int, bins: int = 16) -> RankedFeatures:
    """Greedy forward selection maximizing relevance minus mean redundancy.

    The first pick is the maximum-relevance feature; later picks maximize
    I(x; y) - (1/|S|) sum of I(x; s) over the already selected set. Ties break
    lexicographically by name.
    """
    if k > len(m.columns):
        raise ValueError(f"k={k} exceeds {len(m.columns)} columns")
    if k < 1:
        raise ValueError("k must be at least 1")
    _, y_codes = np.unique(m.target, return_inverse=True)
    y_codes = y_codes.astype(np.int64)
    disc = {name: _discretize(m.column(name), bins) for name in m.columns}
    relevance = {name: _mi_discrete(disc[name], y_codes) for name in m.columns}
    pairwise: dict[tuple[str, str], float] = {}

    def redundancy(a: str, b: str) -> float:
        key = (a, b) if a <= b else (b, a)
        if key not in pairwise:
            pairwise[key] = _mi_discrete(disc[a], disc[b])
        return pairwise[key]

    selected: list[tuple[str, float]] = []
    remaining = list(m.columns)
    while len(selected) < k:
        best_name, best_score = None, -math.inf
        for name in sorted(remaining):
            score = relevance[name]
            if selected:
                score -= sum(redundancy(name, s) for s, _ in selected) / len(selected)
            if score > best_score:
                best_name, best_score = name, score
        selected.append((best_name, best_score))
        remaining.remove(best_name)
    return RankedFeatures(tuple(selected))


def rf_importance(m: FeatureMatrix, forest_cfg: ForestConfig = ForestConfig()) -> RankedFeatures:
    """Mean impurity-decrease importance from a trained forest, sorted descending."""
    d = m.to_dataset()
    if d.n_classes < 2:
        raise ValueError("need at least two target classes")
    model = train_forest(d, forest_cfg)
    scores = feature_importances(model)
    order = sorted(range(len(m.columns)), key=lambda i: (-scores[i], m.columns[i]))
    return RankedFeatures(tuple((m.columns[i], float(scores[i])) for i in order))


def subset_search(m: FeatureMatrix, candidates: Sequence[str],
                  baseline: str = "decision_tree", cv_folds: int = 5,
                  seed: int = 0):
    """Exhaustive stratified-CV search over every nonempty candidate subset.

    Ties break toward smaller subsets, then lexicographic order. Returns
    (best_subset, best_score, n_evaluated).
    """
    candidates = list(candidates)
    if not 1 <= len(candidates) <= 16:
        raise ValueError("need between 1 and 16 candidate features")
    for name in candidates:
        if name not in m.columns:
            raise ValueError(f"unknown feature {name!r}")
    if baseline == "decision_tree":
        train_fn, predict_fn = make_trainer("tree", {"max_depth": 5})
    elif baseline == "knn":
        train_fn, predict_fn = make_trainer("knn", {"k": 3})
    else:
        raise ValueError("baseline must be 'decision_tree' or 'knn'")

    best_subset, best_score = None, -math.inf
    n_eval = 0
    for size in range(1, len(candidates) + 1):
        for combo in itertools.combinations(sorted(candidates), size):
            d = m.to_dataset(combo)
            score = cross_validated_accuracy(d, train_fn, predict_fn, cv_folds, seed)
            n_eval += 1
            if score > best_score:
                best_subset, best_score = combo, score
    return best_subset, best_score, n_eval
