"""Random forest: bootstrapped CART trees over random feature subsets."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .trees import Dataset, TreeConfig, train_tree, tree_distributions


@dataclass(frozen=True)
class ForestConfig:
    n_estimators: int = 50
    max_depth: int | None = None
    max_features: int | None = None   # None means all features at every split
    bootstrap: bool = True
    criterion: str = "gini"
    min_samples_split: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.n_estimators < 1:
            raise ValueError("n_estimators must be at least 1")


@dataclass
class ForestModel:
    trees: list
    n_features: int
    n_classes: int
    config: ForestConfig


def train_forest(d: Dataset, cfg: ForestConfig = ForestConfig()) -> ForestModel:
    """Trees are trained on bootstrap samples with per-tree derived seeds and
    assembled in index order, so the model is bit-deterministic per seed."""
    master = np.random.default_rng(cfg.seed)
    tree_seeds = master.integers(0, 2 ** 63 - 1, size=cfg.n_estimators)
    tree_cfg = TreeConfig(criterion=cfg.criterion, max_depth=cfg.max_depth,
                          min_samples_split=cfg.min_samples_split)
    n = d.x.shape[0]
    trees = []
    for s in tree_seeds:
        rng = np.random.default_rng(int(s))
        idx = rng.integers(0, n, size=n) if cfg.bootstrap else None
        trees.append(train_tree(d, tree_cfg, rng=rng, max_features=cfg.max_features,
                                sample_indices=idx))
    return ForestModel(trees, d.x.shape[1], d.n_classes, cfg)


def forest_distributions(model: ForestModel, rows: np.ndarray) -> np.ndarray:
    rows = np.asarray(rows, dtype=np.float64)
    acc = np.zeros((rows.shape[0], model.n_classes))
    for tree in model.trees:
        acc += tree_distributions(tree, rows)
    return acc / len(model.trees)


def feature_importances(model: ForestModel) -> np.ndarray:
    """Mean over trees of impurity decrease per feature, weighted by the
    fraction of samples reaching each split node."""
    totals = np.zeros(model.n_features)
    for tree in model.trees:
        n_root = tree.root.counts.sum()
        if n_root == 0:
            continue

        def walk(node, acc):
            if node.is_leaf:
                return
            n_node = node.counts.sum()
            n_l = node.left.counts.sum()
            n_r = node.right.counts.sum()
            drop = node.impurity
            if n_l:
                drop -= n_l / n_node * node.left.impurity
            if n_r:
                drop -= n_r / n_node * node.right.impurity
            acc[node.feature] += (n_node / n_root) * drop
            walk(node.left, acc)
            walk(node.right, acc)

        per_tree = np.zeros(model.n_features)
        walk(tree.root, per_tree)
        totals += per_tree
    return totals / len(model.trees)
