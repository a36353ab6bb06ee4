"""Unified prediction over every trained model type, plus the trainer factory
used by grid search and the cascade builder."""

from __future__ import annotations

import numpy as np

from .boosting import BoostConfig, BoostedModel, boosted_scores, train_boosted
from .forest import ForestConfig, ForestModel, forest_distributions, train_forest
from .simple import (KnnConfig, KnnModel, NbModel, knn_distributions, nb_distributions,
                     train_knn, train_nb)
from .trees import TreeConfig, TreeModel, train_tree, tree_distributions


def predict_scores(model, rows) -> np.ndarray:
    """Per-class scores; each row is non-negative and sums to one."""
    rows = np.asarray(rows, dtype=np.float64)
    if rows.ndim != 2:
        raise ValueError("rows must be a 2-D matrix")
    width = getattr(model, "n_features", None)
    if width is None and isinstance(model, (KnnModel,)):
        width = model.x.shape[1]
    if width is None and isinstance(model, NbModel):
        width = model.means.shape[1]
    if width is not None and rows.shape[1] != width:
        raise ValueError(f"row width {rows.shape[1]} does not match model width {width}")
    if isinstance(model, TreeModel):
        return tree_distributions(model, rows)
    if isinstance(model, ForestModel):
        return forest_distributions(model, rows)
    if isinstance(model, BoostedModel):
        return boosted_scores(model, rows)
    if isinstance(model, KnnModel):
        return knn_distributions(model, rows)
    if isinstance(model, NbModel):
        return nb_distributions(model, rows)
    raise TypeError(f"unknown model type {type(model).__name__}")


def predict(model, rows):
    """(labels, scores); label ties resolve to the lowest class index."""
    scores = predict_scores(model, rows)
    return np.argmax(scores, axis=1), scores


_FAMILIES = ("tree", "forest", "boosted", "knn", "nb")


def make_trainer(family: str, params: dict):
    """(train_fn, predict_fn) for one hyperparameter point of a model family."""
    if family == "tree":
        cfg = TreeConfig(**params)
        return (lambda d: train_tree(d, cfg),
                lambda m, rows: predict(m, rows)[0])
    if family == "forest":
        cfg = ForestConfig(**params)
        return (lambda d: train_forest(d, cfg),
                lambda m, rows: predict(m, rows)[0])
    if family == "boosted":
        cfg = BoostConfig(**params)
        return (lambda d: train_boosted(d, cfg),
                lambda m, rows: predict(m, rows)[0])
    if family == "knn":
        cfg = KnnConfig(**params)
        return (lambda d: train_knn(d, cfg),
                lambda m, rows: predict(m, rows)[0])
    if family == "nb":
        if params:
            raise ValueError("naive Bayes takes no hyperparameters")
        return (lambda d: train_nb(d),
                lambda m, rows: predict(m, rows)[0])
    raise ValueError(f"family must be one of {_FAMILIES}")
