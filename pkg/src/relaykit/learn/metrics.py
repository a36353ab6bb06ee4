"""Classification metrics."""

from __future__ import annotations

import numpy as np


def confusion_matrix(y_true, y_pred, n_classes: int) -> np.ndarray:
    """Rows are true classes, columns predictions."""
    m = np.zeros((n_classes, n_classes), dtype=np.int64)
    for t, p in zip(np.asarray(y_true), np.asarray(y_pred)):
        m[int(t), int(p)] += 1
    return m


def balanced_accuracy(confusion) -> float:
    """Mean of per-class recalls; every true class must have at least one row."""
    m = np.asarray(confusion, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("confusion matrix must be square")
    row_sums = m.sum(axis=1)
    if np.any(row_sums == 0):
        raise ValueError("every true class needs at least one sample")
    return float(np.mean(np.diag(m) / row_sums))


def per_class_recall(confusion) -> np.ndarray:
    m = np.asarray(confusion, dtype=np.float64)
    return np.diag(m) / m.sum(axis=1)
