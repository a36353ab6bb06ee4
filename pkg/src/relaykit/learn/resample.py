"""Class rebalancing: synthetic minority oversampling and NearMiss-1
majority undersampling."""

from __future__ import annotations

import numpy as np

from .trees import Dataset


def smote(d: Dataset, target_class: int, n_new: int, k: int = 5,
          seed: int = 0) -> Dataset:
    """Each synthetic row lies on the segment between a minority sample and one
    of its k nearest same-class neighbors."""
    if n_new < 0:
        raise ValueError("n_new must be non-negative")
    idx = np.where(d.y == target_class)[0]
    if len(idx) <= k:
        raise ValueError(f"minority count {len(idx)} must exceed k={k}")
    if n_new == 0:
        return d
    rng = np.random.default_rng(seed)
    pts = d.x[idx]
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt(np.sum(diff * diff, axis=-1))
    np.fill_diagonal(dist, np.inf)
    neighbors = np.argsort(dist, axis=1, kind="stable")[:, :k]
    rows = []
    for _ in range(n_new):
        i = int(rng.integers(0, len(pts)))
        j = int(neighbors[i][int(rng.integers(0, k))])
        u = rng.uniform(0.0, 1.0)
        rows.append(pts[i] + u * (pts[j] - pts[i]))
    x = np.vstack([d.x, np.asarray(rows)])
    y = np.concatenate([d.y, np.full(n_new, target_class, dtype=np.int64)])
    return Dataset(x, y, d.class_names)


def nearmiss(d: Dataset, majority_class: int, n_keep: int, seed: int = 0) -> Dataset:
    """NearMiss-1: keep the majority samples with the smallest mean distance to
    their three nearest minority samples."""
    maj = np.where(d.y == majority_class)[0]
    mino = np.where(d.y != majority_class)[0]
    if n_keep > len(maj):
        raise ValueError(f"n_keep={n_keep} exceeds majority count {len(maj)}")
    if len(mino) == 0:
        raise ValueError("no minority samples to measure against")
    if n_keep == len(maj):
        return d
    diff = d.x[maj][:, None, :] - d.x[mino][None, :, :]
    dist = np.sqrt(np.sum(diff * diff, axis=-1))
    m = min(3, dist.shape[1])
    nearest = np.sort(dist, axis=1)[:, :m]
    score = nearest.mean(axis=1)
    keep_local = np.argsort(score, kind="stable")[:n_keep]
    keep = np.sort(np.concatenate([maj[keep_local], mino]))
    return Dataset(d.x[keep], d.y[keep], d.class_names)
