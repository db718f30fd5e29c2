"""Seeded synthetic datasets shared by the learner and acceptance tests."""

from __future__ import annotations

import numpy as np


def separable_2d(n: int = 400, margin: float = 1.0, seed: int = 11):
    """Linearly separable 2-D points with a guaranteed margin around x+y=0."""
    rng = np.random.default_rng(seed)
    X = np.empty((n, 2))
    y = np.empty(n, dtype=np.int64)
    filled = 0
    while filled < n:
        batch = rng.uniform(-3.0, 3.0, size=(n, 2))
        raw = batch[:, 0] + batch[:, 1]
        keep = np.abs(raw) >= margin
        take = min(n - filled, int(keep.sum()))
        X[filled : filled + take] = batch[keep][:take]
        y[filled : filled + take] = (raw[keep][:take] > 0).astype(np.int64)
        filled += take
    return X, y


def xor_blobs(n: int = 1000, spread: float = 0.6, seed: int = 29):
    """Four gaussian clusters at (+-2, +-2); label is the XOR of the signs."""
    rng = np.random.default_rng(seed)
    centers = np.array([[2, 2], [-2, -2], [2, -2], [-2, 2]], dtype=np.float64)
    labels = np.array([0, 0, 1, 1], dtype=np.int64)
    which = rng.integers(0, 4, size=n)
    X = centers[which] + rng.normal(0.0, spread, size=(n, 2))
    return X, labels[which]


def split(X, y, train_fraction: float = 0.7, seed: int = 5):
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(X))
    cut = int(len(X) * train_fraction)
    tr, te = order[:cut], order[cut:]
    return X[tr], y[tr], X[te], y[te]


def feature_like_matrix(rng: np.random.Generator, n: int, d: int = 10):
    """Random vectors shaped like the claim feature columns (counts, means)."""
    X = np.zeros((n, d))
    half = d // 2
    X[:, :half] = rng.integers(0, 8, size=(n, half))
    X[:, half:] = rng.uniform(-1.0, 1.0, size=(n, d - half))
    return X
