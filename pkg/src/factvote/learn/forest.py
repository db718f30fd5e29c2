"""Random forest over the CART learner."""

from __future__ import annotations

import math

import numpy as np

from factvote.learn.base import BaseEstimator
from factvote.learn.tree import DecisionTreeClassifier
from factvote.learn.validation import (
    check_array,
    check_dimension,
    check_is_fitted,
    check_X_y,
)


class RandomForestClassifier(BaseEstimator):
    """Bootstrap-sampled trees with per-split feature subsets.

    Member i draws everything (its sample and its feature subsets) from a
    generator seeded with (seed, i), so retraining with the same seed is
    bit-for-bit reproducible and members never share randomness.
    """

    kind = "random_forest"
    supports_proba = True

    def __init__(
        self,
        n_estimators: int = 100,
        max_depth: int | None = None,
        min_samples_split: int = 2,
        max_features: int | str | None = "sqrt",
        bootstrap: bool = True,
        seed: int = 0,
    ):
        self.n_estimators = n_estimators
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.max_features = max_features
        self.bootstrap = bootstrap
        self.seed = seed

    def _resolve_max_features(self, d: int) -> int | None:
        if self.max_features is None:
            return None
        if self.max_features == "sqrt":
            return min(d, math.ceil(math.sqrt(d)))
        if isinstance(self.max_features, int):
            return min(d, self.max_features)
        raise ValueError(f"max_features must be None, 'sqrt', or an int, got {self.max_features!r}")

    def fit(self, X, y) -> "RandomForestClassifier":
        X, y = check_X_y(X, y)
        if self.n_estimators < 1:
            raise ValueError("n_estimators must be >= 1")
        n, d = X.shape
        mf = self._resolve_max_features(d)
        trees = []
        for i in range(self.n_estimators):
            rng = np.random.default_rng([self.seed, i])
            if self.bootstrap:
                idx = rng.integers(0, n, size=n)
                Xi, yi = X[idx], y[idx]
            else:
                Xi, yi = X, y
            tree = DecisionTreeClassifier(
                max_depth=self.max_depth,
                min_samples_split=self.min_samples_split,
                max_features=mf,
            )
            tree.fit(Xi, yi, rng=rng)
            trees.append(tree)
        self.trees_ = trees
        self.n_features_in_ = d
        return self

    def _votes(self, X: np.ndarray) -> np.ndarray:
        check_is_fitted(self)
        X = check_array(X)
        check_dimension(self, X)
        stacked = np.stack([tree.predict(X) for tree in self.trees_])
        return stacked.sum(axis=0)

    def predict(self, X) -> np.ndarray:
        votes = self._votes(X)
        # strict majority; an even split falls back to label 0
        return (2 * votes > len(self.trees_)).astype(np.int64)

    def predict_proba(self, X) -> np.ndarray:
        return self._votes(X) / len(self.trees_)
