"""k-nearest-neighbour classification over standardized instances."""

from __future__ import annotations

import numpy as np

from factvote.errors import KTooLarge
from factvote.learn.base import BaseEstimator
from factvote.learn.preprocessing import Standardizer
from factvote.learn.validation import (
    check_array,
    check_dimension,
    check_is_fitted,
    check_X_y,
)


class KNeighborsClassifier(BaseEstimator):
    """Majority of the k nearest stored points by Euclidean distance.

    Ties are fixed rules, not chance: equal distances prefer the earlier
    stored index, and an even vote falls back to label 0.
    """

    kind = "knn"
    supports_proba = True

    def __init__(self, k: int = 5):
        self.k = k

    def fit(self, X, y) -> "KNeighborsClassifier":
        X, y = check_X_y(X, y)
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.k > X.shape[0]:
            raise KTooLarge(f"k={self.k} exceeds {X.shape[0]} training instances")
        self.standardizer_ = Standardizer().fit(X)
        self.X_ = self.standardizer_.transform(X)
        self.y_ = y
        self.n_features_in_ = X.shape[1]
        return self

    def _neighbor_labels(self, X: np.ndarray) -> np.ndarray:
        check_is_fitted(self)
        X = check_array(X)
        check_dimension(self, X)
        Z = self.standardizer_.transform(X)
        out = np.empty((Z.shape[0], self.k), dtype=np.int64)
        for i, row in enumerate(Z):
            dist = np.sqrt(((self.X_ - row) ** 2).sum(axis=1))
            nearest = np.argsort(dist, kind="stable")[: self.k]
            out[i] = self.y_[nearest]
        return out

    def predict(self, X) -> np.ndarray:
        labels = self._neighbor_labels(X)
        ones = labels.sum(axis=1)
        return (2 * ones > self.k).astype(np.int64)

    def predict_proba(self, X) -> np.ndarray:
        return self._neighbor_labels(X).sum(axis=1) / self.k
