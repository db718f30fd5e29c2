"""Column-wise standardization fitted on training data."""

from __future__ import annotations

import numpy as np

from factvote.errors import NotFitted

SIGMA_FLOOR = 1e-9


class Standardizer:
    """Zero-mean unit-variance transform; constant columns hit a small
    sigma floor instead of dividing by zero."""

    def __init__(self):
        self.mean_: np.ndarray | None = None
        self.std_: np.ndarray | None = None

    def fit(self, X: np.ndarray) -> "Standardizer":
        X = np.asarray(X, dtype=np.float64)
        self.mean_ = X.mean(axis=0)
        self.std_ = np.maximum(X.std(axis=0), SIGMA_FLOOR)
        return self

    def transform(self, X: np.ndarray) -> np.ndarray:
        if self.mean_ is None or self.std_ is None:
            raise NotFitted("Standardizer is not fitted yet; call fit first")
        return (np.asarray(X, dtype=np.float64) - self.mean_) / self.std_

    def fit_transform(self, X: np.ndarray) -> np.ndarray:
        return self.fit(X).transform(X)

    def to_payload(self) -> dict:
        if self.mean_ is None or self.std_ is None:
            raise NotFitted("Standardizer is not fitted yet; call fit first")
        return {"mean": self.mean_.tolist(), "std": self.std_.tolist()}

    @classmethod
    def from_payload(cls, payload: dict) -> "Standardizer":
        out = cls()
        out.mean_ = np.asarray(payload["mean"], dtype=np.float64)
        out.std_ = np.asarray(payload["std"], dtype=np.float64)
        return out
