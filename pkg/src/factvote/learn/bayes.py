"""Gaussian naive Bayes with a variance floor."""

from __future__ import annotations

import numpy as np

from factvote.errors import DegenerateLabels
from factvote.learn.base import BaseEstimator
from factvote.learn.preprocessing import Standardizer
from factvote.learn.validation import (
    check_array,
    check_dimension,
    check_is_fitted,
    check_X_y,
)


class GaussianNB(BaseEstimator):
    kind = "gnb"
    supports_proba = True

    def __init__(self, var_floor: float = 1e-9):
        self.var_floor = var_floor

    def fit(self, X, y) -> "GaussianNB":
        X, y = check_X_y(X, y)
        if np.unique(y).size < 2:
            raise DegenerateLabels("training data contains a single class")
        self.standardizer_ = Standardizer().fit(X)
        Z = self.standardizer_.transform(X)
        means, variances, priors = [], [], []
        for label in (0, 1):
            block = Z[y == label]
            means.append(block.mean(axis=0))
            variances.append(np.maximum(block.var(axis=0), self.var_floor))
            priors.append(block.shape[0] / Z.shape[0])
        self.means_ = np.stack(means)
        self.vars_ = np.stack(variances)
        self.priors_ = np.asarray(priors)
        self.n_features_in_ = X.shape[1]
        return self

    def _log_posteriors(self, X: np.ndarray) -> np.ndarray:
        check_is_fitted(self)
        X = check_array(X)
        check_dimension(self, X)
        Z = self.standardizer_.transform(X)
        out = np.empty((Z.shape[0], 2))
        for label in (0, 1):
            mu = self.means_[label]
            var = self.vars_[label]
            ll = -0.5 * (np.log(2.0 * np.pi * var) + (Z - mu) ** 2 / var).sum(axis=1)
            out[:, label] = ll + np.log(self.priors_[label])
        return out

    def predict_proba(self, X) -> np.ndarray:
        lp = self._log_posteriors(X)
        shifted = lp - lp.max(axis=1, keepdims=True)
        expd = np.exp(shifted)
        return expd[:, 1] / expd.sum(axis=1)

    def predict(self, X) -> np.ndarray:
        lp = self._log_posteriors(X)
        # argmax with the exact-tie edge resolved toward label 0
        return (lp[:, 1] > lp[:, 0]).astype(np.int64)
