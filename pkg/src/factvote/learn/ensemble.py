"""Voting and bagging ensembles over the other learners."""

from __future__ import annotations

import numpy as np

from factvote.errors import BadConfig, NoMembers
from factvote.learn.base import BaseEstimator, clone
from factvote.learn.validation import (
    check_array,
    check_dimension,
    check_is_fitted,
    check_X_y,
)


def _member_proba(member, X: np.ndarray) -> np.ndarray:
    # members without probability estimates contribute their hard label
    if getattr(member, "supports_proba", False):
        return np.asarray(member.predict_proba(X), dtype=np.float64)
    return member.predict(X).astype(np.float64)


class VotingClassifier(BaseEstimator):
    """Combines already-configured member estimators trained on the same
    data. Hard mode takes the majority label with ties falling to label 0;
    soft mode averages member probabilities and thresholds at 0.5."""

    kind = "voting"

    def __init__(self, members: list, mode: str = "hard"):
        self.members = members
        self.mode = mode

    @property
    def supports_proba(self) -> bool:  # type: ignore[override]
        return self.mode == "soft"

    def fit(self, X, y) -> "VotingClassifier":
        if not self.members:
            raise NoMembers("voting ensemble has no members")
        if self.mode not in ("hard", "soft"):
            raise ValueError(f"mode must be 'hard' or 'soft', got {self.mode!r}")
        X, y = check_X_y(X, y)
        for member in self.members:
            member.fit(X, y)
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self)
        X = check_array(X)
        check_dimension(self, X)
        if self.mode == "soft":
            return (self.predict_proba(X) >= 0.5).astype(np.int64)
        votes = np.stack([m.predict(X) for m in self.members]).sum(axis=0)
        return (2 * votes > len(self.members)).astype(np.int64)

    def predict_proba(self, X) -> np.ndarray:
        check_is_fitted(self)
        if self.mode != "soft":
            raise AttributeError("predict_proba needs mode='soft'")
        X = check_array(X)
        check_dimension(self, X)
        stacked = np.stack([_member_proba(m, X) for m in self.members])
        return stacked.mean(axis=0)


class BaggingClassifier(BaseEstimator):
    """Clones of one base estimator, each trained on a bootstrap resample
    drawn from a (seed, member index) generator; majority vote with ties
    falling to label 0."""

    kind = "bagging"
    supports_proba = False

    def __init__(
        self,
        base: BaseEstimator,
        n_estimators: int = 10,
        bootstrap: bool = True,
        seed: int = 0,
    ):
        self.base = base
        self.n_estimators = n_estimators
        self.bootstrap = bootstrap
        self.seed = seed

    def fit(self, X, y) -> "BaggingClassifier":
        if self.n_estimators < 1:
            raise BadConfig(f"n_estimators must be >= 1, got {self.n_estimators}")
        X, y = check_X_y(X, y)
        n = X.shape[0]
        members = []
        for i in range(self.n_estimators):
            member = clone(self.base)
            if self.bootstrap:
                rng = np.random.default_rng([self.seed, i])
                idx = rng.integers(0, n, size=n)
                member.fit(X[idx], y[idx])
            else:
                member.fit(X, y)
            members.append(member)
        self.members_ = members
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self)
        X = check_array(X)
        check_dimension(self, X)
        votes = np.stack([m.predict(X) for m in self.members_]).sum(axis=0)
        return (2 * votes > len(self.members_)).astype(np.int64)
