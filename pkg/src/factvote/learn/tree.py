"""CART decision tree with Gini-impurity midpoint splits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from factvote.learn.base import BaseEstimator
from factvote.learn.validation import (
    check_array,
    check_dimension,
    check_is_fitted,
    check_X_y,
)


@dataclass
class TreeNode:
    prediction: int
    feature: int = -1
    threshold: float = 0.0
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None


def node_to_dict(node: TreeNode) -> dict:
    if node.is_leaf:
        return {"prediction": int(node.prediction)}
    return {
        "prediction": int(node.prediction),
        "feature": int(node.feature),
        "threshold": float(node.threshold),
        "left": node_to_dict(node.left),
        "right": node_to_dict(node.right),
    }


def node_from_dict(payload: dict) -> TreeNode:
    if "feature" not in payload:
        return TreeNode(prediction=int(payload["prediction"]))
    return TreeNode(
        prediction=int(payload["prediction"]),
        feature=int(payload["feature"]),
        threshold=float(payload["threshold"]),
        left=node_from_dict(payload["left"]),
        right=node_from_dict(payload["right"]),
    )


def _majority(y: np.ndarray) -> int:
    # tie goes to label 0
    return 1 if 2 * int(y.sum()) > y.size else 0


def _best_split(
    X: np.ndarray, y: np.ndarray, feature_indices: np.ndarray
) -> tuple[int, float] | None:
    """Scan midpoints of consecutive distinct values per feature; return the
    (feature, threshold) with minimal weighted child Gini, first winner on
    exact ties (lowest feature index, then lowest threshold)."""
    n = y.size
    best_impurity = np.inf
    best: tuple[int, float] | None = None
    for f in feature_indices:
        order = np.argsort(X[:, f], kind="stable")
        xs = X[order, f]
        ys = y[order]
        cut = np.nonzero(xs[1:] != xs[:-1])[0]
        if cut.size == 0:
            continue
        ones = np.cumsum(ys)
        total_ones = ones[-1]
        n_left = cut + 1.0
        ones_left = ones[cut].astype(np.float64)
        n_right = n - n_left
        ones_right = total_ones - ones_left
        p_left = ones_left / n_left
        p_right = ones_right / n_right
        gini_left = 2.0 * p_left * (1.0 - p_left)
        gini_right = 2.0 * p_right * (1.0 - p_right)
        weighted = (n_left * gini_left + n_right * gini_right) / n
        k = int(np.argmin(weighted))
        impurity = float(weighted[k])
        if impurity < best_impurity:
            best_impurity = impurity
            threshold = float((xs[cut[k]] + xs[cut[k] + 1]) / 2.0)
            best = (int(f), threshold)
    return best


class DecisionTreeClassifier(BaseEstimator):
    """Binary CART. Zero-gain splits are allowed (children are always both
    non-empty, so building still terminates), which lets deeper levels
    untangle XOR-like data a greedy gain test would give up on.

    Thresholds are stored in raw feature units: per-column affine rescaling
    never changes which midpoint partition wins, so the tree skips the
    standardization the other learners apply.
    """

    kind = "cart"
    supports_proba = False

    def __init__(
        self,
        max_depth: int | None = 10,
        min_samples_split: int = 2,
        max_features: int | None = None,
        seed: int = 0,
    ):
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.max_features = max_features
        self.seed = seed

    def fit(self, X, y, rng: np.random.Generator | None = None) -> "DecisionTreeClassifier":
        """``rng`` lets ensembles share one generator stream per member;
        by default a fresh one is derived from the seed."""
        X, y = check_X_y(X, y)
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError("max_depth must be >= 0 or None")
        if self.min_samples_split < 2:
            raise ValueError("min_samples_split must be >= 2")
        if rng is None:
            rng = np.random.default_rng(self.seed)
        d = X.shape[1]
        if self.max_features is not None and not 1 <= self.max_features <= d:
            raise ValueError(f"max_features must lie in [1, {d}]")
        self.root_ = self._build(X, y, depth=0, rng=rng)
        self.n_features_in_ = d
        return self

    def _build(self, X: np.ndarray, y: np.ndarray, depth: int, rng: np.random.Generator) -> TreeNode:
        prediction = _majority(y)
        pure = y.min() == y.max()
        depth_capped = self.max_depth is not None and depth >= self.max_depth
        if pure or depth_capped or y.size < self.min_samples_split:
            return TreeNode(prediction=prediction)

        d = X.shape[1]
        if self.max_features is None or self.max_features >= d:
            candidates = np.arange(d)
        else:
            candidates = np.sort(rng.choice(d, size=self.max_features, replace=False))
        split = _best_split(X, y, candidates)
        if split is None:
            return TreeNode(prediction=prediction)
        feature, threshold = split
        mask = X[:, feature] <= threshold
        return TreeNode(
            prediction=prediction,
            feature=feature,
            threshold=threshold,
            left=self._build(X[mask], y[mask], depth + 1, rng),
            right=self._build(X[~mask], y[~mask], depth + 1, rng),
        )

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self)
        X = check_array(X)
        check_dimension(self, X)
        out = np.empty(X.shape[0], dtype=np.int64)
        for i, row in enumerate(X):
            node = self.root_
            while not node.is_leaf:
                node = node.left if row[node.feature] <= node.threshold else node.right
            out[i] = node.prediction
        return out
