"""Linear classifiers: batch-gradient logistic regression, Pegasos SVM,
and a per-instance SGD learner with selectable loss."""

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


def _require_two_classes(y: np.ndarray) -> None:
    if np.unique(y).size < 2:
        raise DegenerateLabels("training data contains a single class")


def _sigmoid(z: np.ndarray) -> np.ndarray:
    # piecewise form avoids overflow for large |z|
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def logistic_loss(w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray, l2: float) -> float:
    """Mean cross-entropy over y in {0,1} plus (l2/2)||w||^2; bias unpenalized."""
    z = X @ w + b
    # log(1 + exp(-|z|)) + max(z,0) - z*y is the stable cross-entropy form
    per = np.maximum(z, 0.0) - z * y + np.log1p(np.exp(-np.abs(z)))
    return float(per.mean() + 0.5 * l2 * float(w @ w))


def logistic_gradient(
    w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray, l2: float
) -> tuple[np.ndarray, float]:
    n = X.shape[0]
    residual = _sigmoid(X @ w + b) - y
    grad_w = X.T @ residual / n + l2 * w
    grad_b = float(residual.mean())
    return grad_w, grad_b


def hinge_loss(w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray, l2: float) -> float:
    """Mean hinge over y in {0,1} (mapped to +-1) plus (l2/2)||w||^2."""
    s = 2.0 * y - 1.0
    margins = 1.0 - s * (X @ w + b)
    return float(np.maximum(margins, 0.0).mean() + 0.5 * l2 * float(w @ w))


def hinge_subgradient(
    w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray, l2: float
) -> tuple[np.ndarray, float]:
    n = X.shape[0]
    s = 2.0 * y - 1.0
    active = (1.0 - s * (X @ w + b)) > 0.0
    grad_w = -(X[active].T @ s[active]) / n + l2 * w
    grad_b = -float(s[active].sum()) / n
    return grad_w, grad_b


class LogisticRegression(BaseEstimator):
    """Full-batch gradient descent on the L2-regularized logistic loss.

    Deterministic: weights start at zero, so the seed only exists for
    interface symmetry with the stochastic learners.
    """

    kind = "logistic"
    supports_proba = True

    def __init__(self, lr: float = 0.1, epochs: int = 500, l2: float = 1e-3, seed: int = 0):
        self.lr = lr
        self.epochs = epochs
        self.l2 = l2
        self.seed = seed

    def fit(self, X, y) -> "LogisticRegression":
        X, y = check_X_y(X, y)
        _require_two_classes(y)
        self.standardizer_ = Standardizer().fit(X)
        Z = self.standardizer_.transform(X)
        yf = y.astype(np.float64)
        w = np.zeros(Z.shape[1])
        b = 0.0
        for _ in range(self.epochs):
            grad_w, grad_b = logistic_gradient(w, b, Z, yf, self.l2)
            w -= self.lr * grad_w
            b -= self.lr * grad_b
        self.weights_ = w
        self.bias_ = b
        self.n_features_in_ = X.shape[1]
        return self

    def decision_function(self, X) -> np.ndarray:
        check_is_fitted(self)
        X = check_array(X)
        check_dimension(self, X)
        return self.standardizer_.transform(X) @ self.weights_ + self.bias_

    def predict_proba(self, X) -> np.ndarray:
        return _sigmoid(self.decision_function(X))

    def predict(self, X) -> np.ndarray:
        return (self.predict_proba(X) >= 0.5).astype(np.int64)


class LinearSVM(BaseEstimator):
    """Pegasos: stochastic subgradient descent on the hinge objective with
    step size 1/(l2 * t); the bias term stays unregularized."""

    kind = "linear_svm"
    supports_proba = False

    def __init__(self, l2: float = 1e-3, epochs: int = 20, seed: int = 0):
        self.l2 = l2
        self.epochs = epochs
        self.seed = seed

    def fit(self, X, y) -> "LinearSVM":
        X, y = check_X_y(X, y)
        _require_two_classes(y)
        self.standardizer_ = Standardizer().fit(X)
        Z = self.standardizer_.transform(X)
        s = 2.0 * y.astype(np.float64) - 1.0
        n, d = Z.shape
        rng = np.random.default_rng(self.seed)
        w = np.zeros(d)
        b = 0.0
        t = 0
        for _ in range(self.epochs):
            for i in rng.permutation(n):
                t += 1
                eta = 1.0 / (self.l2 * t)
                margin = s[i] * (Z[i] @ w + b)
                w *= 1.0 - eta * self.l2
                if margin < 1.0:
                    w += eta * s[i] * Z[i]
                    b += eta * s[i]
        self.weights_ = w
        self.bias_ = b
        self.n_features_in_ = X.shape[1]
        return self

    def decision_function(self, X) -> np.ndarray:
        check_is_fitted(self)
        X = check_array(X)
        check_dimension(self, X)
        return self.standardizer_.transform(X) @ self.weights_ + self.bias_

    def predict(self, X) -> np.ndarray:
        return (self.decision_function(X) >= 0.0).astype(np.int64)


class SGDClassifier(BaseEstimator):
    """One-instance-at-a-time gradient steps on hinge or log loss with a
    constant learning rate and a fresh seeded shuffle each epoch."""

    kind = "sgd"

    def __init__(
        self,
        loss: str = "hinge",
        lr: float = 0.05,
        epochs: int = 100,
        l2: float = 1e-3,
        seed: int = 0,
    ):
        self.loss = loss
        self.lr = lr
        self.epochs = epochs
        self.l2 = l2
        self.seed = seed

    @property
    def supports_proba(self) -> bool:  # type: ignore[override]
        return self.loss == "log"

    def fit(self, X, y) -> "SGDClassifier":
        if self.loss not in ("hinge", "log"):
            raise ValueError(f"loss must be 'hinge' or 'log', got {self.loss!r}")
        X, y = check_X_y(X, y)
        _require_two_classes(y)
        self.standardizer_ = Standardizer().fit(X)
        Z = self.standardizer_.transform(X)
        yf = y.astype(np.float64)
        n, d = Z.shape
        rng = np.random.default_rng(self.seed)
        w = np.zeros(d)
        b = 0.0
        for _ in range(self.epochs):
            for i in rng.permutation(n):
                xi = Z[i]
                if self.loss == "log":
                    residual = float(_sigmoid(np.array([xi @ w + b]))[0] - yf[i])
                    grad_w = residual * xi + self.l2 * w
                    grad_b = residual
                else:
                    si = 2.0 * yf[i] - 1.0
                    if si * (xi @ w + b) < 1.0:
                        grad_w = -si * xi + self.l2 * w
                        grad_b = -si
                    else:
                        grad_w = self.l2 * w
                        grad_b = 0.0
                w -= self.lr * grad_w
                b -= self.lr * grad_b
        self.weights_ = w
        self.bias_ = b
        self.n_features_in_ = X.shape[1]
        return self

    def decision_function(self, X) -> np.ndarray:
        check_is_fitted(self)
        X = check_array(X)
        check_dimension(self, X)
        return self.standardizer_.transform(X) @ self.weights_ + self.bias_

    def predict_proba(self, X) -> np.ndarray:
        if self.loss != "log":
            raise AttributeError("predict_proba needs loss='log'")
        return _sigmoid(self.decision_function(X))

    def predict(self, X) -> np.ndarray:
        if self.loss == "log":
            return (self.predict_proba(X) >= 0.5).astype(np.int64)
        return (self.decision_function(X) >= 0.0).astype(np.int64)
