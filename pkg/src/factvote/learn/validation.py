"""Input checks shared by every estimator."""

from __future__ import annotations

import numpy as np

from factvote.errors import DimensionMismatch, NotFitted


def check_array(X, name: str = "X") -> np.ndarray:
    """Coerce to a finite 2-D float64 array."""
    arr = np.asarray(X, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError(f"{name} is empty: shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains NaN or infinite values")
    return arr


def check_labels(y, n_rows: int | None = None) -> np.ndarray:
    arr = np.asarray(y)
    if arr.ndim != 1:
        raise ValueError(f"y must be 1-D, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError("y is empty")
    values = set(np.unique(arr).tolist())
    if not values <= {0, 1}:
        raise ValueError(f"labels must be 0 or 1, got {sorted(values)}")
    if n_rows is not None and arr.shape[0] != n_rows:
        raise ValueError(f"X has {n_rows} rows but y has {arr.shape[0]} labels")
    return arr.astype(np.int64)


def check_X_y(X, y) -> tuple[np.ndarray, np.ndarray]:
    X = check_array(X)
    y = check_labels(y, n_rows=X.shape[0])
    return X, y


def check_is_fitted(estimator, attribute: str = "n_features_in_") -> None:
    if getattr(estimator, attribute, None) is None:
        raise NotFitted(f"{type(estimator).__name__} is not fitted yet; call fit first")


def check_dimension(estimator, X: np.ndarray) -> None:
    expected = estimator.n_features_in_
    if X.shape[1] != expected:
        raise DimensionMismatch(
            f"{type(estimator).__name__} was fitted with {expected} features, "
            f"got {X.shape[1]}"
        )
