"""Model serialization: one JSON document per fitted estimator.

Envelope: {"format_version": 1, "kind": <tag>, "standardizer": {...}|null,
"params": {"hyper": {...}, "state": {...}, "n_features": d}}. Ensemble
members nest the same envelope recursively, so a loaded model predicts
identically to the one saved.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from factvote.errors import IncompatibleModel, ParseError
from factvote.learn.bayes import GaussianNB
from factvote.learn.ensemble import BaggingClassifier, VotingClassifier
from factvote.learn.forest import RandomForestClassifier
from factvote.learn.linear import LinearSVM, LogisticRegression, SGDClassifier
from factvote.learn.neighbors import KNeighborsClassifier
from factvote.learn.preprocessing import Standardizer
from factvote.learn.tree import DecisionTreeClassifier, node_from_dict, node_to_dict
from factvote.learn.validation import check_is_fitted

FORMAT_VERSION = 1

ESTIMATOR_CLASSES = {
    cls.kind: cls
    for cls in (
        LogisticRegression,
        LinearSVM,
        SGDClassifier,
        DecisionTreeClassifier,
        RandomForestClassifier,
        KNeighborsClassifier,
        GaussianNB,
        VotingClassifier,
        BaggingClassifier,
    )
}

_LINEAR = (LogisticRegression, LinearSVM, SGDClassifier)


def _hyper(model) -> dict:
    # constructor params; estimator-valued ones are replaced by markers and
    # reconstructed from the state payload on load
    out = {}
    for name, value in model.get_params(deep=False).items():
        if hasattr(value, "fit") and hasattr(value, "get_params"):
            out[name] = {"__estimator__": _unfitted_to_dict(value)}
        elif isinstance(value, (list, tuple)) and value and all(
            hasattr(v, "fit") and hasattr(v, "get_params") for v in value
        ):
            out[name] = {"__estimators__": [_unfitted_to_dict(v) for v in value]}
        else:
            out[name] = value
    return out


def _unfitted_to_dict(model) -> dict:
    return {"kind": model.kind, "hyper": _hyper(model)}


def _unfitted_from_dict(payload: dict):
    cls = ESTIMATOR_CLASSES.get(payload.get("kind"))
    if cls is None:
        raise ParseError(f"unknown model kind {payload.get('kind')!r}")
    return cls(**_decode_hyper(payload.get("hyper", {})))


def _decode_hyper(hyper: dict) -> dict:
    out = {}
    for name, value in hyper.items():
        if isinstance(value, dict) and "__estimator__" in value:
            out[name] = _unfitted_from_dict(value["__estimator__"])
        elif isinstance(value, dict) and "__estimators__" in value:
            out[name] = [_unfitted_from_dict(v) for v in value["__estimators__"]]
        else:
            out[name] = value
    return out


def _state_of(model) -> dict:
    if isinstance(model, _LINEAR):
        return {"weights": model.weights_.tolist(), "bias": float(model.bias_)}
    if isinstance(model, DecisionTreeClassifier):
        return {"root": node_to_dict(model.root_)}
    if isinstance(model, RandomForestClassifier):
        return {"trees": [node_to_dict(t.root_) for t in model.trees_]}
    if isinstance(model, KNeighborsClassifier):
        return {"X": model.X_.tolist(), "y": model.y_.tolist()}
    if isinstance(model, GaussianNB):
        return {
            "means": model.means_.tolist(),
            "vars": model.vars_.tolist(),
            "priors": model.priors_.tolist(),
        }
    if isinstance(model, VotingClassifier):
        return {"members": [model_to_dict(m) for m in model.members]}
    if isinstance(model, BaggingClassifier):
        return {"members": [model_to_dict(m) for m in model.members_]}
    raise ParseError(f"cannot serialize model of type {type(model).__name__}")


def model_to_dict(model) -> dict:
    check_is_fitted(model)
    standardizer = getattr(model, "standardizer_", None)
    return {
        "format_version": FORMAT_VERSION,
        "kind": model.kind,
        "standardizer": standardizer.to_payload() if standardizer is not None else None,
        "params": {
            "hyper": _hyper(model),
            "state": _state_of(model),
            "n_features": int(model.n_features_in_),
        },
    }


def model_from_dict(payload: dict):
    if not isinstance(payload, dict):
        raise ParseError("model payload is not an object")
    version = payload.get("format_version")
    if version is None or "kind" not in payload or "params" not in payload:
        raise ParseError("model payload is missing required fields")
    if version != FORMAT_VERSION:
        raise IncompatibleModel(f"unsupported format_version {version!r}")
    cls = ESTIMATOR_CLASSES.get(payload["kind"])
    if cls is None:
        raise ParseError(f"unknown model kind {payload['kind']!r}")
    try:
        params = payload["params"]
        model = cls(**_decode_hyper(params.get("hyper", {})))
        state = params["state"]
        n_features = int(params["n_features"])
        if payload.get("standardizer") is not None:
            model.standardizer_ = Standardizer.from_payload(payload["standardizer"])

        if isinstance(model, _LINEAR):
            model.weights_ = np.asarray(state["weights"], dtype=np.float64)
            model.bias_ = float(state["bias"])
        elif isinstance(model, DecisionTreeClassifier):
            model.root_ = node_from_dict(state["root"])
        elif isinstance(model, RandomForestClassifier):
            trees = []
            for tree_payload in state["trees"]:
                tree = DecisionTreeClassifier(
                    max_depth=model.max_depth,
                    min_samples_split=model.min_samples_split,
                )
                tree.root_ = node_from_dict(tree_payload)
                tree.n_features_in_ = n_features
                trees.append(tree)
            model.trees_ = trees
        elif isinstance(model, KNeighborsClassifier):
            model.X_ = np.asarray(state["X"], dtype=np.float64)
            model.y_ = np.asarray(state["y"], dtype=np.int64)
        elif isinstance(model, GaussianNB):
            model.means_ = np.asarray(state["means"], dtype=np.float64)
            model.vars_ = np.asarray(state["vars"], dtype=np.float64)
            model.priors_ = np.asarray(state["priors"], dtype=np.float64)
        elif isinstance(model, VotingClassifier):
            model.members = [model_from_dict(m) for m in state["members"]]
        elif isinstance(model, BaggingClassifier):
            model.members_ = [model_from_dict(m) for m in state["members"]]
        model.n_features_in_ = n_features
    except IncompatibleModel:
        raise
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"corrupt model payload: {exc}") from None
    return model


def save_model(model, sink: str | Path) -> None:
    payload = model_to_dict(model)
    Path(sink).write_text(
        json.dumps(payload, separators=(",", ":"), sort_keys=True) + "\n",
        encoding="utf-8",
    )


def load_model(source: str | Path):
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read model file: {exc}") from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"model file is not valid JSON: {exc}") from None
    return model_from_dict(payload)
