"""Estimator plumbing: parameter introspection and cloning."""

from __future__ import annotations

import copy
import inspect


class BaseEstimator:
    """Constructor arguments are hyperparameters; fit() sets learned state
    on trailing-underscore attributes and returns self."""

    supports_proba = False

    @classmethod
    def _get_param_names(cls) -> list[str]:
        sig = inspect.signature(cls.__init__)
        return [
            name
            for name, p in sig.parameters.items()
            if name != "self" and p.kind != inspect.Parameter.VAR_KEYWORD
        ]

    def get_params(self, deep: bool = True) -> dict:
        out = {}
        for name in self._get_param_names():
            value = getattr(self, name)
            if deep and hasattr(value, "get_params"):
                for sub, sub_value in value.get_params(deep=True).items():
                    out[f"{name}__{sub}"] = sub_value
            out[name] = value
        return out

    def set_params(self, **params) -> "BaseEstimator":
        valid = set(self._get_param_names())
        nested: dict[str, dict] = {}
        for key, value in params.items():
            if "__" in key:
                head, _, tail = key.partition("__")
                if head not in valid:
                    raise ValueError(f"invalid parameter {head!r} for {type(self).__name__}")
                nested.setdefault(head, {})[tail] = value
            else:
                if key not in valid:
                    raise ValueError(f"invalid parameter {key!r} for {type(self).__name__}")
                setattr(self, key, value)
        for head, sub_params in nested.items():
            getattr(self, head).set_params(**sub_params)
        return self

    def __repr__(self) -> str:
        params = ", ".join(f"{k}={v!r}" for k, v in sorted(self.get_params(deep=False).items()))
        return f"{type(self).__name__}({params})"


def clone(estimator):
    """Fresh unfitted copy with the same hyperparameters."""
    params = {
        name: copy.deepcopy(value)
        for name, value in estimator.get_params(deep=False).items()
    }
    cloned = {}
    for name, value in params.items():
        if hasattr(value, "get_params") and hasattr(value, "fit"):
            cloned[name] = clone(value)
        elif isinstance(value, (list, tuple)) and value and all(
            hasattr(v, "get_params") and hasattr(v, "fit") for v in value
        ):
            cloned[name] = type(value)(clone(v) for v in value)
        else:
            cloned[name] = value
    return type(estimator)(**cloned)
