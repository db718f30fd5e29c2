"""Training entry points: estimator construction by kind name plus thin
train_* wrappers used by the CLI and the experiment runner."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from factvote.errors import BadConfig
from factvote.learn.bayes import GaussianNB
from factvote.learn.ensemble import BaggingClassifier, VotingClassifier
from factvote.learn.forest import RandomForestClassifier
from factvote.learn.linear import LinearSVM, LogisticRegression, SGDClassifier
from factvote.learn.neighbors import KNeighborsClassifier
from factvote.learn.tree import DecisionTreeClassifier

SIMPLE_KINDS = {
    "logistic": LogisticRegression,
    "linear_svm": LinearSVM,
    "sgd": SGDClassifier,
    "cart": DecisionTreeClassifier,
    "random_forest": RandomForestClassifier,
    "knn": KNeighborsClassifier,
    "gnb": GaussianNB,
}

SEEDED_KINDS = {"logistic", "linear_svm", "sgd", "cart", "random_forest"}


@dataclass(frozen=True)
class LabeledInstance:
    features: tuple[float, ...]
    label: int

    def __post_init__(self):
        if self.label not in (0, 1):
            raise ValueError(f"label must be 0 or 1, got {self.label!r}")


def instances_to_arrays(instances) -> tuple[np.ndarray, np.ndarray]:
    X = np.asarray([list(inst.features) for inst in instances], dtype=np.float64)
    y = np.asarray([inst.label for inst in instances], dtype=np.int64)
    return X, y


@dataclass
class TrainConfig:
    """What to train and how: a kind name, the reproducibility seed, and
    hyperparameter overrides. Ensembles name their parts by kind."""

    kind: str = "random_forest"
    seed: int = 0
    params: dict = field(default_factory=dict)
    members: tuple[str, ...] = ()
    base: str = "cart"
    voting_mode: str = "hard"


def _build_simple(kind: str, seed: int, params: dict):
    cls = SIMPLE_KINDS[kind]
    kwargs = dict(params)
    if kind in SEEDED_KINDS:
        kwargs.setdefault("seed", seed)
    try:
        return cls(**kwargs)
    except TypeError as exc:
        raise BadConfig(f"bad hyperparameters for {kind!r}: {exc}") from None


def build_estimator(config: TrainConfig):
    """Instantiate an unfitted estimator from a TrainConfig.

    Composite kinds: "voting" needs config.members (simple kind names),
    "bagging" wraps config.base. Member estimators inherit config.seed.
    """
    kind = config.kind
    if kind in SIMPLE_KINDS:
        return _build_simple(kind, config.seed, config.params)
    if kind == "voting":
        members = [
            _build_simple(m, config.seed, config.params.get(m, {}))
            for m in config.members
            if m
        ]
        return VotingClassifier(members=members, mode=config.voting_mode)
    if kind == "bagging":
        if config.base not in SIMPLE_KINDS:
            raise BadConfig(f"unknown bagging base {config.base!r}")
        base = _build_simple(config.base, config.seed, config.params.get(config.base, {}))
        extra = {
            k: v for k, v in config.params.items() if k not in SIMPLE_KINDS
        }
        try:
            return BaggingClassifier(base=base, seed=config.seed, **extra)
        except TypeError as exc:
            raise BadConfig(f"bad bagging hyperparameters: {exc}") from None
    raise BadConfig(f"unknown model kind {kind!r}")


def parse_model_spec(text: str, seed: int = 0, params: dict | None = None) -> TrainConfig:
    """Parse a model name as accepted by the CLI and experiment files.

    Grammar: a simple kind ("logistic"), "vote:<k1>+<k2>+..." (hard),
    "softvote:..." (soft), or "bag:<kind>".
    """
    params = params or {}
    text = text.strip()
    if ":" in text:
        head, _, tail = text.partition(":")
        head = head.strip().lower()
        if head in ("vote", "softvote"):
            members = tuple(part.strip() for part in tail.split("+") if part.strip())
            if not members:
                raise BadConfig(f"voting spec {text!r} names no members")
            unknown = [m for m in members if m not in SIMPLE_KINDS]
            if unknown:
                raise BadConfig(f"unknown voting member(s) {unknown!r}")
            return TrainConfig(
                kind="voting",
                seed=seed,
                params=params,
                members=members,
                voting_mode="soft" if head == "softvote" else "hard",
            )
        if head == "bag":
            base = tail.strip()
            if base not in SIMPLE_KINDS:
                raise BadConfig(f"unknown bagging base {base!r}")
            return TrainConfig(kind="bagging", seed=seed, params=params, base=base)
        raise BadConfig(f"unknown composite model {head!r}")
    if text not in SIMPLE_KINDS:
        raise BadConfig(f"unknown model kind {text!r}")
    return TrainConfig(kind=text, seed=seed, params=params)


def train_model(X, y, config: TrainConfig):
    model = build_estimator(config)
    return model.fit(X, y)


def train_logistic(X, y, config: TrainConfig | None = None) -> LogisticRegression:
    cfg = config or TrainConfig(kind="logistic")
    return _build_simple("logistic", cfg.seed, cfg.params).fit(X, y)


def train_linear_svm(X, y, config: TrainConfig | None = None) -> LinearSVM:
    cfg = config or TrainConfig(kind="linear_svm")
    return _build_simple("linear_svm", cfg.seed, cfg.params).fit(X, y)


def train_sgd(X, y, config: TrainConfig | None = None) -> SGDClassifier:
    cfg = config or TrainConfig(kind="sgd")
    return _build_simple("sgd", cfg.seed, cfg.params).fit(X, y)


def train_cart(X, y, config: TrainConfig | None = None) -> DecisionTreeClassifier:
    cfg = config or TrainConfig(kind="cart")
    return _build_simple("cart", cfg.seed, cfg.params).fit(X, y)


def train_random_forest(X, y, config: TrainConfig | None = None) -> RandomForestClassifier:
    cfg = config or TrainConfig(kind="random_forest")
    return _build_simple("random_forest", cfg.seed, cfg.params).fit(X, y)


def train_knn(X, y, config: TrainConfig | None = None) -> KNeighborsClassifier:
    cfg = config or TrainConfig(kind="knn")
    return _build_simple("knn", cfg.seed, cfg.params).fit(X, y)


def train_gnb(X, y, config: TrainConfig | None = None) -> GaussianNB:
    cfg = config or TrainConfig(kind="gnb")
    return _build_simple("gnb", cfg.seed, cfg.params).fit(X, y)


def train_voting(members: list[str], X, y, config: TrainConfig | None = None) -> VotingClassifier:
    cfg = config or TrainConfig()
    full = TrainConfig(
        kind="voting",
        seed=cfg.seed,
        params=cfg.params,
        members=tuple(members),
        voting_mode=cfg.voting_mode,
    )
    return build_estimator(full).fit(X, y)


def train_bagging(base: str, n: int, X, y, config: TrainConfig | None = None) -> BaggingClassifier:
    cfg = config or TrainConfig()
    params = dict(cfg.params)
    params["n_estimators"] = n
    full = TrainConfig(kind="bagging", seed=cfg.seed, params=params, base=base)
    return build_estimator(full).fit(X, y)
