"""Grid runner: every configured model on every platform scope."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from factvote.errors import MissingFeatures, ParseError
from factvote.evaluation.metrics import ConfusionMatrix, MetricsReport, compute_metrics
from factvote.features.csvio import FeatureTable, read_features_csv
from factvote.features.extract import HYBRID, SCOPES
from factvote.learn.train import build_estimator, parse_model_spec

AVERAGINGS = ("macro", "micro", "weighted")


@dataclass(frozen=True)
class ModelEntry:
    name: str
    spec: str


DEFAULT_MODELS = (
    ModelEntry("Random Forest", "random_forest"),
    ModelEntry("Linear SVM", "linear_svm"),
    ModelEntry("Logistic Regression", "logistic"),
    ModelEntry("SGD", "sgd"),
    ModelEntry("Voting (RF+LR+KNN)", "vote:random_forest+logistic+knn"),
    ModelEntry("Voting (LR+SVM+CART)", "vote:logistic+linear_svm+cart"),
    ModelEntry("Bagging (CART)", "bag:cart"),
)


@dataclass(frozen=True)
class ExperimentSpec:
    scopes: tuple[str, ...] = SCOPES
    models: tuple[ModelEntry, ...] = DEFAULT_MODELS
    averaging: str = "weighted"

    def __post_init__(self):
        if self.averaging not in AVERAGINGS:
            raise ValueError(f"averaging must be one of {AVERAGINGS}, got {self.averaging!r}")
        unknown = [s for s in self.scopes if s not in SCOPES]
        if unknown:
            raise ValueError(f"unknown scope(s) {unknown!r}")
        if not self.models:
            raise ValueError("experiment has no models")

    @classmethod
    def from_dict(cls, payload: dict) -> "ExperimentSpec":
        models = []
        for entry in payload.get("models", [dict(name=m.name, spec=m.spec) for m in DEFAULT_MODELS]):
            if isinstance(entry, str):
                models.append(ModelEntry(name=entry, spec=entry))
            elif isinstance(entry, dict) and "spec" in entry:
                models.append(ModelEntry(name=entry.get("name", entry["spec"]), spec=entry["spec"]))
            else:
                raise ParseError(f"bad model entry {entry!r}")
        return cls(
            scopes=tuple(payload.get("scopes", SCOPES)),
            models=tuple(models),
            averaging=payload.get("averaging", "weighted"),
        )


@dataclass
class ScopeData:
    """Train/eval matrices for one scope, rows aligned with labels."""

    X_train: np.ndarray
    y_train: np.ndarray
    X_eval: np.ndarray
    y_eval: np.ndarray


@dataclass(frozen=True)
class ExperimentRow:
    model: str
    scope: str
    precision: float
    recall: float
    f1: float
    accuracy: float
    averaging: str

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "scope": self.scope,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "accuracy": self.accuracy,
            "averaging": self.averaging,
        }


@dataclass(frozen=True)
class ExperimentReport:
    rows: tuple[ExperimentRow, ...]
    seed: int

    def to_dict(self) -> dict:
        return {"seed": self.seed, "rows": [row.to_dict() for row in self.rows]}

    def render_table(self) -> str:
        header = ("Model", "Scope", "Precision", "Recall", "F1", "Accuracy")
        body = [
            (
                row.model,
                row.scope,
                f"{row.precision:.4f}",
                f"{row.recall:.4f}",
                f"{row.f1:.4f}",
                f"{row.accuracy:.4f}",
            )
            for row in self.rows
        ]
        widths = [max(len(header[i]), *(len(b[i]) for b in body)) if body else len(header[i]) for i in range(6)]
        lines = [
            "  ".join(header[i].ljust(widths[i]) for i in range(6)),
            "  ".join("-" * widths[i] for i in range(6)),
        ]
        lines += ["  ".join(b[i].ljust(widths[i]) for i in range(6)) for b in body]
        return "\n".join(lines)

    def write(self, path: str | Path) -> None:
        Path(path).write_text(
            json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )


def evaluate_predictions(gold, predicted) -> MetricsReport:
    return compute_metrics(ConfusionMatrix.from_labels(gold, predicted))


def run_experiment(
    spec: ExperimentSpec, data: dict[str, ScopeData], seed: int
) -> ExperimentReport:
    """Train and score each (scope, model) cell; deterministic under seed.

    Row order is scope-major in spec order so reports compare stably.
    """
    rows = []
    for scope in spec.scopes:
        if scope not in data:
            raise MissingFeatures(f"no feature data for scope {scope!r}")
        scope_data = data[scope]
        for entry in spec.models:
            config = parse_model_spec(entry.spec, seed=seed)
            model = build_estimator(config).fit(scope_data.X_train, scope_data.y_train)
            predicted = model.predict(scope_data.X_eval)
            report = compute_metrics(ConfusionMatrix.from_labels(scope_data.y_eval, predicted))
            precision, recall, f1 = report.averaged(spec.averaging)
            rows.append(
                ExperimentRow(
                    model=entry.name,
                    scope=scope,
                    precision=precision,
                    recall=recall,
                    f1=f1,
                    accuracy=report.accuracy,
                    averaging=spec.averaging,
                )
            )
    return ExperimentReport(rows=tuple(rows), seed=seed)


def _labeled_matrix(table: FeatureTable, labels: dict[str, int], scope: str) -> tuple[np.ndarray, np.ndarray]:
    sub = table.select_scope(scope)
    if len(sub) == 0:
        raise MissingFeatures(f"feature file has no rows for scope {scope!r}")
    missing = [cid for cid in sub.ids if cid not in labels]
    if missing:
        raise MissingFeatures(f"no gold label for claim(s) {missing[:5]!r}")
    y = np.asarray([labels[cid] for cid in sub.ids], dtype=np.int64)
    return sub.X, y


def build_scope_data(
    scope: str,
    train_table: FeatureTable,
    eval_table: FeatureTable,
    train_labels: dict[str, int],
    eval_labels: dict[str, int],
) -> ScopeData:
    X_train, y_train = _labeled_matrix(train_table, train_labels, scope)
    X_eval, y_eval = _labeled_matrix(eval_table, eval_labels, scope)
    return ScopeData(X_train=X_train, y_train=y_train, X_eval=X_eval, y_eval=y_eval)


def load_experiment_file(path: str | Path) -> tuple[ExperimentSpec, dict[str, ScopeData], dict]:
    """Parse the experiment JSON and assemble per-scope matrices.

    Layout: {"scopes": [...], "models": [...], "averaging": ...,
    "train_features"/"eval_features": {scope: csv path},
    "train_labels"/"eval_labels": dataset path, "report": out path?}.
    Relative paths resolve against the spec file's directory.
    """
    from factvote.evaluation.dataset import labels_by_id, load_dataset

    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read experiment file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"experiment file is not valid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise ParseError("experiment file must hold a JSON object")
    spec = ExperimentSpec.from_dict(payload)

    base = path.parent

    def resolve(p: str) -> Path:
        candidate = Path(p)
        return candidate if candidate.is_absolute() else base / candidate

    for key in ("train_features", "eval_features", "train_labels", "eval_labels"):
        if key not in payload:
            raise ParseError(f"experiment file is missing {key!r}")

    train_labels = labels_by_id(load_dataset(resolve(payload["train_labels"])))
    eval_labels = labels_by_id(load_dataset(resolve(payload["eval_labels"])))

    train_tables: dict[str, FeatureTable] = {}
    eval_tables: dict[str, FeatureTable] = {}
    data: dict[str, ScopeData] = {}
    for scope in spec.scopes:
        train_path = payload["train_features"].get(scope)
        eval_path = payload["eval_features"].get(scope)
        if train_path is None or eval_path is None:
            raise MissingFeatures(f"experiment file lists no feature csv for scope {scope!r}")
        if train_path not in train_tables:
            train_tables[train_path] = read_features_csv(resolve(train_path))
        if eval_path not in eval_tables:
            eval_tables[eval_path] = read_features_csv(resolve(eval_path))
        data[scope] = build_scope_data(
            scope,
            train_tables[train_path],
            eval_tables[eval_path],
            train_labels,
            eval_labels,
        )
    return spec, data, payload
