"""Dataset ingestion, metrics, the model/scope grid runner, and verdict voting."""

from factvote.evaluation.dataset import (
    CANONICAL_COUNTS,
    FAKE,
    LABEL_CODES,
    REAL,
    DatasetRecord,
    SplitCountReport,
    SplitSet,
    labels_by_id,
    load_dataset,
    verify_split_counts,
)
from factvote.evaluation.experiment import (
    DEFAULT_MODELS,
    ExperimentReport,
    ExperimentRow,
    ExperimentSpec,
    ModelEntry,
    ScopeData,
    build_scope_data,
    evaluate_predictions,
    load_experiment_file,
    run_experiment,
)
from factvote.evaluation.metrics import (
    ClassMetrics,
    ConfusionMatrix,
    MetricsReport,
    compute_metrics,
)
from factvote.evaluation.votes import (
    LABEL_NAMES,
    MISLEADING_LABEL,
    REAL_LABEL,
    VOTE_RULES,
    Verdict,
    platform_vote,
    vote_margin,
)

__all__ = [
    "DatasetRecord",
    "SplitSet",
    "SplitCountReport",
    "load_dataset",
    "verify_split_counts",
    "labels_by_id",
    "CANONICAL_COUNTS",
    "REAL",
    "FAKE",
    "LABEL_CODES",
    "ConfusionMatrix",
    "ClassMetrics",
    "MetricsReport",
    "compute_metrics",
    "ModelEntry",
    "ExperimentSpec",
    "ExperimentRow",
    "ExperimentReport",
    "ScopeData",
    "DEFAULT_MODELS",
    "run_experiment",
    "evaluate_predictions",
    "build_scope_data",
    "load_experiment_file",
    "platform_vote",
    "vote_margin",
    "Verdict",
    "VOTE_RULES",
    "LABEL_NAMES",
    "REAL_LABEL",
    "MISLEADING_LABEL",
]
