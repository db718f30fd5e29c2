"""factvote: claim verification by web-evidence feature voting.

A claim is normalized, turned into search queries, matched against result
titles collected from Google and YouTube (live or replayed from fixtures),
scored along four feature families, classified per platform scope, and
settled by a cross-platform vote.
"""

__version__ = "0.1.0"

from factvote.errors import FactvoteError
from factvote.evaluation import (
    ConfusionMatrix,
    Verdict,
    compute_metrics,
    load_dataset,
    platform_vote,
    run_experiment,
    verify_split_counts,
)
from factvote.evidence import EvidenceBundle, EvidenceTitle, FixtureStore, collect
from factvote.features import (
    ClaimFeatures,
    FakePhraseCorpus,
    HybridFeatures,
    TitleFeatures,
    aggregate,
    cosine_similarity,
    hybrid_concat,
    semantic_similarity,
    title_features,
)
from factvote.learn import load_model, save_model
from factvote.pipeline import PipelineConfig, run_batch, verify_claim
from factvote.queries import BuildStrategy, BuiltQuery, Claim, build_queries

__all__ = [
    "__version__",
    "FactvoteError",
    "Claim",
    "BuildStrategy",
    "BuiltQuery",
    "build_queries",
    "EvidenceTitle",
    "EvidenceBundle",
    "FixtureStore",
    "collect",
    "FakePhraseCorpus",
    "TitleFeatures",
    "ClaimFeatures",
    "HybridFeatures",
    "cosine_similarity",
    "semantic_similarity",
    "title_features",
    "aggregate",
    "hybrid_concat",
    "save_model",
    "load_model",
    "ConfusionMatrix",
    "compute_metrics",
    "load_dataset",
    "verify_split_counts",
    "platform_vote",
    "Verdict",
    "run_experiment",
    "PipelineConfig",
    "verify_claim",
    "run_batch",
]
