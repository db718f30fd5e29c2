"""Per-title evidence signals and their aggregation into claim vectors."""

from factvote.features.corpus import QUESTION_MARK, FakePhraseCorpus
from factvote.features.csvio import (
    HYBRID_HEADER,
    PLATFORM_HEADER,
    FeatureTable,
    read_features_csv,
    write_features_csv,
)
from factvote.features.extract import (
    DEFAULT_THRESHOLD,
    FEATURE_COLUMNS,
    HYBRID,
    SCOPES,
    ClaimFeatures,
    HybridFeatures,
    TitleFeatures,
    aggregate,
    hybrid_concat,
    title_features,
)
from factvote.features.similarity import cosine_similarity, semantic_similarity

__all__ = [
    "QUESTION_MARK",
    "FakePhraseCorpus",
    "cosine_similarity",
    "semantic_similarity",
    "DEFAULT_THRESHOLD",
    "FEATURE_COLUMNS",
    "HYBRID",
    "SCOPES",
    "TitleFeatures",
    "ClaimFeatures",
    "HybridFeatures",
    "title_features",
    "aggregate",
    "hybrid_concat",
    "FeatureTable",
    "PLATFORM_HEADER",
    "HYBRID_HEADER",
    "read_features_csv",
    "write_features_csv",
]
