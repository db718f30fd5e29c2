"""End-to-end orchestration: claim through evidence, features, models, vote."""

from factvote.pipeline.config import (
    EVIDENCE_MODES,
    PipelineConfig,
    PipelineContext,
    Resources,
)
from factvote.pipeline.run import (
    BatchResult,
    StageFailure,
    ocr_image,
    read_claims,
    run_batch,
    translate,
    verify_claim,
)

__all__ = [
    "PipelineConfig",
    "PipelineContext",
    "Resources",
    "EVIDENCE_MODES",
    "verify_claim",
    "run_batch",
    "read_claims",
    "BatchResult",
    "StageFailure",
    "translate",
    "ocr_image",
]
