"""Shared fixtures: bundled language resources, builders, CLI invoker."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from factvote.evidence.records import GOOGLE, EvidenceBundle, EvidenceTitle
from factvote.pipeline.config import Resources
from factvote.queries import BuildStrategy, BuiltQuery, Claim, build_queries
from factvote.text.normalize import normalize_text

GOLDEN_DIR = Path(__file__).parent / "data" / "golden"


@pytest.fixture(scope="session")
def resources() -> Resources:
    return Resources.load()


@pytest.fixture(scope="session")
def stopwords(resources):
    return resources.stopwords


@pytest.fixture(scope="session")
def lexdb(resources):
    return resources.db


@pytest.fixture(scope="session")
def tagger(resources):
    return resources.tagger


@pytest.fixture(scope="session")
def phrase_corpus(resources):
    return resources.corpus


@pytest.fixture(scope="session")
def sentiment_lexicon(resources):
    return resources.sentiment


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)


def make_query(text: str, resources: Resources, claim_id: str = "q-1") -> BuiltQuery:
    claim = Claim(id=claim_id, text=text)
    return build_queries(claim, BuildStrategy.parse("1"), resources.stopwords,
                         tagger=resources.tagger)[0]


def make_bundle(
    query: BuiltQuery,
    titles: list[str],
    platform: str = GOOGLE,
    fetched_at: str = "2024-01-01T00:00:00Z",
) -> EvidenceBundle:
    entries = tuple(
        EvidenceTitle(
            platform=platform,
            rank=i + 1,
            title=normalize_text(t),
            url=f"https://example.com/{platform}/{i + 1}",
            fetched_at=fetched_at,
        )
        for i, t in enumerate(titles)
    )
    return EvidenceBundle(query=query, platform=platform, titles=entries)


@pytest.fixture
def query_builder(resources):
    def build(text: str, claim_id: str = "q-1") -> BuiltQuery:
        return make_query(text, resources, claim_id=claim_id)

    return build


@pytest.fixture
def bundle_builder(resources, query_builder):
    def build(claim_text: str, titles: list[str], platform: str = GOOGLE) -> EvidenceBundle:
        return make_bundle(query_builder(claim_text), titles, platform=platform)

    return build


@pytest.fixture
def run_cli():
    """Invoke the console entry point in-process; returns the exit code."""
    from factvote.cli import main

    def invoke(*args: str) -> int:
        return main([str(a) for a in args])

    return invoke
