"""Turning a claim into search queries.

Three build cases are supported: stopword removal (the default and the
only one emitting a single query), n-gram enumeration, and proper-noun
extraction. Every emitted query carries the ``fake news`` suffix, which
biases search results toward debunking coverage.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from factvote.errors import EmptyQuery
from factvote.text.normalize import normalize_text, remove_stopwords, ngrams, tokenize, tokenize_with_case
from factvote.text.postag import PosTagger, default_tagger

QUERY_SUFFIX = "fake news"

CASE_STOPWORDS = 1
CASE_NGRAMS = 2
CASE_PROPER_NOUNS = 3


@dataclass(frozen=True)
class Claim:
    """A text assertion to verify, optionally gold-labeled.

    ``gold_label`` uses 1 for misleading, 0 for real, None for unlabeled.
    """

    id: str
    text: str
    gold_label: int | None = None

    def __post_init__(self):
        if not normalize_text(self.text):
            raise ValueError(f"claim {self.id!r} has no text after normalization")
        if self.gold_label not in (None, 0, 1):
            raise ValueError(f"claim {self.id!r}: bad gold label {self.gold_label!r}")


@dataclass(frozen=True)
class BuildStrategy:
    case: int
    n: int = 1

    def __post_init__(self):
        if self.case not in (CASE_STOPWORDS, CASE_NGRAMS, CASE_PROPER_NOUNS):
            raise ValueError(f"unknown build case {self.case}")
        if self.case == CASE_NGRAMS and self.n < 1:
            raise ValueError(f"n-gram size must be >= 1, got {self.n}")

    @classmethod
    def parse(cls, spec: str) -> "BuildStrategy":
        """Parse the CLI form: "1", "2:<n>", or "3"."""
        if spec == "1":
            return cls(CASE_STOPWORDS)
        if spec.startswith("2"):
            n = int(spec.split(":", 1)[1]) if ":" in spec else 1
            return cls(CASE_NGRAMS, n)
        if spec == "3":
            return cls(CASE_PROPER_NOUNS)
        raise ValueError(f"bad build-case spec {spec!r} (expected 1, 2:<n>, or 3)")

    def __str__(self) -> str:
        if self.case == CASE_NGRAMS:
            return f"2:{self.n}"
        return str(self.case)


@dataclass(frozen=True)
class BuiltQuery:
    claim_id: str
    strategy: BuildStrategy
    text: str
    fallback: bool = field(default=False)

    def __post_init__(self):
        if not self.text or not self.text.endswith(QUERY_SUFFIX):
            raise ValueError(f"query text must end with {QUERY_SUFFIX!r}: {self.text!r}")


def build_queries(
    claim: Claim,
    strategy: BuildStrategy,
    stopwords,
    tagger: PosTagger | None = None,
) -> list[BuiltQuery]:
    """Build the search queries for one claim under the given strategy.

    Case 1 emits exactly one query from the stopword-filtered tokens.
    Case 2 emits one query per n-gram of the surviving tokens.
    Case 3 emits one query per merged run of adjacent proper nouns, falling
    back to the case-1 query (flagged) when the claim has none.
    """
    tokens = tokenize(normalize_text(claim.text))
    if not tokens:
        raise EmptyQuery(f"claim {claim.id!r} is empty after preprocessing")
    surviving = remove_stopwords(tokens, stopwords)

    def query(text: str, fallback: bool = False) -> BuiltQuery:
        return BuiltQuery(claim.id, strategy, f"{text} {QUERY_SUFFIX}", fallback)

    if strategy.case == CASE_STOPWORDS:
        if not surviving:
            raise EmptyQuery(f"claim {claim.id!r} has only stopwords")
        return [query(" ".join(surviving))]

    if strategy.case == CASE_NGRAMS:
        return [query(" ".join(gram)) for gram in ngrams(surviving, strategy.n)]

    # proper-noun spans, adjacent tags merged into one span
    tagger = tagger or default_tagger()
    lowered, cased = tokenize_with_case(claim.text)
    tagged = tagger.tag(lowered, cased)
    spans: list[list[str]] = []
    current: list[str] = []
    for item in tagged:
        if item.tag == "NNP":
            current.append(item.token)
        elif current:
            spans.append(current)
            current = []
    if current:
        spans.append(current)
    if not spans:
        if not surviving:
            raise EmptyQuery(f"claim {claim.id!r} has only stopwords")
        return [query(" ".join(surviving), fallback=True)]
    return [query(" ".join(span)) for span in spans]
