"""Lexicon-driven sentence polarity with immediate-negator handling."""

from __future__ import annotations

from pathlib import Path

from factvote.assets import read_asset

POSITIVE = "positive"
NEGATIVE = "negative"
NEUTRAL = "neutral"

DEFAULT_NEGATORS = frozenset({"not", "no", "never", "n't", "cannot"})


class SentimentLexicon:
    """Word -> score map in [-1, +1] plus a negator word set.

    Negator words act only as sign flippers and are never scored
    themselves, even if they also appear in the score map.
    """

    def __init__(self, scores: dict[str, float], negators=DEFAULT_NEGATORS):
        for word, score in scores.items():
            if not -1.0 <= score <= 1.0:
                raise ValueError(f"score for {word!r} outside [-1, 1]: {score}")
        self.scores = dict(scores)
        self.negators = frozenset(negators)

    @classmethod
    def load(cls, path=None, negators=DEFAULT_NEGATORS) -> "SentimentLexicon":
        """Read a word<TAB>score file; bundled lexicon when ``path`` is None."""
        if path is None:
            content = read_asset("sentiment_lexicon.tsv")
        else:
            content = Path(path).read_text(encoding="utf-8")
        scores = {}
        for line in content.splitlines():
            line = line.strip()
            if not line:
                continue
            word, value = line.split("\t")
            scores[word] = float(value)
        return cls(scores, negators)

    def flipped(self) -> "SentimentLexicon":
        """Copy with every score sign inverted (test hook)."""
        return SentimentLexicon({w: -s for w, s in self.scores.items()}, self.negators)


def sentence_polarity(
    tokens: list[str],
    lexicon: SentimentLexicon,
    positive_threshold: float = 0.05,
    negative_threshold: float = -0.05,
) -> str:
    """Classify a token sequence as positive / negative / neutral.

    Score is the mean over lexicon-matched tokens; a negator flips the sign
    of the immediately following matched token. No matches -> neutral.
    """
    total = 0.0
    matched = 0
    negate_next = False
    for tok in tokens:
        if tok in lexicon.negators:
            negate_next = True
            continue
        if tok in lexicon.scores:
            value = lexicon.scores[tok]
            total += -value if negate_next else value
            matched += 1
        negate_next = False
    if matched == 0:
        return NEUTRAL
    mean = total / matched
    if mean > positive_threshold:
        return POSITIVE
    if mean < negative_threshold:
        return NEGATIVE
    return NEUTRAL


def polarity_code(polarity: str) -> int:
    """Encode polarity as -1 / 0 / +1."""
    return {NEGATIVE: -1, NEUTRAL: 0, POSITIVE: 1}[polarity]
