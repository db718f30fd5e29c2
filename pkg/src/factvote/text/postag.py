"""Deterministic rule-based part-of-speech tagging.

Only the noun / verb / adjective / adverb / proper-noun distinction is
consumed downstream, so a lexicon plus a handful of suffix and
capitalization rules is enough; no statistical model is involved.

Resolution order for each token:

1. bundled tag lexicon (word -> most frequent tag),
2. suffix rules (-ly adverb; -ing/-ed verb; -ous/-ful/-able/-ive adjective),
3. capitalization in the original-case surface -> proper noun,
4. digit-bearing tokens -> number, lone symbols -> symbol,
5. default: noun.

Step 3 needs the original-case sidecar from
:func:`factvote.text.normalize.tokenize_with_case`; without it the rule
never fires. Capitalized words that survive to step 3 are unknown to the
lexicon, so they are read as proper nouns wherever they sit in the
sentence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from factvote.assets import read_asset

# Fixed tag set and the published tag -> category mapping.
TAG_CATEGORIES = {
    "NN": "noun",
    "NNP": "noun",
    "VB": "verb",
    "JJ": "adjective",
    "RB": "adverb",
    "DT": "other",
    "PRP": "other",
    "IN": "other",
    "CC": "other",
    "MD": "other",
    "CD": "other",
    "UH": "other",
    "SYM": "other",
}

# Category -> lexical database category letter (n/v/a/r); "other" has none.
CATEGORY_LETTERS = {"noun": "n", "verb": "v", "adjective": "a", "adverb": "r"}

_SUFFIX_RULES = (
    ("ly", "RB"),
    ("ing", "VB"),
    ("ed", "VB"),
    ("ous", "JJ"),
    ("ful", "JJ"),
    ("able", "JJ"),
    ("ive", "JJ"),
)


@dataclass(frozen=True)
class TaggedToken:
    token: str
    tag: str

    @property
    def category(self) -> str:
        return TAG_CATEGORIES[self.tag]


class PosTagger:
    """Lexicon + rules tagger over lowercase tokens."""

    def __init__(self, lexicon: dict[str, str]):
        for word, tag in lexicon.items():
            if tag not in TAG_CATEGORIES:
                raise ValueError(f"unknown tag {tag!r} for lexicon word {word!r}")
        self.lexicon = dict(lexicon)

    def tag(self, tokens: list[str], cased: list[str] | None = None) -> list[TaggedToken]:
        """One tag per token; ``cased`` is the aligned original-case sidecar."""
        if cased is not None and len(cased) != len(tokens):
            raise ValueError("cased sidecar length differs from token list")
        return [
            TaggedToken(tok, self._tag_one(tok, cased[i] if cased else None))
            for i, tok in enumerate(tokens)
        ]

    def _tag_one(self, token: str, surface: str | None) -> str:
        if not any(ch.isalnum() for ch in token):
            return "SYM"
        if token in self.lexicon:
            return self.lexicon[token]
        for suffix, tag in _SUFFIX_RULES:
            if token.endswith(suffix) and len(token) >= len(suffix) + 2:
                return tag
        if surface and surface[:1].isupper():
            return "NNP"
        if any(ch.isdigit() for ch in token):
            return "CD"
        return "NN"


def load_tag_lexicon(path=None) -> dict[str, str]:
    """Read a word<TAB>tag lexicon file; bundled table when ``path`` is None."""
    if path is None:
        content = read_asset("pos_lexicon.tsv")
    else:
        content = Path(path).read_text(encoding="utf-8")
    lexicon = {}
    for line in content.splitlines():
        line = line.strip()
        if not line:
            continue
        word, tag = line.split("\t")
        lexicon[word] = tag
    return lexicon


@lru_cache(maxsize=1)
def default_tagger() -> PosTagger:
    """Tagger over the bundled lexicon (cached)."""
    return PosTagger(load_tag_lexicon())
