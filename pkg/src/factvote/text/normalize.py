"""Text normalization, tokenization, stopwords, and n-grams.

The normal form keeps letters, digits, combining marks, whitespace, and the
question mark; everything else (URLs, emoji, symbols, remaining
punctuation) is dropped. '?' survives because it carries a signal later in
the feature stage.
"""

from __future__ import annotations

import re
import unicodedata
from pathlib import Path

from factvote.assets import read_asset

_URL_RE = re.compile(r"(?:https?://\S+|www\.\S+)", re.IGNORECASE)
_WS_RE = re.compile(r"\s+")
_QM_SPLIT_RE = re.compile(r"(\?)")

# Unicode major categories that survive normalization. Marks ride along so
# combining accents are not stripped from their base letters.
_KEPT_CATEGORIES = ("L", "M", "N")


def _keep_char(ch: str) -> bool:
    if ch == "?" or ch.isspace():
        return True
    return unicodedata.category(ch)[0] in _KEPT_CATEGORIES


def _normalize(raw: str, lowercase: bool) -> str:
    text = _URL_RE.sub(" ", raw)
    text = "".join(ch if _keep_char(ch) else " " if ch.isspace() else "" for ch in text)
    text = _WS_RE.sub(" ", text).strip()
    return text.lower() if lowercase else text


def normalize_text(raw: str) -> str:
    """Return the canonical lowercase form of ``raw``.

    Total and idempotent: URLs removed, disallowed codepoints dropped,
    punctuation except '?' stripped, whitespace collapsed, lowercased.
    """
    return _normalize(raw, lowercase=True)


def tokenize(text: str) -> list[str]:
    """Split normalized text on whitespace, emitting '?' as its own token."""
    tokens: list[str] = []
    for chunk in text.split():
        for piece in _QM_SPLIT_RE.split(chunk):
            if piece:
                tokens.append(piece)
    return tokens


def tokenize_with_case(raw: str) -> tuple[list[str], list[str]]:
    """Tokenize ``raw`` returning (lowercase tokens, original-case surfaces).

    The two lists are position-aligned; the cased surfaces feed the
    capitalization rule of the POS tagger. Lowercasing happens per token so
    alignment survives locale-odd case mappings.
    """
    cased = tokenize(_normalize(raw, lowercase=False))
    return [t.lower() for t in cased], cased


def remove_stopwords(tokens: list[str], stopwords: frozenset[str] | set[str]) -> list[str]:
    """Return the subsequence of ``tokens`` with stopword members removed."""
    return [t for t in tokens if t not in stopwords]


def ngrams(tokens: list[str], n: int) -> list[tuple[str, ...]]:
    """All contiguous windows of length ``n``, in order. Empty if too short."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)]


def load_stopwords(path=None) -> frozenset[str]:
    """Load a stopword list (one lowercase word per line, UTF-8).

    With no argument the bundled English list is returned.
    """
    if path is None:
        content = read_asset("stopwords.txt")
    else:
        content = Path(path).read_text(encoding="utf-8")
    words = set()
    for line in content.splitlines():
        word = line.strip()
        if word:
            words.add(word.lower())
    return frozenset(words)
