"""Ranked keyword-phrase extraction (RAKE scheme).

Candidate phrases are the maximal token runs between stopwords and
punctuation. Each word scores degree/frequency over the candidate set; a
phrase scores the sum of its word scores.
"""

from __future__ import annotations

from collections import defaultdict

from factvote.text.normalize import normalize_text, tokenize


def extract_ranked_phrases(text: str, stopwords) -> list[tuple[str, float]]:
    """Return (phrase, score) pairs sorted by score descending.

    Ties keep first-occurrence order; repeated phrases are reported once
    with scores accumulated over all occurrences.
    """
    tokens = tokenize(normalize_text(text))

    candidates: list[tuple[str, ...]] = []
    current: list[str] = []
    for tok in tokens:
        if tok in stopwords or tok == "?":
            if current:
                candidates.append(tuple(current))
                current = []
        else:
            current.append(tok)
    if current:
        candidates.append(tuple(current))

    if not candidates:
        return []

    freq: dict[str, int] = defaultdict(int)
    degree: dict[str, int] = defaultdict(int)
    for phrase in candidates:
        for word in phrase:
            freq[word] += 1
            degree[word] += len(phrase)

    word_score = {w: degree[w] / freq[w] for w in freq}

    ranked: list[tuple[str, float]] = []
    seen: set[str] = set()
    for phrase in candidates:
        key = " ".join(phrase)
        if key in seen:
            continue  # word scores already count every occurrence
        seen.add(key)
        ranked.append((key, sum(word_score[w] for w in phrase)))

    ranked.sort(key=lambda item: -item[1])  # stable: ties keep first occurrence
    return ranked
