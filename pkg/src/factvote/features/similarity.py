"""Query-title similarity scores: set cosine and taxonomy-path overlap."""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

from factvote.text.lexnet import LexicalDatabase, path_similarity
from factvote.text.postag import CATEGORY_LETTERS, PosTagger, default_tagger


def cosine_similarity(a: Sequence[str], b: Sequence[str], stopwords: Iterable[str]) -> float:
    """Binary set cosine between two token lists after stopword removal.

    Tokens become presence indicators over the union vocabulary, so the
    score is |X∩Y| / sqrt(|X|·|Y|). Either side empty scores 0.
    """
    sw = stopwords if isinstance(stopwords, (set, frozenset)) else frozenset(stopwords)
    xs = {t for t in a if t not in sw}
    ys = {t for t in b if t not in sw}
    if not xs or not ys:
        return 0.0
    return len(xs & ys) / math.sqrt(len(xs) * len(ys))


def _content_synsets(
    tokens: Sequence[str], db: LexicalDatabase, tagger: PosTagger
) -> list[tuple[str, tuple[str, ...]]]:
    # (category letter, synset ids) per content token that the db knows
    out = []
    for tagged in tagger.tag(list(tokens)):
        letter = CATEGORY_LETTERS.get(tagged.category)
        if letter is None:
            continue
        ids = db.synsets_for(tagged.token, letter)
        if ids:
            out.append((letter, ids))
    return out


def _directional(
    src: list[tuple[str, tuple[str, ...]]],
    dst_by_cat: dict[str, set[str]],
    db: LexicalDatabase,
) -> float:
    if not src:
        return 0.0
    total = 0.0
    for letter, ids in src:
        best = 0.0
        for sid in ids:
            for tid in dst_by_cat.get(letter, ()):
                sim = path_similarity(db, sid, tid)
                if sim is not None and sim > best:
                    best = sim
                    if best == 1.0:
                        break
            if best == 1.0:
                break
        total += best
    return total / len(src)


def semantic_similarity(
    a: Sequence[str],
    b: Sequence[str],
    db: LexicalDatabase,
    tagger: PosTagger | None = None,
) -> float:
    """Sense-level overlap between two token lists in [0, 1].

    Content words (noun/verb/adjective/adverb after tagging) with at least
    one synset are scored by their best path similarity to any same-category
    synset on the other side; each direction averages its word scores and
    the result is the mean of both directions. Sentences with no scorable
    content yield 0.
    """
    tagger = tagger or default_tagger()
    src = _content_synsets(a, db, tagger)
    dst = _content_synsets(b, db, tagger)

    def by_cat(entries: list[tuple[str, tuple[str, ...]]]) -> dict[str, set[str]]:
        grouped: dict[str, set[str]] = {}
        for letter, ids in entries:
            grouped.setdefault(letter, set()).update(ids)
        return grouped

    forward = _directional(src, by_cat(dst), db)
    backward = _directional(dst, by_cat(src), db)
    return (forward + backward) / 2.0
