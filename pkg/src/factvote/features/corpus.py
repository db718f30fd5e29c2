"""The debunk-phrase list scanned against evidence titles."""

from __future__ import annotations

from pathlib import Path

from factvote.assets import read_asset

QUESTION_MARK = "?"


class FakePhraseCorpus:
    """Ordered lowercase phrases whose presence in a title marks it as a
    likely debunk. The bundled default ships in assets/fake_phrases.txt;
    callers can load an override file with the same one-phrase-per-line
    layout."""

    def __init__(self, phrases: list[str] | tuple[str, ...]):
        cleaned = []
        for raw in phrases:
            phrase = raw.strip()
            if not phrase:
                continue
            if phrase != phrase.lower():
                raise ValueError(f"corpus phrase must be lowercase: {phrase!r}")
            cleaned.append(phrase)
        if not cleaned:
            raise ValueError("phrase corpus is empty")
        self.phrases: tuple[str, ...] = tuple(cleaned)
        self._set = frozenset(self.phrases)

    def __iter__(self):
        return iter(self.phrases)

    def __len__(self) -> int:
        return len(self.phrases)

    def __contains__(self, phrase: str) -> bool:
        return phrase in self._set

    @property
    def has_question_mark(self) -> bool:
        return QUESTION_MARK in self._set

    def matches(self, text: str, word_boundary: bool = False) -> bool:
        """True if any phrase occurs in ``text``.

        Default is plain substring scan, so short entries can fire inside
        longer words. ``word_boundary`` restricts single-word phrases to
        whole-token hits; multi-word phrases stay substring matches.
        """
        if not text:
            return False
        words = None
        for phrase in self.phrases:
            if phrase == QUESTION_MARK:
                if QUESTION_MARK in text:
                    return True
                continue
            if word_boundary and " " not in phrase:
                if words is None:
                    words = set(text.split())
                if phrase in words:
                    return True
            elif phrase in text:
                return True
        return False

    @classmethod
    def load(cls, path: str | Path | None = None) -> "FakePhraseCorpus":
        if path is None:
            text = read_asset("fake_phrases.txt")
        else:
            text = Path(path).read_text(encoding="utf-8")
        return cls(text.splitlines())
