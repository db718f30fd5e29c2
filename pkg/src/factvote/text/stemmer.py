"""Porter-style suffix stripping.

Classic five-step rule cascade over the consonant/vowel measure. Words of
length <= 2 pass through unchanged. Deterministic; no lookup tables.
"""

from __future__ import annotations

_VOWELS = "aeiou"


class PorterStemmer:
    """Stateless rule applier; a single module-level instance backs :func:`stem`."""

    def stem(self, word: str) -> str:
        if len(word) <= 2 or not word.isalpha():
            return word
        w = self._step1a(word)
        w = self._step1b(w)
        w = self._step1c(w)
        w = self._step2(w)
        w = self._step3(w)
        w = self._step4(w)
        w = self._step5a(w)
        w = self._step5b(w)
        return w

    # -- letter classes ----------------------------------------------------

    def _is_consonant(self, word: str, i: int) -> bool:
        ch = word[i]
        if ch in _VOWELS:
            return False
        if ch == "y":
            return i == 0 or not self._is_consonant(word, i - 1)
        return True

    def _measure(self, stem: str) -> int:
        # number of vowel->consonant transitions (the VC count)
        m = 0
        prev_vowel = False
        for i in range(len(stem)):
            if self._is_consonant(stem, i):
                if prev_vowel:
                    m += 1
                prev_vowel = False
            else:
                prev_vowel = True
        return m

    def _has_vowel(self, stem: str) -> bool:
        return any(not self._is_consonant(stem, i) for i in range(len(stem)))

    def _ends_double_consonant(self, word: str) -> bool:
        return (
            len(word) >= 2
            and word[-1] == word[-2]
            and self._is_consonant(word, len(word) - 1)
        )

    def _ends_cvc(self, word: str) -> bool:
        if len(word) < 3:
            return False
        n = len(word)
        return (
            self._is_consonant(word, n - 3)
            and not self._is_consonant(word, n - 2)
            and self._is_consonant(word, n - 1)
            and word[-1] not in "wxy"
        )

    # -- rule steps --------------------------------------------------------

    def _step1a(self, w: str) -> str:
        if w.endswith("sses"):
            return w[:-2]
        if w.endswith("ies"):
            return w[:-2]
        if w.endswith("ss"):
            return w
        if w.endswith("s"):
            return w[:-1]
        return w

    def _step1b(self, w: str) -> str:
        if w.endswith("eed"):
            if self._measure(w[:-3]) > 0:
                return w[:-1]
            return w
        cleanup = False
        if w.endswith("ed") and self._has_vowel(w[:-2]):
            w, cleanup = w[:-2], True
        elif w.endswith("ing") and self._has_vowel(w[:-3]):
            w, cleanup = w[:-3], True
        if cleanup:
            if w.endswith(("at", "bl", "iz")):
                return w + "e"
            if self._ends_double_consonant(w) and w[-1] not in "lsz":
                return w[:-1]
            if self._measure(w) == 1 and self._ends_cvc(w):
                return w + "e"
        return w

    def _step1c(self, w: str) -> str:
        if w.endswith("y") and self._has_vowel(w[:-1]):
            return w[:-1] + "i"
        return w

    _STEP2 = (
        ("ational", "ate"), ("tional", "tion"), ("enci", "ence"), ("anci", "ance"),
        ("izer", "ize"), ("abli", "able"), ("alli", "al"), ("entli", "ent"),
        ("eli", "e"), ("ousli", "ous"), ("ization", "ize"), ("ation", "ate"),
        ("ator", "ate"), ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
        ("ousness", "ous"), ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
    )

    _STEP3 = (
        ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
        ("ical", "ic"), ("ful", ""), ("ness", ""),
    )

    _STEP4 = (
        "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
        "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
    )

    def _step2(self, w: str) -> str:
        for suffix, repl in self._STEP2:
            if w.endswith(suffix):
                stem = w[: -len(suffix)]
                if self._measure(stem) > 0:
                    return stem + repl
                return w
        return w

    def _step3(self, w: str) -> str:
        for suffix, repl in self._STEP3:
            if w.endswith(suffix):
                stem = w[: -len(suffix)]
                if self._measure(stem) > 0:
                    return stem + repl
                return w
        return w

    def _step4(self, w: str) -> str:
        for suffix in self._STEP4:
            if w.endswith(suffix):
                stem = w[: -len(suffix)]
                if self._measure(stem) > 1:
                    if suffix == "ion" and (not stem or stem[-1] not in "st"):
                        return w
                    return stem
                return w
        return w

    def _step5a(self, w: str) -> str:
        if w.endswith("e"):
            stem = w[:-1]
            m = self._measure(stem)
            if m > 1 or (m == 1 and not self._ends_cvc(stem)):
                return stem
        return w

    def _step5b(self, w: str) -> str:
        if self._measure(w) > 1 and self._ends_double_consonant(w) and w.endswith("l"):
            return w[:-1]
        return w


_STEMMER = PorterStemmer()


def stem(token: str) -> str:
    """Porter stem of a lowercase token."""
    return _STEMMER.stem(token)
