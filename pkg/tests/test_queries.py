"""Claim objects and the three query build cases."""

from __future__ import annotations

import pytest

from factvote.errors import EmptyQuery
from factvote.queries import (
    CASE_NGRAMS,
    CASE_PROPER_NOUNS,
    CASE_STOPWORDS,
    QUERY_SUFFIX,
    BuildStrategy,
    BuiltQuery,
    Claim,
    build_queries,
)

STOP = frozenset({"the", "a", "on", "of", "is", "it", "and", "in", "to"})


class TestClaim:
    def test_valid(self):
        claim = Claim(id="c1", text="masks work", gold_label=1)
        assert claim.gold_label == 1

    def test_rejects_blank_text(self):
        with pytest.raises(ValueError):
            Claim(id="c1", text="!!! ***")

    def test_rejects_bad_label(self):
        with pytest.raises(ValueError):
            Claim(id="c1", text="masks work", gold_label=2)


class TestBuildStrategy:
    def test_parse_forms(self):
        assert BuildStrategy.parse("1").case == CASE_STOPWORDS
        assert BuildStrategy.parse("2:3") == BuildStrategy(CASE_NGRAMS, 3)
        assert BuildStrategy.parse("2").n == 1
        assert BuildStrategy.parse("3").case == CASE_PROPER_NOUNS

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            BuildStrategy.parse("4")
        with pytest.raises(ValueError):
            BuildStrategy(CASE_NGRAMS, 0)

    def test_str_roundtrip(self):
        for spec in ("1", "2:2", "3"):
            assert str(BuildStrategy.parse(spec)) == spec


class TestBuiltQuery:
    def test_suffix_enforced(self):
        with pytest.raises(ValueError):
            BuiltQuery("c1", BuildStrategy(CASE_STOPWORDS), "no suffix here")


class TestStopwordCase:
    def test_single_query_with_suffix(self):
        claim = Claim(id="c1", text="The cat sat on the mat")
        queries = build_queries(claim, BuildStrategy(CASE_STOPWORDS), STOP)
        assert len(queries) == 1
        assert queries[0].text == f"cat sat mat {QUERY_SUFFIX}"
        assert queries[0].claim_id == "c1"
        assert not queries[0].fallback

    def test_all_stopwords_raises(self):
        claim = Claim(id="c1", text="it is on the a")
        with pytest.raises(EmptyQuery):
            build_queries(claim, BuildStrategy(CASE_STOPWORDS), STOP)

    def test_text_normalized_first(self):
        claim = Claim(id="c1", text="Masks WORK!!! https://x.example")
        queries = build_queries(claim, BuildStrategy(CASE_STOPWORDS), STOP)
        assert queries[0].text == f"masks work {QUERY_SUFFIX}"


class TestNgramCase:
    def test_one_query_per_window(self):
        claim = Claim(id="c1", text="garlic cures covid overnight")
        queries = build_queries(claim, BuildStrategy(CASE_NGRAMS, 2), STOP)
        assert [q.text for q in queries] == [
            f"garlic cures {QUERY_SUFFIX}",
            f"cures covid {QUERY_SUFFIX}",
            f"covid overnight {QUERY_SUFFIX}",
        ]

    def test_windows_skip_stopwords(self):
        claim = Claim(id="c1", text="the garlic cures the covid")
        queries = build_queries(claim, BuildStrategy(CASE_NGRAMS, 3), STOP)
        assert [q.text for q in queries] == [f"garlic cures covid {QUERY_SUFFIX}"]

    def test_too_short_for_window_yields_nothing(self):
        claim = Claim(id="c1", text="garlic")
        assert build_queries(claim, BuildStrategy(CASE_NGRAMS, 4), STOP) == []


class TestProperNounCase:
    def test_adjacent_proper_nouns_merge_into_one_span(self, tagger):
        claim = Claim(id="c1", text="Bill Gates spoke about vaccines in Wuhan")
        queries = build_queries(claim, BuildStrategy(CASE_PROPER_NOUNS), STOP, tagger=tagger)
        texts = [q.text for q in queries]
        assert f"bill gates {QUERY_SUFFIX}" in texts
        assert f"wuhan {QUERY_SUFFIX}" in texts
        assert all(not q.fallback for q in queries)

    def test_sentence_initial_capital_counts(self, tagger):
        # capitalization is the only proper-noun signal, so position one
        # qualifies like any other
        claim = Claim(id="c1", text="Wuhan reported new cases")
        queries = build_queries(claim, BuildStrategy(CASE_PROPER_NOUNS), STOP, tagger=tagger)
        assert queries[0].text == f"wuhan {QUERY_SUFFIX}"

    def test_no_proper_nouns_falls_back_to_stopword_query(self, tagger):
        claim = Claim(id="c1", text="garlic cures covid overnight")
        queries = build_queries(claim, BuildStrategy(CASE_PROPER_NOUNS), STOP, tagger=tagger)
        assert len(queries) == 1
        assert queries[0].fallback
        assert queries[0].text == f"garlic cures covid overnight {QUERY_SUFFIX}"

    def test_lexicon_words_are_not_proper_nouns(self, tagger):
        # "The" is capitalized but tagged DT by the lexicon, not NNP
        claim = Claim(id="c1", text="The Wuhan lab story")
        queries = build_queries(claim, BuildStrategy(CASE_PROPER_NOUNS), STOP, tagger=tagger)
        assert queries[0].text == f"wuhan {QUERY_SUFFIX}"


class TestSuffix:
    def test_every_query_carries_the_debunk_suffix(self, tagger):
        claim = Claim(id="c1", text="Bill Gates funds covid vaccines research")
        for spec in ("1", "2:2", "3"):
            for q in build_queries(claim, BuildStrategy.parse(spec), STOP, tagger=tagger):
                assert q.text.endswith(QUERY_SUFFIX)
