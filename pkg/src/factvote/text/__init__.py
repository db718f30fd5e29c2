"""Deterministic text primitives.

Normalization, tokenization, stopwords, stemming, n-grams, rule-based POS
tagging, ranked keyword phrases, lexicon polarity, and hypernym-graph path
similarity. Everything here is a pure function over immutable inputs;
lexicons and databases are read-only after load.
"""

from factvote.text.normalize import (
    load_stopwords,
    ngrams,
    normalize_text,
    remove_stopwords,
    tokenize,
    tokenize_with_case,
)
from factvote.text.stemmer import PorterStemmer, stem
from factvote.text.postag import TAG_CATEGORIES, PosTagger, TaggedToken, default_tagger
from factvote.text.rake import extract_ranked_phrases
from factvote.text.sentiment import (
    NEGATIVE,
    NEUTRAL,
    POSITIVE,
    SentimentLexicon,
    sentence_polarity,
)
from factvote.text.lexnet import LexicalDatabase, path_similarity

__all__ = [
    "load_stopwords",
    "normalize_text",
    "tokenize",
    "tokenize_with_case",
    "remove_stopwords",
    "ngrams",
    "stem",
    "PorterStemmer",
    "TaggedToken",
    "PosTagger",
    "TAG_CATEGORIES",
    "default_tagger",
    "extract_ranked_phrases",
    "SentimentLexicon",
    "sentence_polarity",
    "POSITIVE",
    "NEGATIVE",
    "NEUTRAL",
    "LexicalDatabase",
    "path_similarity",
]
