"""Per-title signals and their roll-up into the per-platform claim vector."""

from __future__ import annotations

from dataclasses import dataclass

from factvote.errors import MismatchedClaim, MissingFeatures
from factvote.evidence.records import GOOGLE, YOUTUBE, EvidenceBundle, EvidenceTitle
from factvote.features.corpus import QUESTION_MARK, FakePhraseCorpus
from factvote.features.similarity import cosine_similarity, semantic_similarity
from factvote.queries import BuiltQuery
from factvote.text.lexnet import LexicalDatabase
from factvote.text.normalize import normalize_text, tokenize
from factvote.text.postag import PosTagger
from factvote.text.rake import extract_ranked_phrases
from factvote.text.sentiment import (
    NEGATIVE,
    NEUTRAL,
    POSITIVE,
    SentimentLexicon,
    polarity_code,
    sentence_polarity,
)

DEFAULT_THRESHOLD = 0.2

HYBRID = "hybrid"
SCOPES = (GOOGLE, YOUTUBE, HYBRID)

# column order is the on-disk contract; to_vector() must agree with it
FEATURE_COLUMNS = (
    "fake_count",
    "qm_count",
    "cos_mean",
    "sem_mean",
    "query_polarity",
    "senti_match_count",
    "n_pos",
    "n_neg",
    "n_neu",
    "n_retained",
)


@dataclass(frozen=True)
class TitleFeatures:
    fake_flag: int
    qm_flag: int
    cosine: float
    semantic: float
    polarity: str

    def __post_init__(self):
        if self.fake_flag not in (0, 1):
            raise ValueError(f"fake_flag must be 0/1, got {self.fake_flag!r}")
        if self.qm_flag not in (0, 1):
            raise ValueError(f"qm_flag must be 0/1, got {self.qm_flag!r}")
        for name in ("cosine", "semantic"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} out of [0,1]: {value!r}")
        if self.polarity not in (POSITIVE, NEGATIVE, NEUTRAL):
            raise ValueError(f"bad polarity {self.polarity!r}")


@dataclass(frozen=True)
class ClaimFeatures:
    """One platform's aggregated evidence signals for one claim."""

    claim_id: str
    scope: str
    fake_count: int
    qm_count: int
    cos_mean: float
    sem_mean: float
    query_polarity: int
    senti_match_count: int
    n_pos: int
    n_neg: int
    n_neu: int
    n_retained: int

    def __post_init__(self):
        if self.scope not in (GOOGLE, YOUTUBE):
            raise ValueError(f"scope must be {GOOGLE!r} or {YOUTUBE!r}, got {self.scope!r}")
        if self.query_polarity not in (-1, 0, 1):
            raise ValueError(f"query_polarity must be -1/0/+1, got {self.query_polarity!r}")
        for name in ("fake_count", "qm_count", "senti_match_count", "n_pos", "n_neg", "n_neu", "n_retained"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        for name in ("fake_count", "qm_count", "senti_match_count"):
            if getattr(self, name) > self.n_retained:
                raise ValueError(f"{name} exceeds n_retained")
        if self.n_pos + self.n_neg + self.n_neu != self.n_retained:
            raise ValueError("polarity counts must sum to n_retained")

    def to_vector(self) -> list[float]:
        return [float(getattr(self, name)) for name in FEATURE_COLUMNS]

    @classmethod
    def zero(cls, claim_id: str, scope: str, query_polarity: int = 0) -> "ClaimFeatures":
        return cls(
            claim_id=claim_id,
            scope=scope,
            fake_count=0,
            qm_count=0,
            cos_mean=0.0,
            sem_mean=0.0,
            query_polarity=query_polarity,
            senti_match_count=0,
            n_pos=0,
            n_neg=0,
            n_neu=0,
            n_retained=0,
        )


@dataclass(frozen=True)
class HybridFeatures:
    """Google block then YouTube block, concatenated in that fixed order."""

    claim_id: str
    google: ClaimFeatures
    youtube: ClaimFeatures
    missing_google: bool = False
    missing_youtube: bool = False

    def __post_init__(self):
        if self.google.claim_id != self.claim_id or self.youtube.claim_id != self.claim_id:
            raise MismatchedClaim(
                f"hybrid blocks disagree on claim id: {self.google.claim_id!r} vs "
                f"{self.youtube.claim_id!r} (want {self.claim_id!r})"
            )
        if self.google.scope != GOOGLE:
            raise ValueError(f"first block must have scope {GOOGLE!r}")
        if self.youtube.scope != YOUTUBE:
            raise ValueError(f"second block must have scope {YOUTUBE!r}")

    @property
    def scope(self) -> str:
        return HYBRID

    def to_vector(self) -> list[float]:
        return self.google.to_vector() + self.youtube.to_vector()


def title_features(
    query: BuiltQuery,
    title: EvidenceTitle,
    corpus: FakePhraseCorpus,
    lexicon: SentimentLexicon,
    db: LexicalDatabase,
    stopwords: frozenset[str],
    tagger: PosTagger | None = None,
    word_boundary: bool = False,
) -> TitleFeatures:
    """Score one evidence title against its query.

    The debunk scan runs over the space-joined ranked phrases of the title
    (rank order), so stopwords never trigger it; the '?' corpus entry and
    qm_flag are checked on the title text itself because phrase extraction
    treats '?' as a boundary and drops it.
    """
    text = normalize_text(title.title)
    ranked = extract_ranked_phrases(text, stopwords)
    joined = " ".join(phrase for phrase, _ in ranked)

    fake_flag = 1 if corpus.matches(joined, word_boundary=word_boundary) else 0
    if not fake_flag and corpus.has_question_mark and QUESTION_MARK in text:
        fake_flag = 1
    qm_flag = 1 if QUESTION_MARK in text else 0

    query_tokens = tokenize(query.text)
    title_tokens = tokenize(text)
    cosine = cosine_similarity(query_tokens, title_tokens, stopwords)
    semantic = semantic_similarity(query_tokens, title_tokens, db, tagger=tagger)
    polarity = sentence_polarity(title_tokens, lexicon)
    return TitleFeatures(
        fake_flag=fake_flag,
        qm_flag=qm_flag,
        cosine=cosine,
        semantic=semantic,
        polarity=polarity,
    )


def aggregate(
    query: BuiltQuery,
    bundle: EvidenceBundle,
    threshold: float = DEFAULT_THRESHOLD,
    corpus: FakePhraseCorpus | None = None,
    lexicon: SentimentLexicon | None = None,
    db: LexicalDatabase | None = None,
    stopwords: frozenset[str] | None = None,
    tagger: PosTagger | None = None,
    word_boundary: bool = False,
    per_title: list[TitleFeatures] | None = None,
) -> ClaimFeatures:
    """Roll per-title signals up into the claim vector.

    Only titles whose cosine clears ``threshold`` contribute; means are 0
    when nothing survives the gate. ``per_title`` lets callers reuse
    already-computed title scores (the order must match bundle.titles).
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must lie in [0,1], got {threshold!r}")
    corpus = corpus or FakePhraseCorpus.load()
    lexicon = lexicon or SentimentLexicon.load()
    if db is None:
        db = LexicalDatabase.load()
    if stopwords is None:
        from factvote.text.normalize import load_stopwords

        stopwords = load_stopwords()

    if per_title is None:
        per_title = [
            title_features(query, t, corpus, lexicon, db, stopwords, tagger, word_boundary)
            for t in bundle.titles
        ]
    elif len(per_title) != len(bundle.titles):
        raise ValueError("per_title length does not match bundle")

    retained = [tf for tf in per_title if tf.cosine >= threshold]
    query_polarity = sentence_polarity(tokenize(query.text), lexicon)

    n = len(retained)
    n_pos = sum(1 for tf in retained if tf.polarity == POSITIVE)
    n_neg = sum(1 for tf in retained if tf.polarity == NEGATIVE)
    n_neu = n - n_pos - n_neg
    return ClaimFeatures(
        claim_id=query.claim_id,
        scope=bundle.platform,
        fake_count=sum(tf.fake_flag for tf in retained),
        qm_count=sum(tf.qm_flag for tf in retained),
        cos_mean=(sum(tf.cosine for tf in retained) / n) if n else 0.0,
        sem_mean=(sum(tf.semantic for tf in retained) / n) if n else 0.0,
        query_polarity=polarity_code(query_polarity),
        senti_match_count=sum(1 for tf in retained if tf.polarity == query_polarity),
        n_pos=n_pos,
        n_neg=n_neg,
        n_neu=n_neu,
        n_retained=n,
    )


def hybrid_concat(
    google: ClaimFeatures | None,
    youtube: ClaimFeatures | None,
    claim_id: str | None = None,
    on_missing: str = "zero",
) -> HybridFeatures:
    """Join the two platform blocks into the hybrid vector.

    A missing platform becomes an all-zero block flagged on the result by
    default; on_missing="error" raises instead.
    """
    if on_missing not in ("zero", "error"):
        raise ValueError(f"on_missing must be 'zero' or 'error', got {on_missing!r}")
    if google is None and youtube is None:
        raise MissingFeatures("both platform blocks are missing")
    if google is not None and youtube is not None and google.claim_id != youtube.claim_id:
        raise MismatchedClaim(
            f"cannot join features for different claims: "
            f"{google.claim_id!r} vs {youtube.claim_id!r}"
        )
    cid = claim_id or (google.claim_id if google is not None else youtube.claim_id)

    missing_g = google is None
    missing_y = youtube is None
    if missing_g or missing_y:
        if on_missing == "error":
            absent = GOOGLE if missing_g else YOUTUBE
            raise MissingFeatures(f"no {absent} features for claim {cid!r}")
        if missing_g:
            google = ClaimFeatures.zero(cid, GOOGLE)
        if missing_y:
            youtube = ClaimFeatures.zero(cid, YOUTUBE)
    return HybridFeatures(
        claim_id=cid,
        google=google,
        youtube=youtube,
        missing_google=missing_g,
        missing_youtube=missing_y,
    )
