"""Exception types raised across the package.

Every error that callers are expected to handle derives from
:class:`FactvoteError`, so CLI entry points can map them to exit codes in
one place.
"""


class FactvoteError(Exception):
    """Base class for all package errors."""


# --- text / lexical database ------------------------------------------------

class UnknownSynset(FactvoteError):
    """A synset id is not present in the lexical database."""


class CategoryMismatch(FactvoteError):
    """Path similarity requested between synsets of different categories."""


# --- query building ---------------------------------------------------------

class EmptyQuery(FactvoteError):
    """The claim text has no usable tokens after preprocessing."""


# --- evidence collection ----------------------------------------------------

class MissingFixture(FactvoteError):
    """Replay mode found no stored bundle for (query, platform)."""

    def __init__(self, query_text, platform):
        super().__init__(f"no fixture for platform={platform!r} query={query_text!r}")
        self.query_text = query_text
        self.platform = platform


class ProviderUnavailable(FactvoteError):
    """A live fetch failed after all retries were exhausted."""


# --- feature extraction -----------------------------------------------------

class MismatchedClaim(FactvoteError):
    """Attempt to combine per-platform features of different claims."""


# --- learners ---------------------------------------------------------------

class NotFitted(FactvoteError):
    """predict/transform called before fit."""


class DegenerateLabels(FactvoteError):
    """Training data contains fewer than two classes."""


class KTooLarge(FactvoteError):
    """k exceeds the number of stored training instances."""


class NoMembers(FactvoteError):
    """A voting ensemble was configured with an empty member list."""


class BadConfig(FactvoteError):
    """A hyperparameter value is outside its valid range."""


class DimensionMismatch(FactvoteError):
    """Prediction input dimension differs from the fitted dimension."""


class IncompatibleModel(FactvoteError):
    """A model file declares an unsupported format version."""


class ParseError(FactvoteError):
    """A structured file payload is corrupt, truncated, or malformed."""


# --- datasets / evaluation --------------------------------------------------

class BadHeader(FactvoteError):
    """Dataset file header does not declare the expected columns."""


class BadLabel(FactvoteError):
    """A dataset row carries a label outside {real, fake}."""

    def __init__(self, line_no, value):
        super().__init__(f"line {line_no}: unrecognized label {value!r}")
        self.line_no = line_no
        self.value = value


class DuplicateId(FactvoteError):
    """Two dataset rows share the same record id."""


class EmptyEvaluation(FactvoteError):
    """Metrics requested over an empty confusion matrix."""


class MissingFeatures(FactvoteError):
    """An experiment scope has no feature data."""


class NoVotes(FactvoteError):
    """Platform voting invoked with no per-platform labels at all."""


# --- pipeline ---------------------------------------------------------------

class NotSupported(FactvoteError):
    """A declared hook (image OCR) has no implementation."""
