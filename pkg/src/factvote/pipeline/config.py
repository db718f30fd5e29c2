"""Pipeline configuration and shared read-only resources."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from factvote.errors import BadConfig
from factvote.evidence.fixtures import FixtureStore
from factvote.evidence.records import GOOGLE, YOUTUBE
from factvote.features.corpus import FakePhraseCorpus
from factvote.features.extract import DEFAULT_THRESHOLD, SCOPES
from factvote.learn.persistence import load_model
from factvote.queries import BuildStrategy
from factvote.text.lexnet import LexicalDatabase
from factvote.text.normalize import load_stopwords
from factvote.text.postag import PosTagger, default_tagger, load_tag_lexicon
from factvote.text.sentiment import SentimentLexicon

EVIDENCE_MODES = ("live", "record", "replay")


@dataclass
class PipelineConfig:
    """Everything a run needs, loadable from JSON with CLI overrides on top."""

    strategy: str = "1"
    platforms: tuple[str, ...] = (GOOGLE, YOUTUBE)
    mode: str = "replay"
    threshold: float = DEFAULT_THRESHOLD
    fixtures_dir: str | None = None
    model_paths: dict = field(default_factory=dict)
    vote_rule: str = "majority"
    seed: int = 0
    workers: int = 4
    fail_fast: bool = False
    word_boundary: bool = False
    stopwords_path: str | None = None
    fake_phrases_path: str | None = None
    sentiment_path: str | None = None
    synsets_path: str | None = None
    hypernyms_path: str | None = None
    pos_lexicon_path: str | None = None

    def validate(self) -> "PipelineConfig":
        if not 0.0 <= self.threshold <= 1.0:
            raise BadConfig(f"threshold must lie in [0,1], got {self.threshold!r}")
        if self.mode not in EVIDENCE_MODES:
            raise BadConfig(f"mode must be one of {EVIDENCE_MODES}, got {self.mode!r}")
        if self.vote_rule not in ("majority", "hybrid-only"):
            raise BadConfig(f"unknown vote rule {self.vote_rule!r}")
        if self.workers < 1:
            raise BadConfig("workers must be >= 1")
        try:
            BuildStrategy.parse(self.strategy)
        except ValueError as exc:
            raise BadConfig(f"bad build strategy: {exc}") from None
        self.platforms = tuple(self.platforms)
        for platform in self.platforms:
            if platform not in (GOOGLE, YOUTUBE):
                raise BadConfig(f"unknown platform {platform!r}")
        if not self.platforms:
            raise BadConfig("at least one platform is required")
        for scope in self.model_paths:
            if scope not in SCOPES:
                raise BadConfig(f"model scope must be one of {SCOPES}, got {scope!r}")
        if self.mode in ("replay", "record") and self.fixtures_dir is None:
            raise BadConfig(f"{self.mode} mode needs fixtures_dir")
        for label, value in self._referenced_paths():
            if value is not None and not Path(value).exists():
                raise BadConfig(f"{label} does not exist: {value}")
        return self

    def _referenced_paths(self):
        yield "fixtures_dir", self.fixtures_dir
        for scope, path in sorted(self.model_paths.items()):
            yield f"model_paths[{scope}]", path
        yield "stopwords_path", self.stopwords_path
        yield "fake_phrases_path", self.fake_phrases_path
        yield "sentiment_path", self.sentiment_path
        yield "synsets_path", self.synsets_path
        yield "hypernyms_path", self.hypernyms_path
        yield "pos_lexicon_path", self.pos_lexicon_path

    def snapshot(self) -> dict:
        out = asdict(self)
        out["platforms"] = list(self.platforms)
        return out

    @classmethod
    def from_file(cls, path: str | Path | None = None, **overrides) -> "PipelineConfig":
        """Build from an optional JSON file; keyword overrides win.

        Override values of None mean "not given on the command line" and
        leave the file/default value in place.
        """
        values: dict = {}
        if path is not None:
            try:
                payload = json.loads(Path(path).read_text(encoding="utf-8"))
            except OSError as exc:
                raise BadConfig(f"cannot read config file: {exc}") from None
            except json.JSONDecodeError as exc:
                raise BadConfig(f"config file is not valid JSON: {exc}") from None
            if not isinstance(payload, dict):
                raise BadConfig("config file must hold a JSON object")
            values.update(payload)
        for key, value in overrides.items():
            if value is not None:
                values[key] = value
        known = set(cls.__dataclass_fields__)
        unknown = set(values) - known
        if unknown:
            raise BadConfig(f"unknown config key(s): {sorted(unknown)}")
        config = cls(**values)
        return config.validate()


@dataclass
class Resources:
    """Loaded lexical assets shared read-only across claims."""

    stopwords: frozenset
    corpus: FakePhraseCorpus
    sentiment: SentimentLexicon
    db: LexicalDatabase
    tagger: PosTagger

    @classmethod
    def load(cls, config: PipelineConfig | None = None) -> "Resources":
        config = config or PipelineConfig()
        if config.pos_lexicon_path is not None:
            tagger = PosTagger(load_tag_lexicon(config.pos_lexicon_path))
        else:
            tagger = default_tagger()
        return cls(
            stopwords=load_stopwords(config.stopwords_path),
            corpus=FakePhraseCorpus.load(config.fake_phrases_path),
            sentiment=SentimentLexicon.load(config.sentiment_path),
            db=LexicalDatabase.load(config.synsets_path, config.hypernyms_path),
            tagger=tagger,
        )


@dataclass
class PipelineContext:
    """Config plus everything loaded once per process: resources, models,
    and the fixture store."""

    config: PipelineConfig
    resources: Resources
    models: dict
    store: FixtureStore | None

    @classmethod
    def from_config(cls, config: PipelineConfig) -> "PipelineContext":
        config.validate()
        models = {scope: load_model(path) for scope, path in sorted(config.model_paths.items())}
        store = FixtureStore(Path(config.fixtures_dir)) if config.fixtures_dir else None
        return cls(
            config=config,
            resources=Resources.load(config),
            models=models,
            store=store,
        )
