"""End-to-end claim verification: single-claim and batch modes."""

from __future__ import annotations

import concurrent.futures
import csv
import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from factvote.errors import NotSupported, ParseError
from factvote.evaluation.votes import Verdict, platform_vote, vote_margin
from factvote.evidence.collect import collect, merge_bundles
from factvote.evidence.records import GOOGLE, YOUTUBE, EvidenceBundle, now_rfc3339
from factvote.features.extract import HYBRID, aggregate, hybrid_concat, title_features
from factvote.pipeline.config import PipelineConfig, PipelineContext
from factvote.queries import BuildStrategy, BuiltQuery, Claim, build_queries

TOOL_VERSION_FALLBACK = "0.0.0"


def translate(text: str, target: str = "en") -> str:
    """Identity pass-through; a translation backend can replace it."""
    return text


def ocr_image(path: str | Path) -> str:
    """Declared hook for text-additive image claims; no backend exists."""
    raise NotSupported("image claims are not supported; supply the text directly")


def read_claims(source: str | Path, fmt: str | None = None) -> list[Claim]:
    """Read a claims file: header with id + tweet|text, label optional."""
    path = Path(source)
    if fmt is None:
        delimiter = "\t" if path.suffix.lower() == ".tsv" else ","
    else:
        delimiter = "\t" if fmt == "tsv" else ","
    claims: list[Claim] = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh, delimiter=delimiter)
        try:
            header = [col.strip().lower() for col in next(reader)]
        except StopIteration:
            raise ParseError(f"{path}: empty claims file") from None
        if "id" not in header:
            raise ParseError(f"{path}: claims header must name an id column")
        id_col = header.index("id")
        if "tweet" in header:
            text_col = header.index("tweet")
        elif "text" in header:
            text_col = header.index("text")
        else:
            raise ParseError(f"{path}: claims header must name a tweet or text column")
        label_col = header.index("label") if "label" in header else None
        for row in reader:
            if not row or all(not cell.strip() for cell in row):
                continue
            gold = None
            if label_col is not None and label_col < len(row):
                raw = row[label_col].strip().lower()
                if raw:
                    gold = {"real": 0, "fake": 1}.get(raw)
            claims.append(Claim(id=row[id_col].strip(), text=row[text_col], gold_label=gold))
    return claims


@dataclass
class StageFailure(Exception):
    """Wraps a stage error so batch mode can report where it happened."""

    claim_id: str
    stage: str
    error: Exception

    def __str__(self) -> str:
        return f"claim {self.claim_id!r} failed at {self.stage}: {self.error}"

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "error": {
                "stage": self.stage,
                "type": type(self.error).__name__,
                "message": str(self.error),
            },
        }


def _reference_query(claim: Claim, queries: list[BuiltQuery], ctx: PipelineContext) -> BuiltQuery:
    # features always score against the whole-claim query form so the
    # relevance gate sees the same text regardless of build strategy
    if len(queries) == 1:
        return queries[0]
    return build_queries(
        claim, BuildStrategy.parse("1"), ctx.resources.stopwords, tagger=ctx.resources.tagger
    )[0]


def _collect_platform(
    queries: list[BuiltQuery], platform: str, reference: BuiltQuery, ctx: PipelineContext
) -> EvidenceBundle:
    bundles = [
        collect(query, platform, mode=ctx.config.mode, store=ctx.store)
        for query in queries
    ]
    return merge_bundles(bundles, reference_query=reference)


def verify_claim(
    text: str,
    config: PipelineConfig | None = None,
    ctx: PipelineContext | None = None,
    claim_id: str = "claim-1",
) -> Verdict:
    """Run one claim through the full chain and return its Verdict.

    Builds a context (models, resources, fixture store) on the fly when
    one is not supplied; batch callers pass a shared context.
    """
    if ctx is None:
        ctx = PipelineContext.from_config(config or PipelineConfig())
    claim = Claim(id=claim_id, text=translate(text))
    try:
        return _verify(claim, ctx)
    except StageFailure as failure:
        # single-claim callers want the underlying error (and its type)
        raise failure.error


def _verify(claim: Claim, ctx: PipelineContext) -> Verdict:
    config = ctx.config
    res = ctx.resources

    stage = "build_queries"
    try:
        strategy = BuildStrategy.parse(config.strategy)
        queries = build_queries(claim, strategy, res.stopwords, tagger=res.tagger)
        reference = _reference_query(claim, queries, ctx)

        stage = "collect"
        bundles = {
            platform: _collect_platform(queries, platform, reference, ctx)
            for platform in config.platforms
        }

        stage = "features"
        per_platform = {}
        trail: list[dict] = []
        for platform in config.platforms:
            bundle = bundles[platform]
            per_title = [
                title_features(
                    reference,
                    t,
                    res.corpus,
                    res.sentiment,
                    res.db,
                    res.stopwords,
                    tagger=res.tagger,
                    word_boundary=config.word_boundary,
                )
                for t in bundle.titles
            ]
            per_platform[platform] = aggregate(
                reference,
                bundle,
                threshold=config.threshold,
                corpus=res.corpus,
                lexicon=res.sentiment,
                db=res.db,
                stopwords=res.stopwords,
                tagger=res.tagger,
                word_boundary=config.word_boundary,
                per_title=per_title,
            )
            for title, tf in zip(bundle.titles, per_title):
                if tf.cosine >= config.threshold:
                    trail.append(
                        {
                            "platform": platform,
                            "rank": title.rank,
                            "title": title.title,
                            "url": title.url,
                            "cosine": tf.cosine,
                        }
                    )
        insufficient = all(bundle.empty for bundle in bundles.values())

        stage = "predict"
        labels: dict[str, int | None] = {GOOGLE: None, YOUTUBE: None, HYBRID: None}
        for scope, model in ctx.models.items():
            if scope == HYBRID:
                features = hybrid_concat(
                    per_platform.get(GOOGLE), per_platform.get(YOUTUBE), claim_id=claim.id
                )
            else:
                if scope not in per_platform:
                    continue
                features = per_platform[scope]
            labels[scope] = int(model.predict([features.to_vector()])[0])

        stage = "vote"
        final = platform_vote(
            labels[GOOGLE], labels[YOUTUBE], labels[HYBRID], rule=config.vote_rule
        )
        misleading, real, support = vote_margin(labels[GOOGLE], labels[YOUTUBE], labels[HYBRID])
    except Exception as exc:
        raise StageFailure(claim_id=claim.id, stage=stage, error=exc) from exc

    return Verdict(
        claim_id=claim.id,
        google=labels[GOOGLE],
        youtube=labels[YOUTUBE],
        hybrid=labels[HYBRID],
        final=final,
        votes_misleading=misleading,
        votes_real=real,
        support=support,
        insufficient_evidence=insufficient,
        trail=tuple(trail),
    )


@dataclass(frozen=True)
class BatchResult:
    verdicts: tuple[Verdict, ...]
    failures: tuple[StageFailure, ...]
    manifest: dict


def _verdict_line(verdict: Verdict) -> str:
    return json.dumps(verdict.to_dict(), sort_keys=True, separators=(",", ":"))


def _failure_line(failure: StageFailure) -> str:
    return json.dumps(failure.to_dict(), sort_keys=True, separators=(",", ":"))


def run_batch(
    dataset: str | Path,
    config: PipelineConfig,
    out_path: str | Path,
    manifest_path: str | Path | None = None,
    ctx: PipelineContext | None = None,
) -> BatchResult:
    """Verify every claim in ``dataset``; write one JSONL line per claim
    (verdict or error entry, input order) plus a run manifest.

    Verdict lines carry no wall-clock data, so replay reruns are
    byte-identical; timestamps live in the manifest only.
    """
    from factvote import __version__

    started_at = now_rfc3339()
    dataset = Path(dataset)
    raw = dataset.read_bytes()
    claims = read_claims(dataset)
    if ctx is None:
        ctx = PipelineContext.from_config(config)

    results: list[Verdict | StageFailure] = [None] * len(claims)  # type: ignore[list-item]

    def work(index: int) -> None:
        try:
            results[index] = _verify(claims[index], ctx)
        except StageFailure as failure:
            if config.fail_fast:
                raise
            results[index] = failure

    if config.workers == 1 or config.fail_fast:
        for i in range(len(claims)):
            work(i)
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=config.workers) as pool:
            futures = [pool.submit(work, i) for i in range(len(claims))]
            for future in futures:
                future.result()

    verdicts = tuple(r for r in results if isinstance(r, Verdict))
    failures = tuple(r for r in results if isinstance(r, StageFailure))

    out_path = Path(out_path)
    lines = [
        _verdict_line(r) if isinstance(r, Verdict) else _failure_line(r) for r in results
    ]
    out_path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")

    manifest = {
        "tool_version": __version__,
        "config": ctx.config.snapshot(),
        "input": {
            "path": str(dataset),
            "sha256": hashlib.sha256(raw).hexdigest(),
            "records": len(claims),
        },
        "counts": {
            "claims": len(claims),
            "verdicts": len(verdicts),
            "errors": len(failures),
        },
        "started_at": started_at,
        "finished_at": now_rfc3339(),
    }
    if manifest_path is None:
        manifest_path = out_path.with_name(out_path.stem + ".manifest.json")
    Path(manifest_path).write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return BatchResult(verdicts=verdicts, failures=failures, manifest=manifest)
