"""Command-line interface.

Exit codes: 0 success, 1 usage or configuration, 2 unreadable or malformed
data files, 3 missing fixture in replay mode, 4 unusable model file,
5 degenerate training data.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from factvote import __version__
from factvote.errors import (
    BadHeader,
    BadLabel,
    DegenerateLabels,
    DimensionMismatch,
    DuplicateId,
    EmptyEvaluation,
    FactvoteError,
    IncompatibleModel,
    MissingFixture,
    ParseError,
)
from factvote.evaluation.dataset import labels_by_id, load_dataset
from factvote.evaluation.experiment import load_experiment_file, run_experiment
from factvote.evaluation.metrics import ConfusionMatrix, compute_metrics
from factvote.evaluation.votes import LABEL_NAMES
from factvote.evidence.collect import collect, merge_bundles
from factvote.evidence.fixtures import FixtureStore
from factvote.evidence.records import GOOGLE, YOUTUBE, EvidenceBundle, EvidenceTitle
from factvote.features.csvio import read_features_csv, write_features_csv
from factvote.features.extract import HYBRID, aggregate, hybrid_concat
from factvote.learn.persistence import load_model, save_model
from factvote.learn.train import parse_model_spec, train_model
from factvote.pipeline.config import PipelineConfig, PipelineContext, Resources
from factvote.pipeline.run import StageFailure, read_claims, run_batch, verify_claim
from factvote.queries import BuildStrategy, build_queries

PLATFORMS = (GOOGLE, YOUTUBE)


def _load_model_file(path):
    """Load a saved model, folding parse failures into the model exit code."""
    try:
        return load_model(path)
    except ParseError as exc:
        raise IncompatibleModel(str(exc)) from exc


def _preflight_models(config: PipelineConfig) -> None:
    for path in config.model_paths.values():
        _load_model_file(path)


@click.group()
@click.version_option(version=__version__, prog_name="factvote")
def cli():
    """Claim verification by web-evidence feature voting."""


def _build_reference(claim, resources):
    return build_queries(
        claim, BuildStrategy.parse("1"), resources.stopwords, tagger=resources.tagger
    )[0]


@cli.command("collect")
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False))
@click.option("--providers", default="google,youtube", show_default=True,
              help="Comma-separated platform list.")
@click.option("--mode", type=click.Choice(["live", "record", "replay"]), default="replay",
              show_default=True)
@click.option("--fixtures", "fixtures_dir", type=click.Path(file_okay=False), default=None,
              help="Fixture store directory (required for record/replay).")
@click.option("--strategy", default="1", show_default=True,
              help="Query build strategy: 1, 2:<n>, or 3.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
def collect_cmd(input_path, providers, mode, fixtures_dir, strategy, out_path):
    """Gather evidence titles for every claim in a claims file.

    Writes one JSON line per title: claim_id, query, platform, rank,
    title, url, fetched_at. Claims whose searches return nothing simply
    contribute no lines.
    """
    platform_list = [p.strip() for p in providers.split(",") if p.strip()]
    for platform in platform_list:
        if platform not in PLATFORMS:
            raise click.UsageError(f"unknown provider {platform!r}")
    if mode in ("record", "replay") and fixtures_dir is None:
        raise click.UsageError(f"--fixtures is required for {mode} mode")
    store = FixtureStore(Path(fixtures_dir)) if fixtures_dir else None
    if mode == "record" and store is not None:
        Path(fixtures_dir).mkdir(parents=True, exist_ok=True)

    resources = Resources.load()
    parsed_strategy = BuildStrategy.parse(strategy)
    claims = read_claims(input_path)
    lines = []
    for claim in claims:
        queries = build_queries(claim, parsed_strategy, resources.stopwords, tagger=resources.tagger)
        reference = queries[0] if len(queries) == 1 else _build_reference(claim, resources)
        for platform in platform_list:
            bundles = [collect(q, platform, mode=mode, store=store) for q in queries]
            merged = merge_bundles(bundles, reference_query=reference)
            for title in merged.titles:
                lines.append(
                    json.dumps(
                        {
                            "claim_id": claim.id,
                            "query": merged.query.text,
                            "platform": platform,
                            "rank": title.rank,
                            "title": title.title,
                            "url": title.url,
                            "fetched_at": title.fetched_at,
                        },
                        sort_keys=True,
                        separators=(",", ":"),
                    )
                )
    Path(out_path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    click.echo(f"wrote {len(lines)} title lines for {len(claims)} claims to {out_path}")


def _load_evidence(path: Path) -> dict[tuple[str, str], list[dict]]:
    grouped: dict[tuple[str, str], list[dict]] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path}:{line_no}: bad JSON: {exc}") from None
            try:
                key = (record["claim_id"], record["platform"])
            except KeyError as exc:
                raise ParseError(f"{path}:{line_no}: missing field {exc}") from None
            grouped.setdefault(key, []).append(record)
    for records in grouped.values():
        records.sort(key=lambda r: r.get("rank", 0))
    return grouped


def _bundle_from_records(reference, platform: str, records: list[dict]) -> EvidenceBundle:
    titles = tuple(
        EvidenceTitle(
            platform=platform,
            rank=i + 1,
            title=r["title"],
            url=r.get("url", ""),
            fetched_at=r.get("fetched_at", "1970-01-01T00:00:00Z"),
        )
        for i, r in enumerate(records)
    )
    return EvidenceBundle(query=reference, platform=platform, titles=titles)


@cli.command("featurize")
@click.option("--claims", "claims_path", required=True, type=click.Path(dir_okay=False))
@click.option("--evidence", "evidence_path", required=True, type=click.Path(dir_okay=False))
@click.option("--threshold", type=float, default=0.2, show_default=True,
              help="Cosine relevance gate.")
@click.option("--scope", type=click.Choice(["google", "youtube", "hybrid", "both"]),
              default="both", show_default=True)
@click.option("--word-boundary", is_flag=True, default=False,
              help="Whole-word matching for single-word debunk phrases.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
def featurize_cmd(claims_path, evidence_path, threshold, scope, word_boundary, out_path):
    """Turn collected evidence titles into the feature matrix CSV.

    Claims without evidence for a platform get an all-zero row, so every
    claim in the claims file appears in the output.
    """
    resources = Resources.load()
    claims = read_claims(claims_path)
    evidence = _load_evidence(Path(evidence_path))

    def platform_features(claim, platform):
        reference = _build_reference(claim, resources)
        records = evidence.get((claim.id, platform), [])
        bundle = _bundle_from_records(reference, platform, records)
        return aggregate(
            reference,
            bundle,
            threshold=threshold,
            corpus=resources.corpus,
            lexicon=resources.sentiment,
            db=resources.db,
            stopwords=resources.stopwords,
            tagger=resources.tagger,
            word_boundary=word_boundary,
        )

    rows = []
    if scope == "hybrid":
        for claim in claims:
            rows.append(
                hybrid_concat(
                    platform_features(claim, GOOGLE), platform_features(claim, YOUTUBE)
                )
            )
    else:
        platforms = PLATFORMS if scope == "both" else (scope,)
        for platform in platforms:
            for claim in claims:
                rows.append(platform_features(claim, platform))
    write_features_csv(out_path, rows)
    click.echo(f"wrote {len(rows)} feature rows to {out_path}")


def _scoped_table(table, scope, path):
    scopes = sorted(set(table.scopes))
    if scope is None:
        if len(scopes) > 1:
            raise click.UsageError(
                f"{path} mixes scopes {scopes}; pick one with --scope"
            )
        return table
    sub = table.select_scope(scope)
    if len(sub) == 0:
        raise click.UsageError(f"{path} has no rows for scope {scope!r}")
    return sub


@cli.command("train")
@click.option("--features", "features_path", required=True, type=click.Path(dir_okay=False))
@click.option("--labels", "labels_path", required=True, type=click.Path(dir_okay=False),
              help="Dataset file with gold labels, joined on claim id.")
@click.option("--model", "model_spec", default="random_forest", show_default=True,
              help="Kind or composite: vote:a+b+c, softvote:a+b, bag:kind.")
@click.option("--seed", type=int, required=True, help="Reproducibility seed (mandatory).")
@click.option("--scope", type=click.Choice(["google", "youtube", "hybrid"]), default=None,
              help="Row scope to train on if the CSV mixes several.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
def train_cmd(features_path, labels_path, model_spec, seed, scope, out_path):
    """Fit a model on a feature CSV and save it as JSON."""
    import numpy as np

    table = _scoped_table(read_features_csv(features_path), scope, features_path)
    labels = labels_by_id(load_dataset(labels_path))
    missing = [cid for cid in table.ids if cid not in labels]
    if missing:
        raise ParseError(f"{labels_path}: no gold label for claim(s) {missing[:5]!r}")
    y = np.asarray([labels[cid] for cid in table.ids], dtype=np.int64)
    if len(set(y.tolist())) < 2:
        raise DegenerateLabels("training labels contain a single class")
    config = parse_model_spec(model_spec, seed=seed)
    model = train_model(table.X, y, config)
    save_model(model, out_path)
    click.echo(f"trained {model_spec} on {len(table)} rows ({table.X.shape[1]} features) -> {out_path}")


@cli.command("predict")
@click.option("--model", "model_path", required=True, type=click.Path(dir_okay=False))
@click.option("--features", "features_path", required=True, type=click.Path(dir_okay=False))
@click.option("--scope", type=click.Choice(["google", "youtube", "hybrid"]), default=None)
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
def predict_cmd(model_path, features_path, scope, out_path):
    """Label feature rows with a saved model; JSONL out."""
    model = _load_model_file(model_path)
    table = _scoped_table(read_features_csv(features_path), scope, features_path)
    predictions = model.predict(table.X)
    probas = model.predict_proba(table.X) if getattr(model, "supports_proba", False) else None
    lines = []
    for i, (cid, row_scope) in enumerate(zip(table.ids, table.scopes)):
        label = int(predictions[i])
        record = {
            "claim_id": cid,
            "scope": row_scope,
            "label": label,
            "label_name": LABEL_NAMES[label],
            "proba": float(probas[i]) if probas is not None else None,
        }
        lines.append(json.dumps(record, sort_keys=True, separators=(",", ":")))
    Path(out_path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    click.echo(f"wrote {len(lines)} predictions to {out_path}")


@cli.command("evaluate")
@click.option("--pred", "pred_path", required=True, type=click.Path(dir_okay=False))
@click.option("--gold", "gold_path", required=True, type=click.Path(dir_okay=False))
@click.option("--averaging", type=click.Choice(["macro", "micro", "weighted"]),
              default="weighted", show_default=True)
@click.option("--report", "report_path", required=True, type=click.Path(dir_okay=False))
def evaluate_cmd(pred_path, gold_path, averaging, report_path):
    """Score a predictions JSONL against gold labels."""
    gold = labels_by_id(load_dataset(gold_path))
    pairs = []
    with open(pred_path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                cid = record["claim_id"]
                label = int(record["label"])
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"{pred_path}:{line_no}: {exc}") from None
            if cid not in gold:
                raise ParseError(f"{pred_path}:{line_no}: no gold label for claim {cid!r}")
            pairs.append((gold[cid], label))
    if not pairs:
        raise EmptyEvaluation("prediction file has no records")
    gold_vec = [g for g, _ in pairs]
    pred_vec = [p for _, p in pairs]
    cm = ConfusionMatrix.from_labels(gold_vec, pred_vec)
    metrics = compute_metrics(cm)
    precision, recall, f1 = metrics.averaged(averaging)
    payload = {
        "confusion": {"tp": cm.tp, "fp": cm.fp, "fn": cm.fn, "tn": cm.tn},
        "metrics": metrics.to_dict(),
        "headline": {
            "averaging": averaging,
            "precision": precision,
            "recall": recall,
            "f1": f1,
            "accuracy": metrics.accuracy,
        },
    }
    Path(report_path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    click.echo(
        f"n={cm.total} accuracy={metrics.accuracy:.4f} "
        f"{averaging}: P={precision:.4f} R={recall:.4f} F1={f1:.4f}"
    )


def _parse_model_paths(entries: tuple[str, ...]) -> dict:
    out = {}
    for entry in entries:
        scope, sep, path = entry.partition("=")
        if not sep or scope not in (GOOGLE, YOUTUBE, HYBRID):
            raise click.UsageError(
                f"--model-path wants scope=path with scope in google/youtube/hybrid, got {entry!r}"
            )
        out[scope] = path
    return out


@cli.command("verify")
@click.argument("claim_text")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="Pipeline config JSON; flags below override it.")
@click.option("--fixtures", "fixtures_dir", type=click.Path(file_okay=False), default=None)
@click.option("--mode", type=click.Choice(["live", "record", "replay"]), default=None)
@click.option("--strategy", default=None)
@click.option("--threshold", type=float, default=None)
@click.option("--vote-rule", type=click.Choice(["majority", "hybrid-only"]), default=None)
@click.option("--model-path", "model_paths", multiple=True,
              help="scope=path, repeatable (google/youtube/hybrid).")
@click.option("--claim-id", default="claim-1", show_default=True)
@click.option("--no-trail", is_flag=True, default=False, help="Omit the evidence trail.")
def verify_cmd(claim_text, config_path, fixtures_dir, mode, strategy, threshold,
               vote_rule, model_paths, claim_id, no_trail):
    """Verify one claim end to end and print the verdict as JSON."""
    overrides = {
        "fixtures_dir": fixtures_dir,
        "mode": mode,
        "strategy": strategy,
        "threshold": threshold,
        "vote_rule": vote_rule,
    }
    parsed_paths = _parse_model_paths(model_paths)
    if parsed_paths:
        overrides["model_paths"] = parsed_paths
    config = PipelineConfig.from_file(config_path, **overrides)
    _preflight_models(config)
    verdict = verify_claim(claim_text, config=config, claim_id=claim_id)
    click.echo(json.dumps(verdict.to_dict(include_trail=not no_trail), sort_keys=True))


@cli.command("batch")
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False))
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None)
@click.option("--fixtures", "fixtures_dir", type=click.Path(file_okay=False), default=None)
@click.option("--mode", type=click.Choice(["live", "record", "replay"]), default=None)
@click.option("--model-path", "model_paths", multiple=True)
@click.option("--workers", type=int, default=None)
@click.option("--fail-fast", is_flag=True, default=False)
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@click.option("--manifest", "manifest_path", type=click.Path(dir_okay=False), default=None,
              help="Defaults to <out>.manifest.json beside the verdict file.")
def batch_cmd(input_path, config_path, fixtures_dir, mode, model_paths, workers,
              fail_fast, out_path, manifest_path):
    """Verify every claim in a file; verdicts JSONL plus a run manifest."""
    overrides = {
        "fixtures_dir": fixtures_dir,
        "mode": mode,
        "workers": workers,
    }
    if fail_fast:
        overrides["fail_fast"] = True
    parsed_paths = _parse_model_paths(model_paths)
    if parsed_paths:
        overrides["model_paths"] = parsed_paths
    config = PipelineConfig.from_file(config_path, **overrides)
    _preflight_models(config)
    result = run_batch(input_path, config, out_path, manifest_path=manifest_path)
    click.echo(
        f"{len(result.verdicts)} verdicts, {len(result.failures)} errors -> {out_path}"
    )


@cli.command("experiment")
@click.option("--spec", "spec_path", required=True, type=click.Path(dir_okay=False))
@click.option("--seed", type=int, required=True, help="Reproducibility seed (mandatory).")
@click.option("--report", "report_path", type=click.Path(dir_okay=False), default=None,
              help="Report JSON path; defaults to the spec file's 'report' key.")
def experiment_cmd(spec_path, seed, report_path):
    """Train and score the full model/scope grid from a spec file."""
    spec, data, payload = load_experiment_file(spec_path)
    report = run_experiment(spec, data, seed=seed)
    click.echo(report.render_table())
    if report_path is None:
        report_path = payload.get("report")
        if report_path is not None:
            base = Path(spec_path).parent
            report_path = report_path if Path(report_path).is_absolute() else base / report_path
    if report_path is not None:
        report.write(report_path)
        click.echo(f"report -> {report_path}")


def _exit_code(error: BaseException) -> int:
    if isinstance(error, MissingFixture):
        return 3
    if isinstance(error, (IncompatibleModel, DimensionMismatch)):
        return 4
    if isinstance(error, DegenerateLabels):
        return 5
    if isinstance(
        error, (BadHeader, BadLabel, DuplicateId, EmptyEvaluation, ParseError, OSError)
    ):
        return 2
    return 1


def main(argv: list[str] | None = None) -> int:
    """Console entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:  # --version/--help style exits
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return 1
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code or 1
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except StageFailure as failure:
        click.echo(f"error: {failure}", err=True)
        return _exit_code(failure.error)
    except (FactvoteError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return _exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
