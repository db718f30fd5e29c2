"""Command-line interface: subcommand flows and the exit-code contract.

Exit codes under test: 0 success, 1 usage/config, 2 unreadable or
malformed data files, 3 missing fixture in replay mode, 4 unusable model
file, 5 degenerate training data.
"""

from __future__ import annotations

import json
from types import SimpleNamespace

import numpy as np
import pytest

from factvote.cli import main
from factvote.features.csvio import read_features_csv

HEADER = (
    "claim_id,scope,fake_count,qm_count,cos_mean,sem_mean,query_polarity,"
    "senti_match_count,n_pos,n_neg,n_neu,n_retained"
)


def invoke(*args) -> int:
    return main([str(a) for a in args])


def read_jsonl(path):
    return [
        json.loads(line)
        for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip()
    ]


@pytest.fixture(scope="module")
def golden(golden_dir):
    claims = {}
    for line in (golden_dir / "claims.tsv").read_text(encoding="utf-8").splitlines()[1:]:
        cid, text, label = line.split("\t")
        claims[cid] = SimpleNamespace(text=text, label=label)
    verdicts = {
        payload["claim_id"]: payload
        for payload in (
            json.loads(line)
            for line in (golden_dir / "verdicts.golden.jsonl")
            .read_text(encoding="utf-8")
            .splitlines()
        )
    }
    return SimpleNamespace(
        dir=golden_dir,
        claims_path=golden_dir / "claims.tsv",
        fixtures=golden_dir / "fixtures",
        models={s: golden_dir / "models" / f"{s}.json" for s in ("google", "youtube", "hybrid")},
        claims=claims,
        verdicts=verdicts,
    )


@pytest.fixture(scope="module")
def chain(tmp_path_factory, golden):
    """collect -> featurize -> train artifacts shared by the read-only tests."""
    root = tmp_path_factory.mktemp("chain")
    evidence = root / "evidence.jsonl"
    assert invoke(
        "collect", "--input", golden.claims_path, "--mode", "replay",
        "--fixtures", golden.fixtures, "--out", evidence,
    ) == 0
    features = root / "features.csv"
    assert invoke(
        "featurize", "--claims", golden.claims_path, "--evidence", evidence,
        "--out", features,
    ) == 0
    hybrid = root / "hybrid.csv"
    assert invoke(
        "featurize", "--claims", golden.claims_path, "--evidence", evidence,
        "--scope", "hybrid", "--out", hybrid,
    ) == 0
    model = root / "model.json"
    assert invoke(
        "train", "--features", features, "--labels", golden.claims_path,
        "--model", "random_forest", "--seed", "7", "--scope", "google",
        "--out", model,
    ) == 0
    return SimpleNamespace(
        root=root, evidence=evidence, features=features, hybrid=hybrid, model=model
    )


class TestTopLevel:
    def test_version(self, capsys):
        assert invoke("--version") == 0
        assert "factvote" in capsys.readouterr().out

    def test_help_lists_subcommands(self, capsys):
        assert invoke("--help") == 0
        out = capsys.readouterr().out
        for name in ("collect", "featurize", "train", "predict", "evaluate",
                     "verify", "batch", "experiment"):
            assert name in out

    def test_unknown_subcommand(self):
        assert invoke("frobnicate") == 1

    def test_missing_required_option(self):
        assert invoke("collect") == 1


class TestCollect:
    def test_replay_writes_all_recorded_titles(self, chain, golden):
        lines = read_jsonl(chain.evidence)
        assert len(lines) == 176
        assert set(lines[0]) == {
            "claim_id", "query", "platform", "rank", "title", "url", "fetched_at",
        }
        seen = {line["claim_id"] for line in lines}
        assert "r10" not in seen  # both platforms recorded empty
        assert "f05" in seen  # only youtube is empty
        assert all(line["platform"] != "youtube" for line in lines if line["claim_id"] == "f05")
        assert all(line["query"].endswith("fake news") for line in lines)

    def test_ranks_are_contiguous_per_bundle(self, chain):
        by_bundle: dict[tuple, list[int]] = {}
        for line in read_jsonl(chain.evidence):
            by_bundle.setdefault((line["claim_id"], line["platform"]), []).append(line["rank"])
        for ranks in by_bundle.values():
            assert ranks == list(range(1, len(ranks) + 1))

    def test_replay_without_fixtures_is_usage_error(self, golden, tmp_path):
        assert invoke(
            "collect", "--input", golden.claims_path, "--mode", "replay",
            "--out", tmp_path / "out.jsonl",
        ) == 1

    def test_unknown_provider_is_usage_error(self, golden, tmp_path):
        assert invoke(
            "collect", "--input", golden.claims_path, "--providers", "bing",
            "--fixtures", golden.fixtures, "--out", tmp_path / "out.jsonl",
        ) == 1

    def test_missing_input_file_is_io_error(self, golden, tmp_path):
        assert invoke(
            "collect", "--input", tmp_path / "absent.tsv",
            "--fixtures", golden.fixtures, "--out", tmp_path / "out.jsonl",
        ) == 2

    def test_unrecorded_claim_is_fixture_error(self, golden, tmp_path):
        claims = tmp_path / "claims.tsv"
        claims.write_text("id\ttweet\nz1\tzebras cause head colds\n", encoding="utf-8")
        assert invoke(
            "collect", "--input", claims, "--fixtures", golden.fixtures,
            "--out", tmp_path / "out.jsonl",
        ) == 3


class TestFeaturize:
    def test_platform_csv_matches_committed_features(self, chain, golden):
        ours = read_features_csv(chain.features)
        committed = read_features_csv(golden.dir / "exp" / "features_platform.csv")
        assert ours.ids == committed.ids
        assert ours.scopes == committed.scopes
        assert np.allclose(ours.X, committed.X)

    def test_header_is_pinned(self, chain):
        first = chain.features.read_text(encoding="utf-8").splitlines()[0]
        assert first == HEADER

    def test_rows_are_scope_major(self, chain):
        table = read_features_csv(chain.features)
        assert len(table) == 40
        assert table.scopes[:20] == ["google"] * 20
        assert table.scopes[20:] == ["youtube"] * 20

    def test_hybrid_rows(self, chain, golden):
        ours = read_features_csv(chain.hybrid)
        committed = read_features_csv(golden.dir / "exp" / "features_hybrid.csv")
        assert ours.X.shape == (20, 20)
        assert ours.ids == committed.ids
        assert np.allclose(ours.X, committed.X)

    def test_malformed_evidence_is_data_error(self, golden, tmp_path):
        bad = tmp_path / "evidence.jsonl"
        bad.write_text("{not json\n", encoding="utf-8")
        assert invoke(
            "featurize", "--claims", golden.claims_path, "--evidence", bad,
            "--out", tmp_path / "out.csv",
        ) == 2

    def test_missing_claims_file_is_io_error(self, chain, tmp_path):
        assert invoke(
            "featurize", "--claims", tmp_path / "absent.tsv",
            "--evidence", chain.evidence, "--out", tmp_path / "out.csv",
        ) == 2


class TestTrain:
    def test_model_file_loads_and_predicts(self, chain):
        from factvote.learn.persistence import load_model

        model = load_model(chain.model)
        table = read_features_csv(chain.features).select_scope("google")
        assert len(model.predict(table.X)) == 20

    def test_mixed_scopes_need_scope_flag(self, chain, golden, tmp_path):
        assert invoke(
            "train", "--features", chain.features, "--labels", golden.claims_path,
            "--seed", "1", "--out", tmp_path / "m.json",
        ) == 1

    def test_unknown_model_spec_is_usage_error(self, chain, golden, tmp_path):
        assert invoke(
            "train", "--features", chain.features, "--labels", golden.claims_path,
            "--model", "perceptron", "--seed", "1", "--scope", "google",
            "--out", tmp_path / "m.json",
        ) == 1

    def test_unlabeled_claim_is_data_error(self, chain, tmp_path):
        labels = tmp_path / "labels.tsv"
        labels.write_text("id\ttweet\tlabel\nf01\tx\tfake\n", encoding="utf-8")
        assert invoke(
            "train", "--features", chain.features, "--labels", labels,
            "--seed", "1", "--scope", "google", "--out", tmp_path / "m.json",
        ) == 2

    def test_single_class_labels_exit_five(self, tmp_path):
        features = tmp_path / "features.csv"
        features.write_text(
            HEADER + "\n"
            "a1,google,0,0,0.0,0.0,0,0,0,0,0,0\n"
            "a2,google,1,0,0.5,0.1,0,0,0,0,0,1\n",
            encoding="utf-8",
        )
        labels = tmp_path / "labels.tsv"
        labels.write_text(
            "id\ttweet\tlabel\na1\tone\tfake\na2\ttwo\tfake\n", encoding="utf-8"
        )
        for spec in ("random_forest", "logistic", "gnb"):
            assert invoke(
                "train", "--features", features, "--labels", labels,
                "--model", spec, "--seed", "1", "--out", tmp_path / "m.json",
            ) == 5

    def test_bad_feature_header_is_data_error(self, golden, tmp_path):
        features = tmp_path / "features.csv"
        features.write_text("who,what\nx,y\n", encoding="utf-8")
        assert invoke(
            "train", "--features", features, "--labels", golden.claims_path,
            "--seed", "1", "--out", tmp_path / "m.json",
        ) == 2


class TestPredict:
    def test_predictions_jsonl(self, chain, tmp_path):
        out = tmp_path / "pred.jsonl"
        assert invoke(
            "predict", "--model", chain.model, "--features", chain.features,
            "--scope", "google", "--out", out,
        ) == 0
        records = read_jsonl(out)
        assert len(records) == 20
        for record in records:
            assert set(record) == {"claim_id", "scope", "label", "label_name", "proba"}
            assert record["scope"] == "google"
            assert record["label"] in (0, 1)
            assert record["label_name"] in ("real", "misleading")
            assert 0.0 <= record["proba"] <= 1.0  # forests expose a vote fraction

    def test_probaless_model_writes_null(self, chain, golden, tmp_path):
        model = tmp_path / "svm.json"
        assert invoke(
            "train", "--features", chain.features, "--labels", golden.claims_path,
            "--model", "linear_svm", "--seed", "3", "--scope", "google",
            "--out", model,
        ) == 0
        out = tmp_path / "pred.jsonl"
        assert invoke(
            "predict", "--model", model, "--features", chain.features,
            "--scope", "google", "--out", out,
        ) == 0
        assert all(record["proba"] is None for record in read_jsonl(out))

    def test_corrupt_model_file_exit_four(self, chain, tmp_path):
        bad = tmp_path / "model.json"
        bad.write_text("{broken", encoding="utf-8")
        assert invoke(
            "predict", "--model", bad, "--features", chain.features,
            "--scope", "google", "--out", tmp_path / "pred.jsonl",
        ) == 4

    def test_missing_model_file_exit_four(self, chain, tmp_path):
        assert invoke(
            "predict", "--model", tmp_path / "absent.json",
            "--features", chain.features, "--scope", "google",
            "--out", tmp_path / "pred.jsonl",
        ) == 4

    def test_dimension_mismatch_exit_four(self, chain, tmp_path):
        # google-scope model is 10-wide; hybrid rows are 20-wide
        assert invoke(
            "predict", "--model", chain.model, "--features", chain.hybrid,
            "--out", tmp_path / "pred.jsonl",
        ) == 4


@pytest.fixture(scope="module")
def predictions(chain, tmp_path_factory):
    out = tmp_path_factory.mktemp("eval") / "pred.jsonl"
    assert invoke(
        "predict", "--model", chain.model, "--features", chain.features,
        "--scope", "google", "--out", out,
    ) == 0
    return out


class TestEvaluate:
    def test_report_shape(self, predictions, golden, tmp_path, capsys):
        report = tmp_path / "report.json"
        assert invoke(
            "evaluate", "--pred", predictions, "--gold", golden.claims_path,
            "--report", report,
        ) == 0
        payload = json.loads(report.read_text(encoding="utf-8"))
        assert set(payload) == {"confusion", "metrics", "headline"}
        cm = payload["confusion"]
        assert cm["tp"] + cm["fp"] + cm["fn"] + cm["tn"] == 20
        assert payload["headline"]["averaging"] == "weighted"
        assert payload["headline"]["accuracy"] == payload["metrics"]["accuracy"]
        assert "n=20" in capsys.readouterr().out

    def test_averaging_choice(self, predictions, golden, tmp_path):
        report = tmp_path / "report.json"
        assert invoke(
            "evaluate", "--pred", predictions, "--gold", golden.claims_path,
            "--averaging", "macro", "--report", report,
        ) == 0
        payload = json.loads(report.read_text(encoding="utf-8"))
        assert payload["headline"]["averaging"] == "macro"
        assert payload["headline"]["f1"] == payload["metrics"]["macro"]["f1"]

    def test_unknown_claim_in_predictions(self, golden, tmp_path):
        pred = tmp_path / "pred.jsonl"
        pred.write_text('{"claim_id":"ghost","label":1}\n', encoding="utf-8")
        assert invoke(
            "evaluate", "--pred", pred, "--gold", golden.claims_path,
            "--report", tmp_path / "r.json",
        ) == 2

    def test_empty_predictions(self, golden, tmp_path):
        pred = tmp_path / "pred.jsonl"
        pred.write_text("", encoding="utf-8")
        assert invoke(
            "evaluate", "--pred", pred, "--gold", golden.claims_path,
            "--report", tmp_path / "r.json",
        ) == 2

    def test_malformed_prediction_line(self, golden, tmp_path):
        pred = tmp_path / "pred.jsonl"
        pred.write_text('{"claim_id":"f01"}\n', encoding="utf-8")
        assert invoke(
            "evaluate", "--pred", pred, "--gold", golden.claims_path,
            "--report", tmp_path / "r.json",
        ) == 2

    def test_bad_gold_label_value(self, predictions, tmp_path):
        gold = tmp_path / "gold.tsv"
        gold.write_text("id\ttweet\tlabel\nf01\tx\tmaybe\n", encoding="utf-8")
        assert invoke(
            "evaluate", "--pred", predictions, "--gold", gold,
            "--report", tmp_path / "r.json",
        ) == 2


def model_flags(golden):
    flags = []
    for scope, path in golden.models.items():
        flags += ["--model-path", f"{scope}={path}"]
    return flags


class TestVerify:
    def test_verdict_matches_golden(self, golden, capsys):
        claim = golden.claims["f01"]
        assert invoke(
            "verify", claim.text, "--fixtures", golden.fixtures,
            "--claim-id", "f01", *model_flags(golden),
        ) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == golden.verdicts["f01"]
        assert payload["final"] == "misleading"

    def test_no_trail_flag(self, golden, capsys):
        claim = golden.claims["r01"]
        assert invoke(
            "verify", claim.text, "--fixtures", golden.fixtures,
            "--no-trail", *model_flags(golden),
        ) == 0
        payload = json.loads(capsys.readouterr().out)
        assert "trail" not in payload
        assert payload["final"] == "real"

    def test_config_file_with_flag_override(self, golden, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(
            json.dumps(
                {
                    "mode": "replay",
                    "fixtures_dir": str(golden.fixtures),
                    "threshold": 0.9,
                    "model_paths": {s: str(p) for s, p in golden.models.items()},
                }
            ),
            encoding="utf-8",
        )
        claim = golden.claims["f01"]
        assert invoke(
            "verify", claim.text, "--config", config, "--claim-id", "f01",
            "--threshold", "0.2",
        ) == 0
        assert json.loads(capsys.readouterr().out) == golden.verdicts["f01"]

    def test_unrecorded_claim_exit_three(self, golden):
        assert invoke(
            "verify", "zebras cause head colds", "--fixtures", golden.fixtures,
            *model_flags(golden),
        ) == 3

    def test_corrupt_model_preflight_exit_four(self, golden, tmp_path):
        bad = tmp_path / "model.json"
        bad.write_text("[1,2,3]", encoding="utf-8")
        assert invoke(
            "verify", golden.claims["f01"].text, "--fixtures", golden.fixtures,
            "--model-path", f"google={bad}",
        ) == 4

    def test_bad_model_path_syntax(self, golden):
        assert invoke(
            "verify", "any claim", "--fixtures", golden.fixtures,
            "--model-path", "googlemodel.json",
        ) == 1

    def test_bad_threshold_exit_one(self, golden):
        assert invoke(
            "verify", "any claim", "--fixtures", golden.fixtures,
            "--threshold", "7.5", *model_flags(golden),
        ) == 1


class TestBatch:
    def test_reproduces_golden_verdicts_byte_for_byte(self, golden, tmp_path, capsys):
        out = tmp_path / "verdicts.jsonl"
        assert invoke(
            "batch", "--input", golden.claims_path, "--fixtures", golden.fixtures,
            "--out", out, *model_flags(golden),
        ) == 0
        assert out.read_bytes() == (golden.dir / "verdicts.golden.jsonl").read_bytes()
        assert (tmp_path / "verdicts.manifest.json").exists()
        assert "20 verdicts, 0 errors" in capsys.readouterr().out

    def test_inline_errors_and_manifest_counts(self, golden, tmp_path):
        claims = tmp_path / "claims.tsv"
        claims.write_text(
            "id\ttweet\n"
            f"f01\t{golden.claims['f01'].text}\n"
            "z9\tzebras cause head colds\n",
            encoding="utf-8",
        )
        out = tmp_path / "verdicts.jsonl"
        manifest_path = tmp_path / "manifest.json"
        assert invoke(
            "batch", "--input", claims, "--fixtures", golden.fixtures,
            "--out", out, "--manifest", manifest_path, *model_flags(golden),
        ) == 0
        lines = read_jsonl(out)
        assert lines[0]["claim_id"] == "f01"
        assert lines[1]["error"]["type"] == "MissingFixture"
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
        assert manifest["counts"] == {"claims": 2, "verdicts": 1, "errors": 1}

    def test_fail_fast_exit_three(self, golden, tmp_path):
        claims = tmp_path / "claims.tsv"
        claims.write_text("id\ttweet\nz9\tzebras cause head colds\n", encoding="utf-8")
        assert invoke(
            "batch", "--input", claims, "--fixtures", golden.fixtures,
            "--fail-fast", "--out", tmp_path / "out.jsonl", *model_flags(golden),
        ) == 3


class TestExperiment:
    def test_runs_grid_and_writes_report(self, golden, tmp_path, capsys):
        report_a = tmp_path / "a.json"
        report_b = tmp_path / "b.json"
        spec = golden.dir / "exp" / "spec.json"
        assert invoke("experiment", "--spec", spec, "--seed", "7", "--report", report_a) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0].startswith("Model")
        assert "Random Forest" in out
        assert invoke("experiment", "--spec", spec, "--seed", "7", "--report", report_b) == 0
        assert report_a.read_bytes() == report_b.read_bytes()
        payload = json.loads(report_a.read_text(encoding="utf-8"))
        assert payload["seed"] == 7
        assert len(payload["rows"]) == 9

    def test_report_path_from_spec_payload(self, golden, tmp_path):
        exp_dir = golden.dir / "exp"
        spec = json.loads((exp_dir / "spec.json").read_text(encoding="utf-8"))
        spec["models"] = ["logistic"]
        spec["train_features"] = {
            scope: str((exp_dir / path).resolve())
            for scope, path in spec["train_features"].items()
        }
        spec["eval_features"] = {
            scope: str((exp_dir / path).resolve())
            for scope, path in spec["eval_features"].items()
        }
        spec["train_labels"] = str((exp_dir / spec["train_labels"]).resolve())
        spec["eval_labels"] = str((exp_dir / spec["eval_labels"]).resolve())
        spec["report"] = "grid.json"
        spec_path = tmp_path / "spec.json"
        spec_path.write_text(json.dumps(spec), encoding="utf-8")
        assert invoke("experiment", "--spec", spec_path, "--seed", "1") == 0
        assert (tmp_path / "grid.json").exists()

    def test_spec_missing_key_is_data_error(self, tmp_path):
        spec_path = tmp_path / "spec.json"
        spec_path.write_text(json.dumps({"scopes": ["google"]}), encoding="utf-8")
        assert invoke("experiment", "--spec", spec_path, "--seed", "1") == 2

    def test_missing_spec_file_is_data_error(self, tmp_path):
        assert invoke("experiment", "--spec", tmp_path / "absent.json", "--seed", "1") == 2
