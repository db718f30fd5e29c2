"""Regenerate the committed golden corpus under tests/data/golden.

Produces a 20-claim labelled corpus, recorded evidence fixtures for both
platforms, per-scope trained models, the byte-for-byte golden verdict file,
and an experiment bundle. Every timestamp and seed is pinned, so reruns
rewrite identical bytes.

Run from the repository root:

    python3 scripts/make_goldens.py
"""

from __future__ import annotations

import json
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

import numpy as np

from factvote.evaluation.dataset import labels_by_id, load_dataset
from factvote.evidence.fixtures import FixtureStore
from factvote.evidence.records import GOOGLE, YOUTUBE, EvidenceBundle, EvidenceTitle
from factvote.features.csvio import write_features_csv
from factvote.features.extract import aggregate, hybrid_concat
from factvote.learn.persistence import save_model
from factvote.learn.train import parse_model_spec, train_model
from factvote.pipeline.config import PipelineConfig, Resources
from factvote.pipeline.run import read_claims, run_batch
from factvote.queries import BuildStrategy, build_queries

GOLDEN = REPO / "tests" / "data" / "golden"
FETCHED_AT = "2024-01-01T00:00:00Z"
SEED = 7
THRESHOLD = 0.2
MODEL_SPEC = "random_forest"

# 20 claims, 10 misleading / 10 real. Evidence titles echo how search
# results for debunked claims tend to look: fact-check phrasing, question
# headlines, hoax vocabulary. Real claims draw straight news echoes.
CLAIMS: list[tuple[str, str, str]] = [
    ("f01", "5g towers spread coronavirus", "fake"),
    ("f02", "drinking bleach cures covid 19", "fake"),
    ("f03", "garlic soup cures coronavirus overnight", "fake"),
    ("f04", "covid 19 vaccines contain microchips", "fake"),
    ("f05", "holding your breath detects coronavirus infection", "fake"),
    ("f06", "house flies transmit covid 19 to humans", "fake"),
    ("f07", "hot weather alone stops coronavirus spread", "fake"),
    ("f08", "drinking cow urine protects against covid 19", "fake"),
    ("f09", "hand dryers kill the coronavirus in seconds", "fake"),
    ("f10", "covid 19 only affects elderly people", "fake"),
    ("r01", "washing hands helps prevent the spread of covid 19", "real"),
    ("r02", "vaccines reduce severe illness from covid 19", "real"),
    ("r03", "masks lower transmission of covid 19 indoors", "real"),
    ("r04", "covid 19 spreads through respiratory droplets", "real"),
    ("r05", "fever and cough are common covid 19 symptoms", "real"),
    ("r06", "physical distancing slows coronavirus transmission", "real"),
    ("r07", "covid 19 can spread before symptoms appear", "real"),
    ("r08", "ventilation reduces indoor covid 19 risk", "real"),
    ("r09", "older adults face higher risk of severe covid 19", "real"),
    ("r10", "quarantine after exposure limits covid 19 spread", "real"),
]

TITLES: dict[str, list[str]] = {
    "f01": [
        "fact check 5g towers do not spread coronavirus",
        "is it true that 5g towers spread coronavirus ?",
        "5g coronavirus claim is fake news say experts",
        "no evidence 5g spreads covid hoax debunked",
        "the 5g conspiracy theory explained",
        "engineers dismiss 5g virus link",
    ],
    "f02": [
        "drinking bleach will not cure covid 19 doctors warn",
        "bleach cure claim labelled fake news",
        "can bleach cure covid 19 ? the myth debunked",
        "poison control warns against bleach miracle cure hoax",
        "false bleach remedy spreads online",
    ],
    "f03": [
        "garlic soup does not cure coronavirus who says",
        "garlic cure for coronavirus is a hoax",
        "does garlic cure coronavirus ? fact check says no",
        "viral garlic remedy post is misleading",
        "no food cures covid 19 experts say",
    ],
    "f04": [
        "covid 19 vaccines do not contain microchips",
        "microchip vaccine claim is fake news",
        "are there microchips in covid vaccines ? no",
        "vaccine microchip conspiracy debunked again",
        "fact check the microchip rumour",
        "doctors reject vaccine microchip myth",
    ],
    "f05": [
        "breath holding test for coronavirus is a myth",
        "can holding your breath detect covid 19 ? experts say no",
        "fake self check for coronavirus circulates online",
        "who debunks breath holding coronavirus test",
    ],
    "f06": [
        "no proof house flies transmit covid 19",
        "can flies spread coronavirus ? unlikely say scientists",
        "fly transmission claim rated false",
        "who says flies do not spread covid 19",
        "insect covid rumour is fake news",
    ],
    "f07": [
        "hot weather alone does not stop coronavirus",
        "summer heat will not end the pandemic experts warn",
        "does hot weather kill coronavirus ? fact check",
        "heat myth about covid 19 debunked",
    ],
    "f08": [
        "cow urine does not protect against covid 19 doctors say",
        "cow urine remedy labelled a hoax",
        "does cow urine cure coronavirus ? no evidence",
        "misleading cow urine claim spreads on social media",
        "health agency warns against fake covid remedies",
    ],
    "f09": [
        "hand dryers do not kill the coronavirus",
        "who hand dryers are not effective against covid 19",
        "can a hand dryer kill coronavirus ? myth busted",
        "fake prevention tips include hand dryers",
    ],
    "f10": [
        "covid 19 affects all age groups not only elderly",
        "young people also face covid 19 risk who warns",
        "is covid 19 only a disease of the old ? no",
        "claim that covid only hits elderly rated false",
        "misleading age claim about covid debunked",
    ],
    "r01": [
        "washing hands helps prevent the spread of covid 19",
        "cdc repeats advice wash hands to stop covid 19",
        "hand washing remains key defence against covid 19",
        "why soap destroys the coronavirus",
        "hand hygiene cuts infection risk studies show",
    ],
    "r02": [
        "vaccines reduce severe illness from covid 19 study finds",
        "new data show vaccines cut severe covid 19 illness",
        "covid 19 vaccines keep reducing severe outcomes",
        "vaccination lowers risk of severe covid 19",
        "large trial confirms vaccine protection",
    ],
    "r03": [
        "masks lower transmission of covid 19 indoors research shows",
        "indoor mask use cuts covid 19 transmission",
        "study masks reduce covid 19 spread in closed rooms",
        "masks remain effective against indoor spread",
    ],
    "r04": [
        "covid 19 spreads through respiratory droplets who confirms",
        "droplet transmission drives covid 19 spread",
        "how respiratory droplets carry the coronavirus",
        "scientists detail droplet spread of covid 19",
        "droplets remain main route of covid 19 infection",
    ],
    "r05": [
        "fever and cough are common covid 19 symptoms doctors say",
        "most covid 19 cases start with fever and cough",
        "recognising common covid 19 symptoms",
        "fever cough and fatigue top covid 19 symptom list",
    ],
    "r06": [
        "physical distancing slows coronavirus transmission studies show",
        "distancing measures cut covid 19 case growth",
        "how keeping distance reduces coronavirus spread",
        "evidence backs physical distancing against covid 19",
        "distancing remains effective public health tool",
    ],
    "r07": [
        "covid 19 can spread before symptoms appear researchers find",
        "presymptomatic transmission of covid 19 documented",
        "people can pass covid 19 before feeling sick",
        "early spread of coronavirus precedes symptoms",
    ],
    "r08": [
        "ventilation reduces indoor covid 19 risk engineers say",
        "fresh air lowers covid 19 transmission indoors",
        "improving ventilation cuts coronavirus exposure",
        "open windows reduce indoor covid 19 spread",
        "air flow matters for covid 19 prevention",
    ],
    "r09": [
        "older adults face higher risk of severe covid 19 data show",
        "age remains strongest risk factor for severe covid 19",
        "elderly patients hit hardest by covid 19",
        "risk of severe covid 19 rises sharply with age",
    ],
    "r10": [
        "quarantine after exposure limits covid 19 spread health agency says",
        "quarantine rules curb onward covid 19 transmission",
        "isolating contacts slows coronavirus outbreaks",
        "exposure quarantine remains core covid 19 control",
        "why quarantine stops covid 19 chains",
    ],
}

# One claim per platform replays an intentionally empty result list; r10 has
# no results anywhere, which must surface as insufficient evidence.
EMPTY = {("f05", YOUTUBE), ("r10", GOOGLE), ("r10", YOUTUBE)}


def seed_fixtures(store: FixtureStore, resources: Resources) -> None:
    from factvote.text.normalize import normalize_text

    strategy = BuildStrategy.parse("1")
    for claim in read_claims(GOLDEN / "claims.tsv"):
        query = build_queries(claim, strategy, resources.stopwords, tagger=resources.tagger)[0]
        for platform in (GOOGLE, YOUTUBE):
            base = TITLES[claim.id]
            raw = [] if (claim.id, platform) in EMPTY else (
                base if platform == GOOGLE else list(reversed(base))
            )
            titles = tuple(
                EvidenceTitle(
                    platform=platform,
                    rank=i + 1,
                    title=normalize_text(t),
                    url=f"https://example.com/{claim.id}/{platform}/{i + 1}",
                    fetched_at=FETCHED_AT,
                )
                for i, t in enumerate(raw)
            )
            store.save(EvidenceBundle(query=query, platform=platform, titles=titles))


def featurize_all(store: FixtureStore, resources: Resources):
    strategy = BuildStrategy.parse("1")
    platform_rows, hybrid_rows = [], []
    claims = read_claims(GOLDEN / "claims.tsv")
    per_claim = {}
    for claim in claims:
        query = build_queries(claim, strategy, resources.stopwords, tagger=resources.tagger)[0]
        scoped = {}
        for platform in (GOOGLE, YOUTUBE):
            bundle = store.load(query, platform)
            scoped[platform] = aggregate(
                query,
                bundle,
                threshold=THRESHOLD,
                corpus=resources.corpus,
                lexicon=resources.sentiment,
                db=resources.db,
                stopwords=resources.stopwords,
                tagger=resources.tagger,
            )
        per_claim[claim.id] = scoped
        hybrid_rows.append(hybrid_concat(scoped[GOOGLE], scoped[YOUTUBE]))
    for platform in (GOOGLE, YOUTUBE):
        platform_rows.extend(per_claim[c.id][platform] for c in claims)
    return platform_rows, hybrid_rows


def train_models(platform_rows, hybrid_rows) -> dict[str, Path]:
    labels = labels_by_id(load_dataset(GOLDEN / "claims.tsv"))
    model_dir = GOLDEN / "models"
    model_dir.mkdir(parents=True, exist_ok=True)
    paths = {}
    for scope, rows in (
        (GOOGLE, [r for r in platform_rows if r.scope == GOOGLE]),
        (YOUTUBE, [r for r in platform_rows if r.scope == YOUTUBE]),
        ("hybrid", hybrid_rows),
    ):
        X = np.asarray([r.to_vector() for r in rows], dtype=np.float64)
        y = np.asarray([labels[r.claim_id] for r in rows], dtype=np.int64)
        model = train_model(X, y, parse_model_spec(MODEL_SPEC, seed=SEED))
        path = model_dir / f"{scope}.json"
        save_model(model, path)
        paths[scope] = path
    return paths


def main() -> None:
    if GOLDEN.exists():
        shutil.rmtree(GOLDEN)
    GOLDEN.mkdir(parents=True)
    (GOLDEN / "claims.tsv").write_text(
        "id\ttweet\tlabel\n" + "".join(f"{i}\t{t}\t{l}\n" for i, t, l in CLAIMS),
        encoding="utf-8",
    )

    resources = Resources.load()
    store = FixtureStore(GOLDEN / "fixtures")
    seed_fixtures(store, resources)

    platform_rows, hybrid_rows = featurize_all(store, resources)
    (GOLDEN / "exp").mkdir(parents=True, exist_ok=True)
    write_features_csv(GOLDEN / "exp" / "features_platform.csv", platform_rows)
    write_features_csv(GOLDEN / "exp" / "features_hybrid.csv", hybrid_rows)
    model_paths = train_models(platform_rows, hybrid_rows)

    config = PipelineConfig(
        mode="replay",
        fixtures_dir=str(GOLDEN / "fixtures"),
        model_paths={k: str(v) for k, v in model_paths.items()},
        threshold=THRESHOLD,
        seed=SEED,
    )
    with tempfile.TemporaryDirectory() as tmp:
        out_a = Path(tmp) / "a.jsonl"
        out_b = Path(tmp) / "b.jsonl"
        run_batch(GOLDEN / "claims.tsv", config, out_a, manifest_path=Path(tmp) / "a.manifest.json")
        run_batch(GOLDEN / "claims.tsv", config, out_b, manifest_path=Path(tmp) / "b.manifest.json")
        if out_a.read_bytes() != out_b.read_bytes():
            raise SystemExit("verdicts are not deterministic; refusing to write golden")
        shutil.copy(out_a, GOLDEN / "verdicts.golden.jsonl")

    spec = {
        "scopes": ["google", "youtube", "hybrid"],
        "models": [
            {"name": "Random Forest", "spec": "random_forest"},
            {"name": "Logistic Regression", "spec": "logistic"},
            {"name": "Voting (RF+LR+KNN)", "spec": "vote:random_forest+logistic+knn"},
        ],
        "averaging": "weighted",
        "train_features": {
            "google": "features_platform.csv",
            "youtube": "features_platform.csv",
            "hybrid": "features_hybrid.csv",
        },
        "eval_features": {
            "google": "features_platform.csv",
            "youtube": "features_platform.csv",
            "hybrid": "features_hybrid.csv",
        },
        "train_labels": "../claims.tsv",
        "eval_labels": "../claims.tsv",
    }
    (GOLDEN / "exp" / "spec.json").write_text(
        json.dumps(spec, indent=2) + "\n", encoding="utf-8"
    )

    verdicts = (GOLDEN / "verdicts.golden.jsonl").read_text().strip().splitlines()
    finals = [json.loads(line).get("final") for line in verdicts]
    gold = {i: ("misleading" if l == "fake" else "real") for i, _, l in CLAIMS}
    agree = sum(
        1
        for line in verdicts
        for rec in [json.loads(line)]
        if "final" in rec and rec["final"] == gold[rec["claim_id"]]
    )
    print(f"golden corpus written to {GOLDEN}")
    print(f"  verdict lines: {len(verdicts)}  (agree with gold: {agree})")
    print(f"  finals: {finals}")


if __name__ == "__main__":
    main()
