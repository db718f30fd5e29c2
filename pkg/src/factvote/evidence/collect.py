"""The collection entry point and bundle merging."""

from __future__ import annotations

import logging

from factvote.errors import MissingFixture
from factvote.evidence.fixtures import FixtureStore
from factvote.evidence.providers import EvidenceProvider, ProviderConfig, get_provider
from factvote.evidence.records import MAX_TITLES, EvidenceBundle, EvidenceTitle, now_rfc3339
from factvote.queries import BuiltQuery
from factvote.text.normalize import normalize_text

logger = logging.getLogger(__name__)

MODES = ("live", "replay", "record")


def collect(
    query: BuiltQuery,
    platform: str,
    mode: str = "replay",
    store: FixtureStore | None = None,
    provider: EvidenceProvider | None = None,
    provider_config: ProviderConfig | None = None,
) -> EvidenceBundle:
    """Fetch up to 10 result titles for (query, platform).

    replay -- return the stored bundle unchanged (MissingFixture if absent);
    live   -- fetch and parse, no persistence;
    record -- as live, then persist to the fixture store.

    Zero parsed titles is not an error: an empty bundle comes back and is
    logged, so callers can flag insufficient evidence.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")

    if mode == "replay":
        if store is None:
            raise ValueError("replay mode needs a fixture store")
        bundle = store.load(query, platform)
        if bundle is None:
            raise MissingFixture(query.text, platform)
        return bundle

    if provider is None:
        provider = get_provider(platform, config=provider_config)
    pairs = provider.fetch_titles(query.text)

    titles = []
    fetched_at = now_rfc3339()
    for url, raw_title in pairs:
        cleaned = normalize_text(raw_title)
        if not cleaned:
            continue
        if len(titles) >= MAX_TITLES:
            break
        titles.append(
            EvidenceTitle(
                platform=platform,
                rank=len(titles) + 1,
                title=cleaned,
                url=url,
                fetched_at=fetched_at,
            )
        )
    bundle = EvidenceBundle(query=query, platform=platform, titles=tuple(titles))
    if bundle.empty:
        logger.warning("no titles parsed for platform=%s query=%r", platform, query.text)

    if mode == "record":
        if store is None:
            raise ValueError("record mode needs a fixture store")
        store.save(bundle)
    return bundle


def merge_bundles(
    bundles: list[EvidenceBundle],
    reference_query: BuiltQuery | None = None,
    cap: int = MAX_TITLES,
) -> EvidenceBundle:
    """Concatenate same-platform bundles in order, truncate, re-rank 1..n.

    Multi-query build cases fan several bundles into the fixed per-platform
    title budget this way. ``reference_query`` labels the merged bundle
    (defaults to the first bundle's query).
    """
    if not bundles:
        raise ValueError("nothing to merge")
    platform = bundles[0].platform
    for b in bundles:
        if b.platform != platform:
            raise ValueError(f"cannot merge platforms {platform!r} and {b.platform!r}")
    merged = []
    for bundle in bundles:
        for title in bundle.titles:
            if len(merged) >= cap:
                break
            merged.append(
                EvidenceTitle(
                    platform=platform,
                    rank=len(merged) + 1,
                    title=title.title,
                    url=title.url,
                    fetched_at=title.fetched_at,
                )
            )
    return EvidenceBundle(
        query=reference_query or bundles[0].query,
        platform=platform,
        titles=tuple(merged),
    )
