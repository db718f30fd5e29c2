"""Evidence collection: scrape result titles per (query, platform) with
live, record, and replay modes backed by a JSON-Lines fixture store."""

from factvote.evidence.records import (
    GOOGLE,
    YOUTUBE,
    MAX_TITLES,
    EvidenceBundle,
    EvidenceTitle,
)
from factvote.evidence.fixtures import FixtureStore, fixture_key
from factvote.evidence.collect import collect, merge_bundles
from factvote.evidence.providers import (
    EvidenceProvider,
    GoogleProvider,
    ProviderConfig,
    YouTubeProvider,
    get_provider,
    register_provider,
)
from factvote.evidence.parsers import (
    parse_google_results,
    parse_page_title,
    parse_serp_links,
    parse_youtube_results,
)

__all__ = [
    "GOOGLE",
    "YOUTUBE",
    "MAX_TITLES",
    "EvidenceTitle",
    "EvidenceBundle",
    "FixtureStore",
    "fixture_key",
    "collect",
    "merge_bundles",
    "EvidenceProvider",
    "ProviderConfig",
    "GoogleProvider",
    "YouTubeProvider",
    "get_provider",
    "register_provider",
    "parse_page_title",
    "parse_google_results",
    "parse_youtube_results",
    "parse_serp_links",
]
