"""Platform providers: direct HTTP fetch + markup parsing.

Each provider turns a query string into ranked (url, title) pairs. A
polite delay separates successive requests to the same provider; the
default user agent names this tool honestly. HTTP proxies come from the
standard environment variables via ``requests``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from urllib.parse import quote_plus, urljoin

import requests

from factvote.errors import ProviderUnavailable
from factvote.evidence.parsers import parse_page_title, parse_serp_links, parse_youtube_results
from factvote.evidence.records import GOOGLE, MAX_TITLES, YOUTUBE

_VERSION = "0.1.0"


@dataclass
class ProviderConfig:
    timeout_ms: int = 10000
    retries: int = 2
    pause_s: float = 2.0
    user_agent: str = field(default=f"factvote-evidence-collector/{_VERSION}")

    @property
    def timeout_s(self) -> float:
        return self.timeout_ms / 1000.0


class EvidenceProvider:
    """Base class; subclasses set ``name`` and implement ``fetch_titles``."""

    name = ""

    def __init__(self, config: ProviderConfig | None = None, session=None):
        self.config = config or ProviderConfig()
        self.session = session or requests.Session()

    def fetch_titles(self, query_text: str, limit: int = MAX_TITLES) -> list[tuple[str, str]]:
        raise NotImplementedError

    # -- shared plumbing ---------------------------------------------------

    def _get(self, url: str) -> str:
        """GET with retries; raises ProviderUnavailable when exhausted."""
        headers = {"User-Agent": self.config.user_agent}
        last_error: Exception | None = None
        for attempt in range(self.config.retries + 1):
            if attempt:
                time.sleep(self.config.pause_s)
            try:
                response = self.session.get(url, headers=headers, timeout=self.config.timeout_s)
                response.raise_for_status()
                return response.text
            except requests.RequestException as exc:
                last_error = exc
        raise ProviderUnavailable(f"{self.name}: GET {url} failed: {last_error}")

    def _pause(self):
        time.sleep(self.config.pause_s)


class GoogleProvider(EvidenceProvider):
    """Web search: fetch the result page, follow each hit, read its <title>."""

    name = GOOGLE
    search_url = "https://www.google.com/search?q={query}&num={num}"

    def fetch_titles(self, query_text: str, limit: int = MAX_TITLES) -> list[tuple[str, str]]:
        serp_html = self._get(self.search_url.format(query=quote_plus(query_text), num=limit))
        titles: list[tuple[str, str]] = []
        for url in parse_serp_links(serp_html):
            if len(titles) >= limit:
                break
            self._pause()
            try:
                page_html = self._get(url)
            except ProviderUnavailable:
                continue  # a dead hit is skipped, not fatal
            title = parse_page_title(page_html)
            if title is not None:
                titles.append((url, title))
        return titles


class YouTubeProvider(EvidenceProvider):
    """Video search: one results page, anchors with id="video-title"."""

    name = YOUTUBE
    results_url = "https://www.youtube.com/results?search_query={query}"
    base_url = "https://www.youtube.com/"

    def fetch_titles(self, query_text: str, limit: int = MAX_TITLES) -> list[tuple[str, str]]:
        html = self._get(self.results_url.format(query=quote_plus(query_text)))
        pairs = parse_youtube_results(html)
        return [
            (urljoin(self.base_url, href) if href else "", title)
            for href, title in pairs[:limit]
        ]


_REGISTRY: dict[str, type[EvidenceProvider]] = {
    GOOGLE: GoogleProvider,
    YOUTUBE: YouTubeProvider,
}


def register_provider(name: str, provider_cls: type[EvidenceProvider]) -> None:
    """Add or replace a platform provider (open enumeration)."""
    _REGISTRY[name] = provider_cls


def get_provider(name: str, config: ProviderConfig | None = None,
                 session=None) -> EvidenceProvider:
    try:
        cls = _REGISTRY[name]
    except KeyError:
        raise ProviderUnavailable(f"no provider registered for platform {name!r}") from None
    return cls(config=config, session=session)
