"""Markup parsing for result pages, built on the stdlib HTML parser.

All extraction is best-effort: malformed markup degrades to fewer results,
never to an exception.
"""

from __future__ import annotations

from html.parser import HTMLParser
from urllib.parse import parse_qs, urlparse

from factvote.text.normalize import normalize_text

# Hosts that appear as navigation links on result pages, not as hits.
_SKIP_HOSTS = (
    "google.", "gstatic.", "googleapis.", "youtube.com/results",
    "webcache.googleusercontent", "accounts.", "policies.", "support.",
    "maps.google",
)


class _TitleCollector(HTMLParser):
    def __init__(self):
        super().__init__()
        self._in_title = False
        self.parts: list[str] = []
        self.done = False

    def handle_starttag(self, tag, attrs):
        if tag == "title" and not self.done:
            self._in_title = True

    def handle_endtag(self, tag):
        if tag == "title" and self._in_title:
            self._in_title = False
            self.done = True

    def handle_data(self, data):
        if self._in_title:
            self.parts.append(data)


def parse_page_title(html: str) -> str | None:
    """Text of the document's first <title>, entity-decoded and normalized.

    None when the page has no usable title.
    """
    collector = _TitleCollector()
    try:
        collector.feed(html)
        collector.close()
    except Exception:
        pass  # keep whatever was collected before the parser choked
    raw = " ".join(collector.parts)
    cleaned = normalize_text(raw)
    return cleaned or None


def parse_google_results(html: str, url: str = "") -> list[tuple[str, str]]:
    """(url, title) for one fetched result page; empty when titleless."""
    title = parse_page_title(html)
    if title is None:
        return []
    return [(url, title)]


class _AnchorCollector(HTMLParser):
    """Collects anchors; optionally only those with a specific element id."""

    def __init__(self, want_id: str | None = None):
        super().__init__()
        self.want_id = want_id
        self.anchors: list[dict] = []
        self._open: dict | None = None

    def handle_starttag(self, tag, attrs):
        if tag != "a":
            return
        attrs = dict(attrs)
        if self.want_id is not None and attrs.get("id") != self.want_id:
            return
        self._open = {
            "href": attrs.get("href") or "",
            "title": attrs.get("title"),
            "text": [],
        }

    def handle_endtag(self, tag):
        if tag == "a" and self._open is not None:
            self.anchors.append(self._open)
            self._open = None

    def handle_data(self, data):
        if self._open is not None:
            self._open["text"].append(data)

    def close(self):
        super().close()
        if self._open is not None:  # unclosed anchor at EOF
            self.anchors.append(self._open)
            self._open = None


def parse_youtube_results(html: str) -> list[tuple[str, str]]:
    """(href, title) pairs from anchors with id="video-title", in order.

    The title attribute wins; anchor text is the fallback. Anchors missing
    an href keep their title with an empty url.
    """
    collector = _AnchorCollector(want_id="video-title")
    try:
        collector.feed(html)
        collector.close()
    except Exception:
        pass
    results = []
    for anchor in collector.anchors:
        title = anchor["title"]
        if title is None:
            title = " ".join(anchor["text"])
        title = " ".join(title.split())
        if not title:
            continue
        results.append((anchor["href"], title))
    return results


def parse_serp_links(html: str, limit: int = 25) -> list[str]:
    """Outbound hit URLs from a search result page, document order, deduped.

    Handles both direct links and the ``/url?q=`` redirect form.
    """
    collector = _AnchorCollector()
    try:
        collector.feed(html)
        collector.close()
    except Exception:
        pass
    seen = set()
    links: list[str] = []
    for anchor in collector.anchors:
        href = anchor["href"]
        if href.startswith("/url?"):
            target = parse_qs(urlparse(href).query).get("q", [""])[0]
        else:
            target = href
        if not target.startswith(("http://", "https://")):
            continue
        if any(host in target for host in _SKIP_HOSTS):
            continue
        if target in seen:
            continue
        seen.add(target)
        links.append(target)
        if len(links) >= limit:
            break
    return links
