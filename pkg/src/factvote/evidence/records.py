"""Evidence record types."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone

from factvote.queries import BuiltQuery

GOOGLE = "google"
YOUTUBE = "youtube"

MAX_TITLES = 10


def now_rfc3339() -> str:
    """Current UTC time as an RFC 3339 string (second precision)."""
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


@dataclass(frozen=True)
class EvidenceTitle:
    """One ranked result title from one platform."""

    platform: str
    rank: int
    title: str
    url: str
    fetched_at: str

    def __post_init__(self):
        if not 1 <= self.rank <= MAX_TITLES:
            raise ValueError(f"rank out of range: {self.rank}")
        if not self.title or "\n" in self.title:
            raise ValueError(f"title must be non-empty single-line: {self.title!r}")


@dataclass(frozen=True)
class EvidenceBundle:
    """Rank-ordered titles for one (query, platform) pair, at most 10."""

    query: BuiltQuery
    platform: str
    titles: tuple[EvidenceTitle, ...]

    def __post_init__(self):
        if len(self.titles) > MAX_TITLES:
            raise ValueError(f"bundle holds {len(self.titles)} titles (> {MAX_TITLES})")
        ranks = [t.rank for t in self.titles]
        if ranks != list(range(1, len(ranks) + 1)):
            raise ValueError(f"ranks must be 1..n without gaps, got {ranks}")
        for t in self.titles:
            if t.platform != self.platform:
                raise ValueError(f"title platform {t.platform!r} != bundle {self.platform!r}")

    @property
    def empty(self) -> bool:
        return not self.titles

    def __len__(self) -> int:
        return len(self.titles)
