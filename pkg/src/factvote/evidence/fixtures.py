"""Record/replay fixture store for evidence bundles.

One JSON Lines file per (platform, canonical query text), named by the
SHA-256 of ``"platform\\n<query text>"``. Reads are pure; writes are
serialized and atomic so concurrent readers never see partial files.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
from pathlib import Path

from factvote.evidence.records import EvidenceBundle, EvidenceTitle
from factvote.queries import BuiltQuery

_FIELDS = ("query", "platform", "rank", "title", "url", "fetched_at")


def fixture_key(query_text: str, platform: str) -> str:
    digest = hashlib.sha256(f"{platform}\n{query_text}".encode("utf-8")).hexdigest()
    return f"{digest}.jsonl"


class FixtureStore:
    def __init__(self, root):
        self.root = Path(root)
        self._write_lock = threading.Lock()

    def path_for(self, query_text: str, platform: str) -> Path:
        return self.root / fixture_key(query_text, platform)

    def exists(self, query_text: str, platform: str) -> bool:
        return self.path_for(query_text, platform).is_file()

    def load(self, query: BuiltQuery, platform: str) -> EvidenceBundle | None:
        """Stored bundle for (query, platform), or None when unrecorded.

        An existing file with zero records replays as an empty bundle;
        that is distinct from a missing fixture.
        """
        path = self.path_for(query.text, platform)
        if not path.is_file():
            return None
        titles = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                titles.append(
                    EvidenceTitle(
                        platform=rec["platform"],
                        rank=rec["rank"],
                        title=rec["title"],
                        url=rec["url"],
                        fetched_at=rec["fetched_at"],
                    )
                )
        titles.sort(key=lambda t: t.rank)
        return EvidenceBundle(query=query, platform=platform, titles=tuple(titles))

    def save(self, bundle: EvidenceBundle) -> Path:
        """Persist a bundle atomically (write-to-temp then rename)."""
        path = self.path_for(bundle.query.text, bundle.platform)
        lines = []
        for t in bundle.titles:
            rec = {
                "query": bundle.query.text,
                "platform": t.platform,
                "rank": t.rank,
                "title": t.title,
                "url": t.url,
                "fetched_at": t.fetched_at,
            }
            lines.append(json.dumps(rec, separators=(",", ":")))
        payload = "".join(line + "\n" for line in lines)
        with self._write_lock:
            self.root.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(payload, encoding="utf-8")
            os.replace(tmp, path)
        return path
