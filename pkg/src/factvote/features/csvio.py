"""Feature matrix CSV reading and writing.

Two fixed layouts: per-platform rows carry the 10 feature columns once;
hybrid rows carry a g_-prefixed Google block followed by a y_-prefixed
YouTube block. Headers are exact-match contracts.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from factvote.errors import BadHeader, DuplicateId, ParseError
from factvote.features.extract import FEATURE_COLUMNS, ClaimFeatures, HybridFeatures

PLATFORM_HEADER = ["claim_id", "scope"] + list(FEATURE_COLUMNS)
HYBRID_HEADER = (
    ["claim_id", "scope"]
    + [f"g_{c}" for c in FEATURE_COLUMNS]
    + [f"y_{c}" for c in FEATURE_COLUMNS]
)

_INT_COLUMNS = {
    "fake_count",
    "qm_count",
    "query_polarity",
    "senti_match_count",
    "n_pos",
    "n_neg",
    "n_neu",
    "n_retained",
}


def _format(column: str, value: float) -> str:
    base = column.split("_", 1)[1] if column[:2] in ("g_", "y_") else column
    if base in _INT_COLUMNS:
        return str(int(value))
    return str(float(value))


@dataclass
class FeatureTable:
    """Parsed feature matrix plus the row identity columns."""

    ids: list[str]
    scopes: list[str]
    columns: list[str]
    X: np.ndarray

    def __len__(self) -> int:
        return len(self.ids)

    def select_scope(self, scope: str) -> "FeatureTable":
        keep = [i for i, s in enumerate(self.scopes) if s == scope]
        return FeatureTable(
            ids=[self.ids[i] for i in keep],
            scopes=[self.scopes[i] for i in keep],
            columns=self.columns,
            X=self.X[keep] if len(self.X) else self.X,
        )

    def vector_for(self, claim_id: str) -> np.ndarray | None:
        for i, cid in enumerate(self.ids):
            if cid == claim_id:
                return self.X[i]
        return None


def write_features_csv(
    path: str | Path, rows: Sequence[ClaimFeatures | HybridFeatures]
) -> None:
    if not rows:
        raise ValueError("no feature rows to write")
    hybrid = isinstance(rows[0], HybridFeatures)
    for row in rows:
        if isinstance(row, HybridFeatures) != hybrid:
            raise ValueError("cannot mix hybrid and per-platform rows in one file")
    header = HYBRID_HEADER if hybrid else PLATFORM_HEADER
    columns = header[2:]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            vector = row.to_vector()
            writer.writerow(
                [row.claim_id, row.scope]
                + [_format(col, val) for col, val in zip(columns, vector)]
            )


def read_features_csv(path: str | Path) -> FeatureTable:
    path = Path(path)
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise BadHeader(f"{path}: empty file") from None
        if header == PLATFORM_HEADER:
            columns = PLATFORM_HEADER[2:]
        elif header == HYBRID_HEADER:
            columns = HYBRID_HEADER[2:]
        else:
            raise BadHeader(f"{path}: unrecognized feature header {header!r}")

        ids: list[str] = []
        scopes: list[str] = []
        matrix: list[list[float]] = []
        seen: set[tuple[str, str]] = set()
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(columns) + 2:
                raise ParseError(
                    f"{path}:{line_no}: expected {len(columns) + 2} fields, got {len(row)}"
                )
            key = (row[0], row[1])
            if key in seen:
                raise DuplicateId(f"{path}:{line_no}: duplicate row for {key!r}")
            seen.add(key)
            try:
                values = [float(v) for v in row[2:]]
            except ValueError as exc:
                raise ParseError(f"{path}:{line_no}: {exc}") from None
            ids.append(row[0])
            scopes.append(row[1])
            matrix.append(values)
    X = np.asarray(matrix, dtype=np.float64) if matrix else np.empty((0, len(columns)))
    return FeatureTable(ids=ids, scopes=scopes, columns=list(columns), X=X)
