"""Labeled claim corpus ingestion and split-count verification."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from factvote.errors import BadHeader, BadLabel, DuplicateId, ParseError
from factvote.text.normalize import normalize_text

REAL = "real"
FAKE = "fake"
LABEL_CODES = {REAL: 0, FAKE: 1}

# Table of expected split sizes: (real, fake) per split name
CANONICAL_COUNTS = {
    "train": (3360, 3060),
    "validation": (1120, 1020),
    "test": (1120, 1020),
}


@dataclass(frozen=True)
class DatasetRecord:
    id: str
    text: str
    label: str

    def __post_init__(self):
        if self.label not in LABEL_CODES:
            raise ValueError(f"label must be '{REAL}' or '{FAKE}', got {self.label!r}")
        if not self.text.strip():
            raise ValueError(f"record {self.id!r} has empty text")

    @property
    def label_code(self) -> int:
        return LABEL_CODES[self.label]


def _sniff_delimiter(path: Path, fmt: str | None) -> str:
    if fmt is not None:
        if fmt not in ("tsv", "csv"):
            raise ValueError(f"format must be 'tsv' or 'csv', got {fmt!r}")
        return "\t" if fmt == "tsv" else ","
    return "\t" if path.suffix.lower() == ".tsv" else ","


def load_dataset(
    source: str | Path, fmt: str | None = None, dedup: bool = False
) -> list[DatasetRecord]:
    """Read id/text/label rows from a delimited file with a header.

    The text column may be named "tweet" or "text"; labels normalize
    case-insensitively to real/fake. ``dedup`` drops records whose
    normalized text repeats an earlier row (keeps the first).
    """
    path = Path(source)
    delimiter = _sniff_delimiter(path, fmt)
    records: list[DatasetRecord] = []
    seen_ids: set[str] = set()
    seen_texts: set[str] = set()
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh, delimiter=delimiter)
        try:
            header = [col.strip().lower() for col in next(reader)]
        except StopIteration:
            raise BadHeader(f"{path}: empty file") from None
        try:
            id_col = header.index("id")
            label_col = header.index("label")
        except ValueError:
            raise BadHeader(f"{path}: header must name id and label columns, got {header!r}") from None
        if "tweet" in header:
            text_col = header.index("tweet")
        elif "text" in header:
            text_col = header.index("text")
        else:
            raise BadHeader(f"{path}: header must name a tweet or text column, got {header!r}")

        needed = max(id_col, text_col, label_col) + 1
        for line_no, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) < needed:
                raise ParseError(f"{path}:{line_no}: expected at least {needed} fields, got {len(row)}")
            rid = row[id_col].strip()
            text = row[text_col]
            label_raw = row[label_col].strip().lower()
            if label_raw not in LABEL_CODES:
                raise BadLabel(line_no, row[label_col])
            if rid in seen_ids:
                raise DuplicateId(f"{path}:{line_no}: duplicate id {rid!r}")
            seen_ids.add(rid)
            if dedup:
                key = normalize_text(text)
                if key in seen_texts:
                    continue
                seen_texts.add(key)
            try:
                records.append(DatasetRecord(id=rid, text=text, label=label_raw))
            except ValueError as exc:
                raise ParseError(f"{path}:{line_no}: {exc}") from None
    return records


@dataclass(frozen=True)
class SplitSet:
    train: tuple[DatasetRecord, ...]
    validation: tuple[DatasetRecord, ...]
    test: tuple[DatasetRecord, ...]

    def __post_init__(self):
        ids: set[str] = set()
        for name in ("train", "validation", "test"):
            for record in getattr(self, name):
                if record.id in ids:
                    raise DuplicateId(f"id {record.id!r} appears in more than one split")
                ids.add(record.id)

    @classmethod
    def from_files(
        cls,
        train: str | Path,
        validation: str | Path,
        test: str | Path,
        fmt: str | None = None,
        dedup: bool = False,
    ) -> "SplitSet":
        return cls(
            train=tuple(load_dataset(train, fmt=fmt, dedup=dedup)),
            validation=tuple(load_dataset(validation, fmt=fmt, dedup=dedup)),
            test=tuple(load_dataset(test, fmt=fmt, dedup=dedup)),
        )


@dataclass(frozen=True)
class SplitCountLine:
    split: str
    expected_real: int
    expected_fake: int
    actual_real: int
    actual_fake: int

    @property
    def matches(self) -> bool:
        return (
            self.actual_real == self.expected_real
            and self.actual_fake == self.expected_fake
        )

    def render(self) -> str:
        status = "ok" if self.matches else "MISMATCH"
        return (
            f"{self.split}: real {self.actual_real}/{self.expected_real} "
            f"fake {self.actual_fake}/{self.expected_fake} "
            f"total {self.actual_real + self.actual_fake}/"
            f"{self.expected_real + self.expected_fake} [{status}]"
        )


@dataclass(frozen=True)
class SplitCountReport:
    lines: tuple[SplitCountLine, ...]

    @property
    def ok(self) -> bool:
        return all(line.matches for line in self.lines)

    def render(self) -> str:
        return "\n".join(line.render() for line in self.lines)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "splits": [
                {
                    "split": line.split,
                    "expected": {"real": line.expected_real, "fake": line.expected_fake},
                    "actual": {"real": line.actual_real, "fake": line.actual_fake},
                    "matches": line.matches,
                }
                for line in self.lines
            ],
        }


def verify_split_counts(splits: SplitSet, strict: bool = False) -> SplitCountReport:
    """Compare per-split real/fake counts against the canonical corpus
    sizes. Mismatches make a warning report unless ``strict``, which
    raises instead."""
    lines = []
    for name in ("train", "validation", "test"):
        expected_real, expected_fake = CANONICAL_COUNTS[name]
        records = getattr(splits, name)
        actual_real = sum(1 for r in records if r.label == REAL)
        actual_fake = len(records) - actual_real
        lines.append(
            SplitCountLine(
                split=name,
                expected_real=expected_real,
                expected_fake=expected_fake,
                actual_real=actual_real,
                actual_fake=actual_fake,
            )
        )
    report = SplitCountReport(lines=tuple(lines))
    if strict and not report.ok:
        raise ValueError("split counts do not match the canonical corpus:\n" + report.render())
    return report


def labels_by_id(records) -> dict[str, int]:
    return {record.id: record.label_code for record in records}
