"""Cross-platform verdict voting."""

from __future__ import annotations

from dataclasses import dataclass, field

from factvote.errors import NoVotes

REAL_LABEL = 0
MISLEADING_LABEL = 1
LABEL_NAMES = {REAL_LABEL: "real", MISLEADING_LABEL: "misleading"}

VOTE_RULES = ("majority", "hybrid-only")


def _check_label(name: str, value: int | None) -> None:
    if value is not None and value not in (REAL_LABEL, MISLEADING_LABEL):
        raise ValueError(f"{name} label must be 0, 1, or None, got {value!r}")


def platform_vote(
    google: int | None,
    youtube: int | None,
    hybrid: int | None,
    rule: str = "majority",
) -> int:
    """Combine per-scope labels into the final verdict.

    majority: mode of the present labels; a two-voter tie defers to the
    hybrid label, and if hybrid itself is the absent voter the tie breaks
    to misleading (the cautious default for a misinformation detector).
    hybrid-only: the hybrid label alone.
    """
    _check_label("google", google)
    _check_label("youtube", youtube)
    _check_label("hybrid", hybrid)
    if rule not in VOTE_RULES:
        raise ValueError(f"rule must be one of {VOTE_RULES}, got {rule!r}")
    present = [label for label in (google, youtube, hybrid) if label is not None]
    if not present:
        raise NoVotes("no per-platform labels to vote over")
    if rule == "hybrid-only":
        if hybrid is None:
            raise NoVotes("hybrid-only rule needs a hybrid label")
        return hybrid
    misleading = sum(1 for label in present if label == MISLEADING_LABEL)
    real = len(present) - misleading
    if misleading > real:
        return MISLEADING_LABEL
    if real > misleading:
        return REAL_LABEL
    # exactly-two-voter tie
    if hybrid is not None:
        return hybrid
    return MISLEADING_LABEL


def vote_margin(google: int | None, youtube: int | None, hybrid: int | None) -> tuple[int, int, float]:
    """(misleading votes, real votes, |difference| / voters)."""
    present = [label for label in (google, youtube, hybrid) if label is not None]
    if not present:
        raise NoVotes("no per-platform labels to vote over")
    misleading = sum(1 for label in present if label == MISLEADING_LABEL)
    real = len(present) - misleading
    return misleading, real, abs(misleading - real) / len(present)


@dataclass(frozen=True)
class Verdict:
    """Final call for one claim plus everything needed to audit it."""

    claim_id: str
    google: int | None
    youtube: int | None
    hybrid: int | None
    final: int
    votes_misleading: int
    votes_real: int
    support: float
    insufficient_evidence: bool = False
    trail: tuple[dict, ...] = field(default_factory=tuple)

    def to_dict(self, include_trail: bool = True) -> dict:
        def name(label: int | None) -> str | None:
            return None if label is None else LABEL_NAMES[label]

        out = {
            "claim_id": self.claim_id,
            "labels": {
                "google": name(self.google),
                "youtube": name(self.youtube),
                "hybrid": name(self.hybrid),
            },
            "final": name(self.final),
            "votes": {"misleading": self.votes_misleading, "real": self.votes_real},
            "support": self.support,
            "insufficient_evidence": self.insufficient_evidence,
        }
        if include_trail:
            out["trail"] = list(self.trail)
        return out
