"""Binary classification metrics over a fake-positive confusion matrix."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from factvote.errors import EmptyEvaluation


@dataclass(frozen=True)
class ConfusionMatrix:
    """Counts with the fake/misleading class (label 1) as positive."""

    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self):
        for name in ("tp", "fp", "fn", "tn"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    @classmethod
    def from_labels(cls, gold, predicted) -> "ConfusionMatrix":
        gold = np.asarray(gold, dtype=np.int64)
        predicted = np.asarray(predicted, dtype=np.int64)
        if gold.shape != predicted.shape:
            raise ValueError(
                f"gold and predicted lengths differ: {gold.shape} vs {predicted.shape}"
            )
        return cls(
            tp=int(((gold == 1) & (predicted == 1)).sum()),
            fp=int(((gold == 0) & (predicted == 1)).sum()),
            fn=int(((gold == 1) & (predicted == 0)).sum()),
            tn=int(((gold == 0) & (predicted == 0)).sum()),
        )


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int
    zero_division: bool


def _ratio(num: int, den: int) -> tuple[float, bool]:
    if den == 0:
        return 0.0, True
    return num / den, False


def _prf(tp: int, fp: int, fn: int, support: int) -> ClassMetrics:
    precision, p_flag = _ratio(tp, tp + fp)
    recall, r_flag = _ratio(tp, tp + fn)
    if precision + recall == 0.0:
        f1, f_flag = 0.0, True
    else:
        f1, f_flag = 2 * precision * recall / (precision + recall), False
    return ClassMetrics(
        precision=precision,
        recall=recall,
        f1=f1,
        support=support,
        zero_division=p_flag or r_flag or f_flag,
    )


@dataclass(frozen=True)
class MetricsReport:
    fake: ClassMetrics
    real: ClassMetrics
    macro_precision: float
    macro_recall: float
    macro_f1: float
    micro_precision: float
    micro_recall: float
    micro_f1: float
    weighted_precision: float
    weighted_recall: float
    weighted_f1: float
    accuracy: float
    zero_division: bool

    def averaged(self, averaging: str) -> tuple[float, float, float]:
        """(precision, recall, f1) under the named averaging."""
        if averaging not in ("macro", "micro", "weighted"):
            raise ValueError(f"averaging must be macro/micro/weighted, got {averaging!r}")
        return (
            getattr(self, f"{averaging}_precision"),
            getattr(self, f"{averaging}_recall"),
            getattr(self, f"{averaging}_f1"),
        )

    def to_dict(self) -> dict:
        return {
            "per_class": {
                "fake": vars(self.fake),
                "real": vars(self.real),
            },
            "macro": {"precision": self.macro_precision, "recall": self.macro_recall, "f1": self.macro_f1},
            "micro": {"precision": self.micro_precision, "recall": self.micro_recall, "f1": self.micro_f1},
            "weighted": {
                "precision": self.weighted_precision,
                "recall": self.weighted_recall,
                "f1": self.weighted_f1,
            },
            "accuracy": self.accuracy,
            "zero_division": self.zero_division,
        }


def compute_metrics(cm: ConfusionMatrix) -> MetricsReport:
    """Per-class precision/recall/F1 plus macro, micro, and support-weighted
    averages. 0/0 ratios score 0 and set the zero_division flag."""
    total = cm.total
    if total == 0:
        raise EmptyEvaluation("confusion matrix is empty")

    support_fake = cm.tp + cm.fn
    support_real = cm.tn + cm.fp
    fake = _prf(cm.tp, cm.fp, cm.fn, support_fake)
    real = _prf(cm.tn, cm.fn, cm.fp, support_real)
    accuracy = (cm.tp + cm.tn) / total

    macro_p = (fake.precision + real.precision) / 2.0
    macro_r = (fake.recall + real.recall) / 2.0
    macro_f = (fake.f1 + real.f1) / 2.0

    # pooled one-vs-rest counts collapse to accuracy in single-label binary
    pooled_tp = cm.tp + cm.tn
    pooled_fp = cm.fp + cm.fn
    pooled_fn = cm.fn + cm.fp
    micro_p, _ = _ratio(pooled_tp, pooled_tp + pooled_fp)
    micro_r, _ = _ratio(pooled_tp, pooled_tp + pooled_fn)
    micro_f = micro_p if micro_p + micro_r == 0 else 2 * micro_p * micro_r / (micro_p + micro_r)

    weighted_p = (fake.precision * support_fake + real.precision * support_real) / total
    weighted_r = (fake.recall * support_fake + real.recall * support_real) / total
    weighted_f = (fake.f1 * support_fake + real.f1 * support_real) / total

    return MetricsReport(
        fake=fake,
        real=real,
        macro_precision=macro_p,
        macro_recall=macro_r,
        macro_f1=macro_f,
        micro_precision=micro_p,
        micro_recall=micro_r,
        micro_f1=micro_f,
        weighted_precision=weighted_p,
        weighted_recall=weighted_r,
        weighted_f1=weighted_f,
        accuracy=accuracy,
        zero_division=fake.zero_division or real.zero_division,
    )
