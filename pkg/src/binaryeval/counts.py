"""Exact confusion-matrix tallies for binary classification.

Everything here is a plain immutable value: tallies are accumulated by
building new :class:`ConfusionCounts` instances, so sharded/parallel
accumulation followed by :func:`merge` is bit-identical to a sequential
fold of :func:`record`.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from enum import Enum
from typing import Hashable, Iterable, Sequence


class Label(Enum):
    """One of the two classes a sample can belong to."""

    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True, slots=True)
class LabeledPrediction:
    """A single (actual, predicted) label pair."""

    actual: Label
    predicted: Label


@dataclass(frozen=True, slots=True)
class ScoredSample:
    """An actual label together with the classifier's positive-class score.

    The score must be finite (no NaN, no infinities); it is typically a
    posterior probability but any finite real works.
    """

    score: float
    actual: Label

    def __post_init__(self) -> None:
        score = float(self.score)
        if not math.isfinite(score):
            raise ValueError(f"score must be finite, got {self.score!r}")
        object.__setattr__(self, "score", score)


@dataclass(frozen=True, slots=True)
class ConfusionCounts:
    """The four cells of a 2x2 confusion matrix (rows actual, columns predicted).

    Cells are Python integers, so tallies are exact at any magnitude and
    arithmetic can never silently wrap around.
    """

    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self) -> None:
        for name in ("tp", "fp", "fn", "tn"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, numbers.Integral):
                raise TypeError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be >= 0, got {value}")
            object.__setattr__(self, name, int(value))

    @property
    def total(self) -> int:
        """Number of recorded samples."""
        return self.tp + self.fp + self.fn + self.tn

    @property
    def positives(self) -> int:
        """Number of samples whose actual label is positive."""
        return self.tp + self.fn

    @property
    def negatives(self) -> int:
        """Number of samples whose actual label is negative."""
        return self.fp + self.tn


def empty() -> ConfusionCounts:
    """The all-zero tally; identity element of :func:`merge`."""
    return ConfusionCounts(tp=0, fp=0, fn=0, tn=0)


def record(counts: ConfusionCounts, prediction: LabeledPrediction) -> ConfusionCounts:
    """Return a new tally with the cell for ``prediction`` incremented by one."""
    tp, fp, fn, tn = counts.tp, counts.fp, counts.fn, counts.tn
    if prediction.actual is Label.POSITIVE:
        if prediction.predicted is Label.POSITIVE:
            tp += 1
        else:
            fn += 1
    elif prediction.predicted is Label.POSITIVE:
        fp += 1
    else:
        tn += 1
    return ConfusionCounts(tp=tp, fp=fp, fn=fn, tn=tn)


def merge(a: ConfusionCounts, b: ConfusionCounts) -> ConfusionCounts:
    """Cell-wise sum of two tallies."""
    return ConfusionCounts(
        tp=a.tp + b.tp,
        fp=a.fp + b.fp,
        fn=a.fn + b.fn,
        tn=a.tn + b.tn,
    )


def from_predictions(pairs: Iterable[LabeledPrediction]) -> ConfusionCounts:
    """Tally a sequence of label pairs; equal to folding :func:`record` over :func:`empty`."""
    tp = fp = fn = tn = 0
    for pair in pairs:
        if pair.actual is Label.POSITIVE:
            if pair.predicted is Label.POSITIVE:
                tp += 1
            else:
                fn += 1
        elif pair.predicted is Label.POSITIVE:
            fp += 1
        else:
            tn += 1
    return ConfusionCounts(tp=tp, fp=fp, fn=fn, tn=tn)


def binarize(actual_class: Hashable, positive_class: Hashable) -> Label:
    """One-vs-rest reduction: equal to the chosen positive class, or not.

    Every class identifier other than ``positive_class`` collapses to the
    negative label, so multi-class inputs reduce to a binary problem
    against one declared positive class.
    """
    return Label.POSITIVE if actual_class == positive_class else Label.NEGATIVE


def apply_threshold(
    samples: Sequence[ScoredSample], threshold: float
) -> list[LabeledPrediction]:
    """Turn scores into hard predictions: positive iff score >= threshold.

    ``+inf`` predicts everything negative and ``-inf`` everything positive;
    NaN is rejected. Actual labels pass through and order is preserved.
    """
    threshold = float(threshold)
    if math.isnan(threshold):
        raise ValueError("threshold must be a real number or +/-inf, not NaN")
    return [
        LabeledPrediction(
            actual=sample.actual,
            predicted=Label.POSITIVE if sample.score >= threshold else Label.NEGATIVE,
        )
        for sample in samples
    ]
