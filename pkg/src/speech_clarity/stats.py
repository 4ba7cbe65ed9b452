"""Cross-speaker aggregation statistics."""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import LengthMismatch, ZeroVariance


@dataclass(frozen=True)
class ScoreVector:
    labels: tuple[str, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.values):
            raise LengthMismatch("labels and values differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be unique")


def _values(x: Union[ScoreVector, Sequence[float]]) -> Sequence[float]:
    return x.values if isinstance(x, ScoreVector) else x


def _check_pair(x, y):
    if isinstance(x, ScoreVector) and isinstance(y, ScoreVector) and x.labels != y.labels:
        raise ValueError("score vectors have mismatched labels")
    xv, yv = _values(x), _values(y)
    if len(xv) != len(yv):
        raise LengthMismatch(f"lengths differ: {len(xv)} vs {len(yv)}")
    return xv, yv


def pearson(x, y) -> float:
    """Product-moment correlation; raises ZeroVariance on constant input."""
    xv, yv = _check_pair(x, y)
    if len(xv) < 2:
        raise LengthMismatch("correlation needs at least 2 points")
    try:
        return statistics.correlation(xv, yv)
    except statistics.StatisticsError as e:
        raise ZeroVariance(str(e)) from None


def normalized_euclidean(x, y) -> float:
    """sqrt(sum of squared differences) / sqrt(n); in [0, 1] for
    [0, 1]-bounded inputs."""
    xv, yv = _check_pair(x, y)
    if not xv:
        raise LengthMismatch("vectors must be non-empty")
    return math.sqrt(sum((a - b) ** 2 for a, b in zip(xv, yv)) / len(xv))
