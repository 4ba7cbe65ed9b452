"""Stage 2: time-stamped error detections and overlap-based scoring against
therapist annotations."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .align import EditOp, ErrorRun, OpKind
from .annotations import ErrorClass, TherapistAnnotation
from .errors import IndexOutOfRange


@dataclass(frozen=True)
class TimedWord:
    word: str
    start_s: float
    end_s: float


@dataclass
class DetectedError:
    start_s: float
    end_s: float
    ops: tuple[EditOp, ...]
    ref_text: str
    hyp_text: str
    asr_class: Optional[object] = None  # AsrErrorClass, attached by stage 3


@dataclass(frozen=True)
class LocalizationMetrics:
    tp: int
    fp: int
    fn: int
    precision: float
    recall: float
    f_score: float
    per_class_recall: dict[ErrorClass, float]
    annotations_covered: int
    vacuous_recall: bool  # no annotations existed; recall reported as 1.0


def timestamp_runs(
    runs: Sequence[ErrorRun],
    hyp: Sequence[TimedWord],
    ref_norms: Sequence[str],
) -> list[DetectedError]:
    """Attach time spans to error runs.

    A run touching hypothesis words spans their min start to max end. A
    pure-deletion run gets the gap between the surrounding hypothesis
    words; at transcript edges it collapses to a zero-length span at the
    neighbor's boundary.
    """
    detections = []
    for run in runs:
        if run.hyp_end > len(hyp) or run.ref_end > len(ref_norms):
            raise IndexOutOfRange(f"run {run} exceeds sequence bounds")
        if run.hyp_end > run.hyp_start:
            words = hyp[run.hyp_start:run.hyp_end]
            start = min(w.start_s for w in words)
            end = max(w.end_s for w in words)
        else:
            at = run.hyp_start
            prev_end = hyp[at - 1].end_s if at > 0 else None
            next_start = hyp[at].start_s if at < len(hyp) else None
            if prev_end is not None and next_start is not None:
                start, end = prev_end, next_start
            elif next_start is not None:
                start = end = next_start
            elif prev_end is not None:
                start = end = prev_end
            else:
                start = end = 0.0
        detections.append(DetectedError(
            start_s=start,
            end_s=end,
            ops=run.ops,
            ref_text=" ".join(ref_norms[run.ref_start:run.ref_end]),
            hyp_text=" ".join(w.word for w in hyp[run.hyp_start:run.hyp_end]),
        ))
    return detections


def _overlaps(det, ann) -> bool:
    # Closed intervals: zero-length touching spans count as overlap.
    return det.start_s <= ann.end_s and ann.start_s <= det.end_s


def score_localization(
    detections: Sequence[DetectedError],
    annotations: Sequence[TherapistAnnotation],
) -> LocalizationMetrics:
    """Detection-side TP/FP, annotation-side FN, plus per-class recall.

    A detection is TP if it overlaps at least one annotation; an
    annotation overlapped by no detection is FN. One annotation covered by
    two detections therefore yields tp=2 while fn accounting stays
    annotation-side.
    """
    tp = sum(1 for d in detections if any(_overlaps(d, a) for a in annotations))
    fp = len(detections) - tp
    covered = [a for a in annotations if any(_overlaps(d, a) for d in detections)]
    fn = len(annotations) - len(covered)

    if tp + fp > 0:
        precision = tp / (tp + fp)
    else:
        precision = 1.0 if not annotations else 0.0
    vacuous = not annotations
    recall = tp / (tp + fn) if tp + fn > 0 else 1.0
    if precision > 0 and recall > 0:
        f_score = 2 * precision * recall / (precision + recall)
    else:
        f_score = 0.0

    per_class: dict[ErrorClass, float] = {}
    for cls in ErrorClass:
        total = sum(1 for a in annotations if a.error_class is cls)
        if total:
            hit = sum(1 for a in covered if a.error_class is cls)
            per_class[cls] = hit / total
    return LocalizationMetrics(
        tp=tp, fp=fp, fn=fn,
        precision=precision, recall=recall, f_score=f_score,
        per_class_recall=per_class,
        annotations_covered=len(covered),
        vacuous_recall=vacuous,
    )
