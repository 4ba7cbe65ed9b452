"""Stage 3: word- vs phoneme-level error typing, the therapist-class by
ASR-class confusion matrix, and exact-error matching with a phonetic
similarity relaxation."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .align import OpKind, align
from .annotations import ErrorClass, TherapistAnnotation
from .errors import EmptyRun, UnparseableExactError
from .lexicon import Lexicon, phonemes_of
from .localize import DetectedError
from .normalize import tokenize

ABS_THRESHOLD_DEFAULT = 3
REL_THRESHOLD_DEFAULT = 0.6
SIM_THRESHOLD_DEFAULT = 0.5


class AsrErrorClass(enum.Enum):
    WORD_SUBSTITUTION = "WordSubstitution"
    WORD_DELETION = "WordDeletion"
    WORD_INSERTION = "WordInsertion"
    PHONEME_SUBSTITUTION = "PhonemeSubstitution"
    PHONEME_DELETION = "PhonemeDeletion"
    PHONEME_INSERTION = "PhonemeInsertion"


UNDETECTED = "Undetected"

_PHONEME_BY_KIND = {
    OpKind.SUBSTITUTE: AsrErrorClass.PHONEME_SUBSTITUTION,
    OpKind.DELETE: AsrErrorClass.PHONEME_DELETION,
    OpKind.INSERT: AsrErrorClass.PHONEME_INSERTION,
}
_WORD_BY_KIND = {
    OpKind.SUBSTITUTE: AsrErrorClass.WORD_SUBSTITUTION,
    OpKind.DELETE: AsrErrorClass.WORD_DELETION,
    OpKind.INSERT: AsrErrorClass.WORD_INSERTION,
}
# Majority-vote tie-break: substitution beats deletion beats insertion.
_KIND_PRIORITY = [OpKind.SUBSTITUTE, OpKind.DELETE, OpKind.INSERT]


class MatchMode(enum.Enum):
    VERBATIM = "Verbatim"
    PHONETICALLY_SIMILAR = "PhoneticallySimilar"
    NO_MATCH = "NoMatch"


@dataclass(frozen=True)
class ExactMatchResult:
    matched: bool
    mode: MatchMode
    similarity: float  # normalized phoneme distance, 0 = identical


def _concat_phones(words: Sequence[str], lex: Lexicon) -> tuple[str, ...]:
    phones: list[str] = []
    for w in words:
        phones.extend(phonemes_of(w, lex).phones)
    return tuple(phones)


def _majority_kind(kinds: Sequence[OpKind]) -> OpKind:
    counts = {k: 0 for k in _KIND_PRIORITY}
    for k in kinds:
        counts[k] += 1
    best = max(counts.values())
    for k in _KIND_PRIORITY:
        if counts[k] == best:
            return k
    raise AssertionError("unreachable")


def phoneme_route(
    ref_words: Sequence[str],
    hyp_words: Sequence[str],
    lex: Lexicon,
    abs_threshold: int = ABS_THRESHOLD_DEFAULT,
    rel_threshold: float = REL_THRESHOLD_DEFAULT,
) -> Optional[AsrErrorClass]:
    """Phoneme-level classification when the phoneme edit distance passes
    both the absolute and the relative (d / reference phoneme count)
    thresholds, both inclusive. Returns None when the route is rejected."""
    ref_ph = _concat_phones(ref_words, lex)
    hyp_ph = _concat_phones(hyp_words, lex)
    script = align(ref_ph, hyp_ph)
    d, n = script.distance, len(ref_ph)
    if n == 0 or d > abs_threshold or d / n > rel_threshold:
        return None
    kinds = [op.kind for op in script.ops if op.kind is not OpKind.MATCH]
    if not kinds:
        # Homophone pair: phonemically identical, nearest label is substitution.
        return AsrErrorClass.PHONEME_SUBSTITUTION
    return _PHONEME_BY_KIND[_majority_kind(kinds)]


def classify_word_pair(
    ref_word: str,
    hyp_word: str,
    lex: Lexicon,
    abs_threshold: int = ABS_THRESHOLD_DEFAULT,
    rel_threshold: float = REL_THRESHOLD_DEFAULT,
) -> AsrErrorClass:
    """Classify a substituted word pair: phoneme-level when the thresholds
    admit it, otherwise a word substitution."""
    cls = phoneme_route([ref_word], [hyp_word], lex, abs_threshold, rel_threshold)
    return cls if cls is not None else AsrErrorClass.WORD_SUBSTITUTION


def classify_detection(
    det: DetectedError,
    lex: Lexicon,
    abs_threshold: int = ABS_THRESHOLD_DEFAULT,
    rel_threshold: float = REL_THRESHOLD_DEFAULT,
) -> AsrErrorClass:
    """Classify one detected error region.

    Single-op runs map directly (substitute goes through the phoneme
    route). A multi-op run with exactly one substitute re-checks the
    phoneme route on the concatenated region text; otherwise the majority
    op kind decides at word level.
    """
    if not det.ops:
        raise EmptyRun("detection carries no edit operations")
    kinds = [op.kind for op in det.ops]
    ref_words = det.ref_text.split()
    hyp_words = det.hyp_text.split()
    if len(kinds) == 1:
        kind = kinds[0]
        if kind is OpKind.SUBSTITUTE:
            return classify_word_pair(ref_words[0], hyp_words[0], lex,
                                      abs_threshold, rel_threshold)
        return _WORD_BY_KIND[kind]
    if sum(1 for k in kinds if k is OpKind.SUBSTITUTE) == 1:
        cls = phoneme_route(ref_words, hyp_words, lex, abs_threshold, rel_threshold)
        if cls is not None:
            return cls
    return _WORD_BY_KIND[_majority_kind(kinds)]


THERAPIST_ROWS = list(ErrorClass)
ASR_COLUMNS = [c.value for c in AsrErrorClass] + [UNDETECTED]


@dataclass
class ConfusionMatrix:
    """8 therapist classes by 6 ASR classes plus Undetected."""
    cells: dict[ErrorClass, dict[str, int]]

    def row_total(self, row: ErrorClass) -> int:
        return sum(self.cells[row].values())

    def total(self) -> int:
        return sum(self.row_total(r) for r in THERAPIST_ROWS)

    def row_pcts(self, row: ErrorClass) -> dict[str, float]:
        total = self.row_total(row)
        if total == 0:
            return {c: 0.0 for c in ASR_COLUMNS}
        return {c: 100.0 * v / total for c, v in self.cells[row].items()}


def build_confusion(
    annotations: Sequence[TherapistAnnotation],
    detections: Sequence[DetectedError],
) -> ConfusionMatrix:
    """Assign each annotation the class of its first overlapping detection
    (earliest start; longer overlap breaks ties), or Undetected."""
    cells = {row: {c: 0 for c in ASR_COLUMNS} for row in THERAPIST_ROWS}
    for ann in annotations:
        if ann.error_class is None:
            raise ValueError(f"annotation {ann.raw_label!r} has no mapped class")
        candidates = [d for d in detections
                      if d.start_s <= ann.end_s and ann.start_s <= d.end_s]
        if not candidates:
            cells[ann.error_class][UNDETECTED] += 1
            continue

        def overlap_len(d):
            return min(d.end_s, ann.end_s) - max(d.start_s, ann.start_s)

        best = min(candidates, key=lambda d: (d.start_s, -overlap_len(d)))
        if best.asr_class is None:
            raise ValueError("detections must be classified before build_confusion")
        cells[ann.error_class][best.asr_class.value] += 1
    return ConfusionMatrix(cells=cells)


def _parse_exact_target(exact_error: str) -> str:
    """Extract the uttered target from an exact-error description: the part
    after the final arrow in 'X → Y', or the bare text itself."""
    text = exact_error.replace("->", "→")
    if "→" in text:
        text = text.rsplit("→", 1)[1]
    norms = [t.norm for t in tokenize(text)]
    if not norms:
        raise UnparseableExactError(exact_error)
    return " ".join(norms)


def exact_error_match(
    ann: TherapistAnnotation,
    det: DetectedError,
    lex: Lexicon,
    sim_threshold: float = SIM_THRESHOLD_DEFAULT,
) -> ExactMatchResult:
    """Compare the detection's hypothesis text against the annotation's
    exact-error target, accepting phonetically similar renderings up to
    sim_threshold (normalized phoneme distance)."""
    target = _parse_exact_target(ann.exact_error)
    hyp_norms = [t.norm for t in tokenize(det.hyp_text)]
    hyp = " ".join(hyp_norms)
    target_ph = _concat_phones(target.split(), lex)
    hyp_ph = _concat_phones(hyp_norms, lex) if hyp_norms else ()
    denom = max(len(target_ph), len(hyp_ph))
    similarity = align(target_ph, hyp_ph).distance / denom if denom else 1.0
    if hyp and hyp == target:
        return ExactMatchResult(True, MatchMode.VERBATIM, similarity)
    if similarity <= sim_threshold:
        return ExactMatchResult(True, MatchMode.PHONETICALLY_SIMILAR, similarity)
    return ExactMatchResult(False, MatchMode.NO_MATCH, similarity)
