"""Therapist annotation ingest: Audacity label tracks plus a deterministic
keyword mapper from free-text labels to the eight error classes."""
from __future__ import annotations

import csv
import enum
from dataclasses import dataclass, replace
from typing import Optional

from .errors import MalformedLabelLine, NegativeDuration, UnmappedLabel


class ErrorClass(enum.Enum):
    WORD_SUBSTITUTION = "WordSubstitution"
    PHONEME_SUBSTITUTION = "PhonemeSubstitution"
    WORD_DELETION = "WordDeletion"
    PHONEME_DELETION = "PhonemeDeletion"
    WORD_INSERTION = "WordInsertion"
    PHONEME_INSERTION = "PhonemeInsertion"
    REPETITION = "Repetition"
    PROSODIC = "Prosodic"


@dataclass(frozen=True)
class TherapistAnnotation:
    start_s: float
    end_s: float
    raw_label: str
    error_class: Optional[ErrorClass] = None
    exact_error: str = ""


# Longest matching prefix wins; the remainder of the label becomes the
# exact-error text. Multi-word prosodic phrases are listed outright so
# e.g. "prolonged pause" leaves no remainder.
KEYWORD_TABLE: list[tuple[str, ErrorClass]] = [
    ("word replacement", ErrorClass.WORD_SUBSTITUTION),
    ("word substitution", ErrorClass.WORD_SUBSTITUTION),
    ("sound substitution", ErrorClass.PHONEME_SUBSTITUTION),
    ("phoneme substitution", ErrorClass.PHONEME_SUBSTITUTION),
    ("sound replacement", ErrorClass.PHONEME_SUBSTITUTION),
    ("word deletion", ErrorClass.WORD_DELETION),
    ("word omission", ErrorClass.WORD_DELETION),
    ("sound deletion", ErrorClass.PHONEME_DELETION),
    ("phoneme deletion", ErrorClass.PHONEME_DELETION),
    ("sound omission", ErrorClass.PHONEME_DELETION),
    ("word insertion", ErrorClass.WORD_INSERTION),
    ("added word", ErrorClass.WORD_INSERTION),
    ("sound insertion", ErrorClass.PHONEME_INSERTION),
    ("phoneme insertion", ErrorClass.PHONEME_INSERTION),
    ("added sound", ErrorClass.PHONEME_INSERTION),
    ("repetition", ErrorClass.REPETITION),
    ("prolonged pause", ErrorClass.PROSODIC),
    ("irregular pause", ErrorClass.PROSODIC),
    ("prolonged", ErrorClass.PROSODIC),
    ("strained voice", ErrorClass.PROSODIC),
    ("strained", ErrorClass.PROSODIC),
    ("pause", ErrorClass.PROSODIC),
]

_BY_LENGTH = sorted(KEYWORD_TABLE, key=lambda kv: len(kv[0]), reverse=True)


def parse_label_file(path) -> list[TherapistAnnotation]:
    """Parse an Audacity label track: ``start<TAB>end<TAB>label`` per line.

    Annotations are returned ordered by start time; label text is kept
    verbatim. Zero-length regions are legal (point events).
    """
    annotations = []
    with open(path, encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) < 3:
                raise MalformedLabelLine(line_no, line)
            try:
                start_s = float(fields[0])
                end_s = float(fields[1])
            except ValueError:
                raise MalformedLabelLine(line_no, line) from None
            if end_s < start_s:
                raise NegativeDuration(line_no)
            label = "\t".join(fields[2:])
            annotations.append(TherapistAnnotation(start_s=start_s, end_s=end_s, raw_label=label))
    annotations.sort(key=lambda a: a.start_s)
    return annotations


def serialize_label_file(annotations, path) -> None:
    """Inverse of parse_label_file: times to 3 decimals, labels verbatim."""
    with open(path, "w", encoding="utf-8") as f:
        for a in annotations:
            f.write(f"{a.start_s:.3f}\t{a.end_s:.3f}\t{a.raw_label}\n")


def map_label(raw_label: str) -> tuple[ErrorClass, str]:
    """Longest-prefix keyword match over KEYWORD_TABLE; the text after the
    matched type phrase is the exact-error description."""
    if not raw_label:
        raise UnmappedLabel(raw_label)
    lowered = " ".join(raw_label.lower().split())
    for phrase, cls in _BY_LENGTH:
        if lowered == phrase or lowered.startswith(phrase + " "):
            remainder = lowered[len(phrase):].strip()
            return cls, remainder
    raise UnmappedLabel(raw_label)


def load_overrides(path) -> dict[str, ErrorClass]:
    """Sidecar CSV ``raw_label,error_class`` for labels the keyword table
    cannot resolve; classes spelled exactly as the enum names."""
    overrides = {}
    with open(path, encoding="utf-8", newline="") as f:
        for row in csv.DictReader(f):
            overrides[row["raw_label"]] = ErrorClass(row["error_class"])
    return overrides


def map_annotations(annotations, overrides=None) -> list[TherapistAnnotation]:
    """Attach error_class/exact_error to parsed annotations. Overrides are
    consulted first (by verbatim raw label); UnmappedLabel propagates."""
    overrides = overrides or {}
    mapped = []
    for a in annotations:
        if a.raw_label in overrides:
            mapped.append(replace(a, error_class=overrides[a.raw_label], exact_error=""))
            continue
        cls, exact = map_label(a.raw_label)
        mapped.append(replace(a, error_class=cls, exact_error=exact))
    return mapped
