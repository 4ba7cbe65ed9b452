"""Stage 1: overall clarity from the word-level alignment, therapist-style
clarity from annotation counts, and severity bucketing."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .align import EditScript, OpKind
from .errors import CountExceedsTotal, ZeroReference


class Severity(enum.Enum):
    MILD = "Mild"
    MODERATE = "Moderate"
    SEVERE = "Severe"


def severity_of(clarity_pct: float) -> Severity:
    # 80 is inclusive-Mild, 50 inclusive-Moderate.
    if clarity_pct >= 80.0:
        return Severity.MILD
    if clarity_pct >= 50.0:
        return Severity.MODERATE
    return Severity.SEVERE


@dataclass(frozen=True)
class ClarityReport:
    substitutions: int
    deletions: int
    insertions: int
    ref_word_count: int
    wer: float
    clarity_asr: float        # 1 - WER, unclamped (negative when WER > 1)
    clarity_pct: float        # clamped to [0, 100], drives severity only
    severity: Severity


def asr_clarity(script: EditScript, ref_word_count: int) -> ClarityReport:
    """Clarity = 1 - WER with WER = (S + D + I) / reference word count."""
    if ref_word_count <= 0:
        raise ZeroReference("reference word count must be positive")
    subs = sum(1 for op in script.ops if op.kind is OpKind.SUBSTITUTE)
    dels = sum(1 for op in script.ops if op.kind is OpKind.DELETE)
    ins = sum(1 for op in script.ops if op.kind is OpKind.INSERT)
    wer = (subs + dels + ins) / ref_word_count
    clarity = 1.0 - wer
    pct = max(0.0, min(100.0, 100.0 * clarity))
    return ClarityReport(
        substitutions=subs,
        deletions=dels,
        insertions=ins,
        ref_word_count=ref_word_count,
        wer=wer,
        clarity_asr=clarity,
        clarity_pct=pct,
        severity=severity_of(pct),
    )


def therapist_clarity(words_in_error: int, total_words: int) -> float:
    """Percentage of correctly produced words: 100 * (1 - errors / total)."""
    if total_words <= 0:
        raise ZeroReference("total word count must be positive")
    if not 0 <= words_in_error <= total_words:
        raise CountExceedsTotal(f"{words_in_error} errors out of {total_words} words")
    return 100.0 * (1.0 - words_in_error / total_words)
