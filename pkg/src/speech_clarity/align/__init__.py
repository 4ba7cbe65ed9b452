"""Minimal-cost Levenshtein alignment with full backtrace.

The hot DP kernel lives in the compiled extension ``_core`` (Cython); a
pure-Python twin ``_fallback`` is selected at import when the extension is
missing or SPEECH_CLARITY_PURE is set. Both kernels produce identical op
sequences.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Hashable, Optional, Sequence

if os.environ.get("SPEECH_CLARITY_PURE"):
    from ._fallback import align_ids as _align_ids
    BACKEND = "python"
else:
    try:
        from ._core import align_ids as _align_ids
        BACKEND = "cython"
    except ImportError:
        from ._fallback import align_ids as _align_ids
        BACKEND = "python"

_MATCH, _SUBSTITUTE, _DELETE, _INSERT = 0, 1, 2, 3


class OpKind(enum.Enum):
    MATCH = "match"
    SUBSTITUTE = "substitute"
    DELETE = "delete"
    INSERT = "insert"


@dataclass(frozen=True)
class EditOp:
    kind: OpKind
    ref_index: Optional[int] = None
    hyp_index: Optional[int] = None


@dataclass(frozen=True)
class EditScript:
    ops: tuple[EditOp, ...]
    distance: int


@dataclass(frozen=True)
class ErrorRun:
    """Maximal block of consecutive non-Match ops.

    ref/hyp ranges are half-open index intervals into the aligned
    sequences; a pure-deletion run has hyp_start == hyp_end (the insertion
    point in the hypothesis).
    """
    ops: tuple[EditOp, ...]
    ref_start: int
    ref_end: int
    hyp_start: int
    hyp_end: int


def align(ref: Sequence[Hashable], hyp: Sequence[Hashable]) -> EditScript:
    """Unit-cost minimal alignment; deterministic backtrace with tie-break
    Match > Substitute > Delete > Insert."""
    ids: dict[Hashable, int] = {}
    ref_ids = [ids.setdefault(s, len(ids)) for s in ref]
    hyp_ids = [ids.setdefault(s, len(ids)) for s in hyp]
    distance, codes = _align_ids(ref_ids, hyp_ids)

    ops = []
    r = h = 0
    for code in codes:
        if code == _MATCH:
            ops.append(EditOp(OpKind.MATCH, ref_index=r, hyp_index=h))
            r += 1
            h += 1
        elif code == _SUBSTITUTE:
            ops.append(EditOp(OpKind.SUBSTITUTE, ref_index=r, hyp_index=h))
            r += 1
            h += 1
        elif code == _DELETE:
            ops.append(EditOp(OpKind.DELETE, ref_index=r))
            r += 1
        else:
            ops.append(EditOp(OpKind.INSERT, hyp_index=h))
            h += 1
    assert r == len(ref) and h == len(hyp)
    return EditScript(ops=tuple(ops), distance=distance)


def consecutive_error_runs(script: EditScript) -> list[ErrorRun]:
    """Group adjacent non-Match ops into maximal runs so one disrupted
    region counts as a single detection."""
    runs: list[ErrorRun] = []
    r = h = 0
    current: list[EditOp] = []
    run_r = run_h = 0
    for op in script.ops:
        if op.kind is OpKind.MATCH:
            if current:
                runs.append(ErrorRun(tuple(current), run_r, r, run_h, h))
                current = []
            r += 1
            h += 1
            continue
        if not current:
            run_r, run_h = r, h
        current.append(op)
        if op.kind is OpKind.SUBSTITUTE:
            r += 1
            h += 1
        elif op.kind is OpKind.DELETE:
            r += 1
        else:
            h += 1
    if current:
        runs.append(ErrorRun(tuple(current), run_r, r, run_h, h))
    return runs
