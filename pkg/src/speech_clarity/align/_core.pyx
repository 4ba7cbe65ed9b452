# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled alignment kernel. Must stay op-for-op identical to _fallback."""
import numpy as np

cimport numpy as cnp

DEF MATCH = 0
DEF SUBSTITUTE = 1
DEF DELETE = 2
DEF INSERT = 3


def align_ids(ref_seq, hyp_seq):
    """Unit-cost Levenshtein DP with backtrace over integer id sequences.

    Returns (distance, op codes) with tie-break Match > Substitute >
    Delete > Insert.
    """
    cdef cnp.ndarray[cnp.int32_t, ndim=1] ref = np.asarray(ref_seq, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] hyp = np.asarray(hyp_seq, dtype=np.int32)
    cdef Py_ssize_t n = ref.shape[0]
    cdef Py_ssize_t m = hyp.shape[0]
    cdef cnp.ndarray[cnp.int32_t, ndim=2] dp = np.zeros((n + 1, m + 1), dtype=np.int32)
    cdef Py_ssize_t i, j
    cdef cnp.int32_t diag, up, left, best, ri

    for i in range(1, n + 1):
        dp[i, 0] = <cnp.int32_t> i
    for j in range(1, m + 1):
        dp[0, j] = <cnp.int32_t> j
    for i in range(1, n + 1):
        ri = ref[i - 1]
        for j in range(1, m + 1):
            diag = dp[i - 1, j - 1] + (0 if ri == hyp[j - 1] else 1)
            up = dp[i - 1, j] + 1
            left = dp[i, j - 1] + 1
            best = diag
            if up < best:
                best = up
            if left < best:
                best = left
            dp[i, j] = best

    ops = []
    i = n
    j = m
    cdef cnp.int32_t cur
    while i > 0 or j > 0:
        cur = dp[i, j]
        if i > 0 and j > 0 and ref[i - 1] == hyp[j - 1] and dp[i - 1, j - 1] == cur:
            ops.append(MATCH)
            i -= 1
            j -= 1
        elif i > 0 and j > 0 and dp[i - 1, j - 1] + 1 == cur:
            ops.append(SUBSTITUTE)
            i -= 1
            j -= 1
        elif i > 0 and dp[i - 1, j] + 1 == cur:
            ops.append(DELETE)
            i -= 1
        else:
            ops.append(INSERT)
            j -= 1
    ops.reverse()
    return int(dp[n, m]), ops
