"""Pure-Python alignment kernel (used when the compiled core is unavailable)."""
from __future__ import annotations

MATCH, SUBSTITUTE, DELETE, INSERT = 0, 1, 2, 3


def align_ids(ref, hyp):
    """Unit-cost Levenshtein DP with backtrace over integer id sequences.

    Returns (distance, op codes). Backtrace tie-break order is
    Match > Substitute > Delete > Insert, same as the compiled kernel.
    """
    n, m = len(ref), len(hyp)
    dp = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        dp[i][0] = i
    for j in range(1, m + 1):
        dp[0][j] = j
    for i in range(1, n + 1):
        ri = ref[i - 1]
        row = dp[i]
        prev = dp[i - 1]
        for j in range(1, m + 1):
            diag = prev[j - 1] + (0 if ri == hyp[j - 1] else 1)
            up = prev[j] + 1
            left = row[j - 1] + 1
            row[j] = diag if diag <= up and diag <= left else (up if up <= left else left)

    ops = []
    i, j = n, m
    while i > 0 or j > 0:
        cur = dp[i][j]
        if i > 0 and j > 0 and ref[i - 1] == hyp[j - 1] and dp[i - 1][j - 1] == cur:
            ops.append(MATCH)
            i -= 1
            j -= 1
        elif i > 0 and j > 0 and dp[i - 1][j - 1] + 1 == cur:
            ops.append(SUBSTITUTE)
            i -= 1
            j -= 1
        elif i > 0 and dp[i - 1][j] + 1 == cur:
            ops.append(DELETE)
            i -= 1
        else:
            ops.append(INSERT)
            j -= 1
    ops.reverse()
    return dp[n][m], ops
