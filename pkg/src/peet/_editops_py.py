"""Pure-Python edit-distance kernels (fallback for the compiled extension).

Must stay semantically identical to ``_editops.pyx``; the test suite checks
both backends against each other.
"""

from __future__ import annotations


def char_distance(a: str, b: str) -> int:
    """Levenshtein distance between two strings, unit costs."""
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    prev = list(range(lb + 1))
    curr = [0] * (lb + 1)
    for i in range(1, la + 1):
        curr[0] = i
        ca = a[i - 1]
        for j in range(1, lb + 1):
            best = prev[j - 1] + (ca != b[j - 1])
            up = prev[j] + 1
            if up < best:
                best = up
            left = curr[j - 1] + 1
            if left < best:
                best = left
            curr[j] = best
        prev, curr = curr, prev
    return prev[lb]


def token_distance(a: list, b: list) -> int:
    """Levenshtein distance between two token sequences, unit costs."""
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    prev = list(range(lb + 1))
    curr = [0] * (lb + 1)
    for i in range(1, la + 1):
        curr[0] = i
        ta = a[i - 1]
        for j in range(1, lb + 1):
            best = prev[j - 1] + (ta != b[j - 1])
            up = prev[j] + 1
            if up < best:
                best = up
            left = curr[j - 1] + 1
            if left < best:
                best = left
            curr[j] = best
        prev, curr = curr, prev
    return prev[lb]
