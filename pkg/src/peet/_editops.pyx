# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled edit-distance kernels; mirrors ``_editops_py`` exactly."""

from libc.stdlib cimport free, malloc


def char_distance(str a, str b):
    """Levenshtein distance between two strings, unit costs."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    cdef Py_ssize_t *prev = <Py_ssize_t *> malloc((lb + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *curr = <Py_ssize_t *> malloc((lb + 1) * sizeof(Py_ssize_t))
    if prev == NULL or curr == NULL:
        free(prev)
        free(curr)
        raise MemoryError()
    cdef Py_ssize_t i, j, best, up, left, result
    cdef Py_ssize_t *tmp
    cdef Py_UCS4 ca
    try:
        for j in range(lb + 1):
            prev[j] = j
        for i in range(1, la + 1):
            curr[0] = i
            ca = a[i - 1]
            for j in range(1, lb + 1):
                best = prev[j - 1] + (0 if ca == <Py_UCS4> b[j - 1] else 1)
                up = prev[j] + 1
                if up < best:
                    best = up
                left = curr[j - 1] + 1
                if left < best:
                    best = left
                curr[j] = best
            tmp = prev
            prev = curr
            curr = tmp
        result = prev[lb]
    finally:
        free(prev)
        free(curr)
    return result


def token_distance(list a, list b):
    """Levenshtein distance between two token sequences, unit costs."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    cdef Py_ssize_t *prev = <Py_ssize_t *> malloc((lb + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *curr = <Py_ssize_t *> malloc((lb + 1) * sizeof(Py_ssize_t))
    if prev == NULL or curr == NULL:
        free(prev)
        free(curr)
        raise MemoryError()
    cdef Py_ssize_t i, j, best, up, left, result
    cdef Py_ssize_t *tmp
    cdef object ta
    try:
        for j in range(lb + 1):
            prev[j] = j
        for i in range(1, la + 1):
            curr[0] = i
            ta = a[i - 1]
            for j in range(1, lb + 1):
                best = prev[j - 1] + (0 if ta == b[j - 1] else 1)
                up = prev[j] + 1
                if up < best:
                    best = up
                left = curr[j - 1] + 1
                if left < best:
                    best = left
                curr[j] = best
            tmp = prev
            prev = curr
            curr = tmp
        result = prev[lb]
    finally:
        free(prev)
        free(curr)
    return result
