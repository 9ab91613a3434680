# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernels; drop-in replacements for the functions in
``pure.py`` (same contracts, same canonical-input assumptions).

The fixpoint and the exhaustive subset search are written as independent
code paths on purpose: they cross-check each other in the test suite.
"""

from libc.stdlib cimport free, malloc

BRUTEFORCE_MAX_PATTERNS = 20


cdef long *_to_buffer(object patterns, Py_ssize_t p, Py_ssize_t d) except NULL:
    cdef long *buf = <long *> malloc(p * d * sizeof(long))
    cdef Py_ssize_t a, i
    if buf == NULL:
        raise MemoryError()
    for a in range(p):
        row = patterns[a]
        for i in range(d):
            buf[a * d + i] = row[i]
    return buf


def ds_fixpoint(patterns):
    """Indices of the maximal subset in which every pattern has an
    i-neighbor for every coordinate i.  Returns [] when none exists."""
    cdef Py_ssize_t p = len(patterns)
    if p == 0:
        return []
    cdef Py_ssize_t d = len(patterns[0])
    if d == 0:
        return []
    cdef long *buf = _to_buffer(patterns, p, d)
    cdef unsigned char *alive = <unsigned char *> malloc(p)
    cdef Py_ssize_t f, g, i, j, diff
    cdef bint changed, found, agree
    if alive == NULL:
        free(buf)
        raise MemoryError()
    for f in range(p):
        alive[f] = 1
    changed = True
    while changed:
        changed = False
        for f in range(p):
            if not alive[f]:
                continue
            for i in range(d):
                found = False
                for g in range(p):
                    if g == f or not alive[g]:
                        continue
                    if buf[g * d + i] == buf[f * d + i]:
                        continue
                    agree = True
                    for j in range(d):
                        if j != i and buf[g * d + j] != buf[f * d + j]:
                            agree = False
                            break
                    if agree:
                        found = True
                        break
                if not found:
                    alive[f] = 0
                    changed = True
                    break
    result = [f for f in range(p) if alive[f]]
    free(alive)
    free(buf)
    return result


def ds_bruteforce_mask(patterns):
    """First (lowest) nonzero bitmask selecting a subset in which every
    pattern has an i-neighbor for every i; 0 when no subset qualifies."""
    cdef Py_ssize_t p = len(patterns)
    if p > BRUTEFORCE_MAX_PATTERNS:
        raise ValueError(
            "pattern set of size %d exceeds exhaustive-search bound %d"
            % (p, BRUTEFORCE_MAX_PATTERNS)
        )
    if p == 0:
        return 0
    cdef Py_ssize_t d = len(patterns[0])
    if d == 0:
        return 0
    cdef long *buf = _to_buffer(patterns, p, d)
    cdef unsigned long mask, top = (<unsigned long> 1) << p
    cdef Py_ssize_t f, g, i, j
    cdef bint good, found, agree
    mask = 1
    while mask < top:
        good = True
        for f in range(p):
            if not (mask >> f) & 1:
                continue
            for i in range(d):
                found = False
                for g in range(p):
                    if g == f or not (mask >> g) & 1:
                        continue
                    if buf[g * d + i] == buf[f * d + i]:
                        continue
                    agree = True
                    for j in range(d):
                        if j != i and buf[g * d + j] != buf[f * d + j]:
                            agree = False
                            break
                    if agree:
                        found = True
                        break
                if not found:
                    good = False
                    break
            if not good:
                break
        if good:
            free(buf)
            return mask
        mask += 1
    free(buf)
    return 0
