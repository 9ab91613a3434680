"""Pure-Python search kernels.

Both kernels operate on a canonical (sorted) list of full-support patterns:
tuples of equal length with non-negative integer entries.  They implement two
deliberately independent routes to the same question so that one can serve as
a correctness oracle for the other:

* ``ds_fixpoint`` prunes patterns that lack an i-neighbor until stable and
  returns the maximal neighbor-closed subset (empty iff no witness exists).
* ``ds_bruteforce_mask`` enumerates every subset of the pattern list and
  checks the neighbor condition directly from the definition.

Two patterns are i-neighbors when they differ at coordinate i and agree at
every other coordinate.
"""

from __future__ import annotations

BRUTEFORCE_MAX_PATTERNS = 20


def ds_fixpoint(patterns: list[tuple[int, ...]]) -> list[int]:
    """Indices of the maximal subset in which every pattern has an
    i-neighbor for every coordinate i.  Returns [] when none exists."""
    p = len(patterns)
    if p == 0:
        return []
    d = len(patterns[0])
    if d == 0:
        return []
    # neighbor bitmasks: nbr[a][i] has bit b set iff patterns a, b differ
    # exactly at coordinate i
    nbr = [[0] * d for _ in range(p)]
    for a in range(p):
        pa = patterns[a]
        for b in range(a + 1, p):
            pb = patterns[b]
            diff = -1
            for i in range(d):
                if pa[i] != pb[i]:
                    if diff >= 0:
                        diff = -2
                        break
                    diff = i
            if diff >= 0:
                nbr[a][diff] |= 1 << b
                nbr[b][diff] |= 1 << a
    alive = (1 << p) - 1
    changed = True
    while changed:
        changed = False
        for f in range(p):
            if not (alive >> f) & 1:
                continue
            row = nbr[f]
            for i in range(d):
                if not row[i] & alive:
                    alive &= ~(1 << f)
                    changed = True
                    break
    return [f for f in range(p) if (alive >> f) & 1]


def ds_bruteforce_mask(patterns: list[tuple[int, ...]]) -> int:
    """First (lowest) nonzero bitmask selecting a subset in which every
    pattern has an i-neighbor for every i; 0 when no subset qualifies.

    Definition-literal exhaustive search; kept free of any shared helper so
    it stays an independent oracle for ds_fixpoint.
    """
    p = len(patterns)
    if p > BRUTEFORCE_MAX_PATTERNS:
        raise ValueError(
            f"pattern set of size {p} exceeds exhaustive-search bound "
            f"{BRUTEFORCE_MAX_PATTERNS}"
        )
    if p == 0:
        return 0
    d = len(patterns[0])
    if d == 0:
        return 0
    for mask in range(1, 1 << p):
        good = True
        for f in range(p):
            if not (mask >> f) & 1:
                continue
            pf = patterns[f]
            for i in range(d):
                found = False
                for g in range(p):
                    if g == f or not (mask >> g) & 1:
                        continue
                    pg = patterns[g]
                    if pg[i] == pf[i]:
                        continue
                    agree = True
                    for j in range(d):
                        if j != i and pg[j] != pf[j]:
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
            return mask
    return 0
