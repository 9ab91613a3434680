"""Backend equivalence: the compiled kernels must agree with the pure
fallback on random workloads, and the two search routes must agree with
each other."""

import itertools
import random

import pytest

from conceptlab import _kernels
from conceptlab._kernels import pure

compiled = pytest.importorskip(
    "conceptlab._kernels._speedups", reason="compiled kernels not built"
)


def random_patterns(rng, p, d, alphabet):
    p = min(p, alphabet**d)
    seen = set()
    while len(seen) < p:
        seen.add(tuple(rng.randrange(alphabet) for _ in range(d)))
    return sorted(seen)


class TestBackendEquivalence:
    def test_fixpoint_agrees_on_random_inputs(self):
        rng = random.Random(101)
        for _ in range(400):
            pats = random_patterns(
                rng, rng.randrange(1, 10), rng.randrange(1, 4), 3
            )
            assert compiled.ds_fixpoint(pats) == pure.ds_fixpoint(pats)

    def test_bruteforce_agrees_on_random_inputs(self):
        rng = random.Random(103)
        for _ in range(400):
            pats = random_patterns(
                rng, rng.randrange(1, 9), rng.randrange(1, 4), 3
            )
            assert compiled.ds_bruteforce_mask(pats) == pure.ds_bruteforce_mask(
                pats
            )

    def test_empty_and_degenerate_inputs(self):
        for impl in (compiled, pure):
            assert impl.ds_fixpoint([]) == []
            assert impl.ds_bruteforce_mask([]) == 0
            assert impl.ds_fixpoint([(0,)]) == []
            assert impl.ds_bruteforce_mask([(0,)]) == 0

    def test_bruteforce_guard(self):
        pats = [(i,) for i in range(21)]
        for impl in (compiled, pure):
            with pytest.raises(ValueError):
                impl.ds_bruteforce_mask(pats)


class TestRouteAgreement:
    def test_fixpoint_nonempty_iff_some_subset_valid(self):
        rng = random.Random(107)
        for impl in (compiled, pure):
            for _ in range(300):
                pats = random_patterns(
                    rng, rng.randrange(1, 9), rng.randrange(1, 4), 3
                )
                fix = impl.ds_fixpoint(pats)
                mask = impl.ds_bruteforce_mask(pats)
                assert bool(fix) == bool(mask)

    def test_fixpoint_is_maximal_and_valid(self):
        rng = random.Random(109)
        for _ in range(200):
            pats = random_patterns(
                rng, rng.randrange(2, 9), rng.randrange(1, 4), 3
            )
            fix = set(_kernels.ds_fixpoint(pats))
            d = len(pats[0])
            # validity: every survivor has an i-neighbor among survivors
            for f in fix:
                for i in range(d):
                    assert any(
                        g in fix
                        and pats[g][i] != pats[f][i]
                        and all(
                            pats[g][j] == pats[f][j]
                            for j in range(d)
                            if j != i
                        )
                        for g in fix
                    )
            # maximality: every valid subset found by exhaustion is inside
            mask = _kernels.ds_bruteforce_mask(pats)
            if mask:
                chosen = {q for q in range(len(pats)) if (mask >> q) & 1}
                assert chosen <= fix

    def test_full_cubes_survive_whole(self):
        for d in (1, 2, 3):
            pats = sorted(itertools.product((0, 1), repeat=d))
            assert _kernels.ds_fixpoint(pats) == list(range(len(pats)))
