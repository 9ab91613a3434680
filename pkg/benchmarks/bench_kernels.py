#!/usr/bin/env python3
"""Benchmark the compiled search kernels against the pure-Python fallback.

Two workloads:

* random: fixpoint pruning and exhaustive subset search over seeded random
  pattern sets,
* sweep: the oracle-equivalence inner loop (both routes on every index
  subset of a corpus of small classes), which is where the acceptance suite
  spends its time.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import itertools
import random
import time

from conceptlab._kernels import pure

try:
    from conceptlab._kernels import _speedups as compiled
except ImportError:
    compiled = None


def random_workload(seed: int = 1, count: int = 4000):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = rng.randrange(1, 4)
        p = min(rng.randrange(1, 12), 3**d)
        seen = set()
        while len(seen) < p:
            seen.add(tuple(rng.randrange(3) for _ in range(d)))
        out.append(sorted(seen))
    return out


def sweep_workload():
    """Full-support pattern lists from every <=4-concept class over a
    3-point domain with entries in {0, 1, undefined}."""
    star = -1
    values = (0, 1, star)
    all_concepts = list(itertools.product(values, repeat=3))
    subsets = [
        combo
        for r in range(1, 4)
        for combo in itertools.combinations(range(3), r)
    ]
    out = []
    for k in (1, 2, 3, 4):
        for combo in itertools.combinations(all_concepts, k):
            for s in subsets:
                pats = sorted(
                    {
                        tuple(concept[i] for i in s)
                        for concept in combo
                    }
                )
                pats = [p for p in pats if star not in p]
                if pats:
                    out.append(pats)
    return out


def timed(fn, workload, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for pats in workload:
            fn(pats)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    workloads = [
        ("random", random_workload()),
        ("sweep", sweep_workload()),
    ]
    kernels = [("ds_fixpoint",), ("ds_bruteforce_mask",)]

    print(f"{'workload':<10} {'kernel':<20} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for wname, workload in workloads:
        print(f"(sizes: {len(workload)} pattern lists)")
        for (kname,) in kernels:
            pure_time = timed(getattr(pure, kname), workload, args.repeat)
            if compiled is None:
                print(f"{wname:<10} {kname:<20} {pure_time:>9.3f}s {'n/a':>10} {'n/a':>8}")
                continue
            fast_time = timed(getattr(compiled, kname), workload, args.repeat)
            print(
                f"{wname:<10} {kname:<20} {pure_time:>9.3f}s "
                f"{fast_time:>9.3f}s {pure_time / fast_time:>7.1f}x"
            )
    if compiled is None:
        print("compiled kernels not built; run: python setup.py build_ext --inplace")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
