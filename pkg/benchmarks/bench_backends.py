"""Compare the compiled cover/BFS kernels against the pure-Python ones.

Runs identical workloads through ``gcdlcm._core`` (Cython) and
``gcdlcm._core_py``, checks the outputs agree, and prints a timing table.

Usage::

    python3 benchmarks/bench_backends.py
"""

from __future__ import annotations

import sys
import time

from gcdlcm import SplitMix64
from gcdlcm import _core_py

try:
    from gcdlcm import _core
except ImportError:
    sys.exit("compiled backend not available; reinstall with the C extension built")


def random_cover(seed: int, universe_size: int, num_sets: int, draws: int):
    """A feasible random cover instance; missing elements are patched in round-robin."""
    rng = SplitMix64(seed)
    sets = []
    for _ in range(num_sets):
        sets.append(tuple(sorted({rng.below(universe_size) for _ in range(draws)})))
    covered = {e for s in sets for e in s}
    for i, missing in enumerate(sorted(set(range(universe_size)) - covered)):
        sets[i % num_sets] = tuple(sorted(set(sets[i % num_sets]) | {missing}))
    return universe_size, sets


def bench(fn, args, repeats: int):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    workloads = [
        ("greedy n=4096 k=600", "greedy_cover",
         random_cover(1, universe_size=4096, num_sets=600, draws=256), 5),
        ("greedy n=512 k=4000", "greedy_cover",
         random_cover(2, universe_size=512, num_sets=4000, draws=24), 5),
        ("exact n=96 k=26 (large sets)", "exact_cover",
         random_cover(4, universe_size=96, num_sets=26, draws=18), 3),
        ("exact n=60 k=40 (small sets)", "exact_cover",
         random_cover(5, universe_size=60, num_sets=40, draws=6), 2),
        ("bfs m=500000", "bfs_reached", (500_000, (3, 7, 4999)), 3),
    ]
    rows = []
    for label, kernel, args, repeats in workloads:
        t_pure, r_pure = bench(getattr(_core_py, kernel), args, repeats)
        t_comp, r_comp = bench(getattr(_core, kernel), args, repeats)
        same = r_pure == r_comp if kernel == "bfs_reached" else list(r_pure) == list(r_comp)
        if not same:
            sys.exit(f"backend outputs disagree on {label}: {r_pure!r} vs {r_comp!r}")
        rows.append((label, t_pure, t_comp, t_pure / t_comp))
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure (s)':>10}  {'compiled (s)':>12}  {'speedup':>8}")
    for label, t_pure, t_comp, speedup in rows:
        print(f"{label:<{width}}  {t_pure:>10.4f}  {t_comp:>12.4f}  {speedup:>7.1f}x")


if __name__ == "__main__":
    main()
