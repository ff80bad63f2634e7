"""End-to-end subset minimization: smallest S within a such that S together
with b preserves the gcd (or lcm) of everything.

Pipeline: if b alone already attains the target, the answer is empty.
Otherwise min-gcd instances are collapsed to a single set and reduced to
minimum cover over the coprime basis; max-lcm instances build the basis of
the whole union, mark the columns whose maximum exponent b already
attains as pre-covered, and cover the rest. Cover solutions map back
through owner maps (and the elimination section) to elements of a.

A subset enumerator capped at small sizes serves as the independent
oracle for the whole pipeline.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from gcdlcm.basis import compute_basis, exponent_profile
from gcdlcm.errors import CapExceededError, DomainError
from gcdlcm.numeric import NatSet, gcd_set, lcm_set, natset
from gcdlcm.reductions import (
    BEliminationMap,
    CoverReduction,
    attainment_cover,
    eliminate_b,
    gcd_to_cover,
)
from gcdlcm.setcover import exact_cover, greedy_cover

MODES = ("min-gcd", "max-lcm")
BRUTE_FORCE_CAP = 20


@dataclass(frozen=True)
class ProblemInstance:
    a: NatSet
    b: NatSet
    mode: str

    def __post_init__(self):
        object.__setattr__(self, "a", natset(self.a))
        object.__setattr__(self, "b", natset(self.b))
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.a and not self.b:
            raise DomainError("a may be empty only if b is nonempty")


@dataclass(frozen=True)
class SolveStats:
    """Wall time plus the dimensions of the reduced cover instance."""

    elapsed_s: float | None
    universe_size: int
    num_sets: int


@dataclass(frozen=True)
class SubsetSolution:
    s: NatSet
    achieved: int
    target: int
    method: str
    optimal: bool
    stats: SolveStats

    @property
    def size(self) -> int:
        return len(self.s)


def _mode_value(mode: str, values) -> int:
    return gcd_set(values) if mode == "min-gcd" else lcm_set(values)


def _max_lcm_cover(a: NatSet, b: NatSet) -> CoverReduction:
    """Cover reduction for max-lcm with a required set b.

    Basis of the union; columns whose maximum exponent some element of b
    attains need no covering and are dropped from the universe.
    """
    cb = compute_basis(a + b)
    profile = exponent_profile(cb, "max")
    b_members = set(b)
    precovered: set[int] = set()
    for x, row in zip(cb.source, cb.exponents):
        if x in b_members:
            for col, p in enumerate(cb.basis):
                if row[col] == profile[p]:
                    precovered.add(col)
    universe_cols = [c for c in range(len(cb.basis)) if c not in precovered]
    return attainment_cover(cb, universe_cols, profile, set(a))


def reduce_instance(inst: ProblemInstance) -> tuple[CoverReduction, BEliminationMap | None]:
    """The cover reduction the solver searches, plus the elimination map
    used to collapse b (min-gcd only; None for max-lcm)."""
    if inst.mode == "min-gcd":
        bem = eliminate_b(inst.a, inst.b)
        return gcd_to_cover(bem.reduced), bem
    return _max_lcm_cover(inst.a, inst.b), None


def solve(inst: ProblemInstance, method: str = "exact") -> SubsetSolution:
    """Smallest (exact) or approximately smallest (greedy) S within a with
    the mode value of S | b equal to that of a | b.

    Greedy answers satisfy |S| <= (ln |X| + 1) * OPT over the reduced
    universe X and are exact whenever they have size 0 or 1.
    """
    if method not in ("exact", "greedy"):
        raise DomainError(f"method must be 'exact' or 'greedy', got {method!r}")
    start = time.perf_counter()
    target = _mode_value(inst.mode, inst.a + inst.b)
    if _mode_value(inst.mode, inst.b) == target:
        stats = SolveStats(time.perf_counter() - start, 0, 0)
        return SubsetSolution((), target, target, method, True, stats)

    red, bem = reduce_instance(inst)
    pull_back = bem.section.__getitem__ if bem is not None else lambda owner: owner

    cover_sol = exact_cover(red.cover) if method == "exact" else greedy_cover(red.cover)
    s = natset(pull_back(red.set_owners[i]) for i in cover_sol.chosen)
    if not s:
        # Empty universe but b alone misses the target: every element of a
        # attains it alone (min-gcd with all values collapsing to 1); take
        # the smallest.
        s = (next(x for x in inst.a if _mode_value(inst.mode, (x,) + inst.b) == target),)
    achieved = _mode_value(inst.mode, s + inst.b)
    if achieved != target:
        raise RuntimeError(f"internal: solution achieves {achieved}, target {target}")
    optimal = method == "exact" or len(s) <= 1
    stats = SolveStats(
        time.perf_counter() - start, red.cover.universe_size, len(red.cover.sets)
    )
    return SubsetSolution(s, achieved, target, method, optimal, stats)


def decide(inst: ProblemInstance, k: int) -> bool:
    """Is there S within a, |S| <= k, attaining the target together with b?"""
    if k < 0:
        raise DomainError(f"subset size bound must be nonnegative, got {k}")
    return solve(inst, "exact").size <= k


def brute_force(inst: ProblemInstance, cap: int = BRUTE_FORCE_CAP) -> SubsetSolution:
    """Independent oracle: enumerate subsets of a by (size, lexicographic)
    order and return the first attaining the target. Refuses |a| > cap."""
    if len(inst.a) > cap:
        raise CapExceededError(
            f"brute force over {len(inst.a)} elements exceeds the cap of {cap}"
        )
    start = time.perf_counter()
    target = _mode_value(inst.mode, inst.a + inst.b)
    for size in range(len(inst.a) + 1):
        for combo in combinations(inst.a, size):
            if _mode_value(inst.mode, combo + inst.b) == target:
                stats = SolveStats(time.perf_counter() - start, 0, 0)
                return SubsetSolution(combo, target, target, "brute-force", True, stats)
    raise RuntimeError("internal: the full set always attains the target")
