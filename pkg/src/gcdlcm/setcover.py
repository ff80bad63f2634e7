"""Minimum-cover instances and the greedy / exact solvers.

The universe is {0, ..., universe_size - 1}; sets are index lists. The
greedy solver carries the classical harmonic-number guarantee
|greedy| <= H(|X|) * OPT; the exact solver returns the lexicographically
smallest index list among all minimum covers, so results are canonical
and reproducible. Search kernels live in the compiled/pure backend pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from gcdlcm import _kernel
from gcdlcm.errors import DomainError, InfeasibleError


@dataclass(frozen=True)
class CoverInstance:
    """Universe size plus an ordered list of index sets (canonicalized:
    each set sorted and duplicate-free; the list order is meaningful)."""

    universe_size: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not isinstance(self.universe_size, int) or self.universe_size < 0:
            raise DomainError(f"universe size must be a nonnegative int, got {self.universe_size!r}")
        canon = []
        for s in self.sets:
            t = tuple(sorted(set(s)))
            for e in t:
                if not isinstance(e, int) or e < 0 or e >= self.universe_size:
                    raise DomainError(
                        f"set element {e!r} outside universe of size {self.universe_size}"
                    )
            canon.append(t)
        object.__setattr__(self, "sets", tuple(canon))


@dataclass(frozen=True)
class CoverSolution:
    chosen: tuple[int, ...]
    is_optimal: bool

    @property
    def size(self) -> int:
        return len(self.chosen)


def _check_feasible(inst: CoverInstance) -> None:
    covered = set()
    for s in inst.sets:
        covered.update(s)
    for x in range(inst.universe_size):
        if x not in covered:
            raise InfeasibleError(
                f"element {x} is contained in no set", certificate={"uncoverable_element": x}
            )


def greedy_cover(inst: CoverInstance) -> CoverSolution:
    """Greedy approximation; ties break to the lowest set index.

    Optimal only when the answer has size 0 or 1; flagged accordingly.
    """
    _check_feasible(inst)
    chosen = _kernel.greedy_cover(inst.universe_size, inst.sets)
    return CoverSolution(chosen=tuple(sorted(chosen)), is_optimal=len(chosen) <= 1)


def exact_cover(inst: CoverInstance) -> CoverSolution:
    """Minimum cover; among minimum covers, the lexicographically smallest
    index list. An empty universe is covered by the empty subfamily."""
    _check_feasible(inst)
    chosen = _kernel.exact_cover(inst.universe_size, inst.sets)
    return CoverSolution(chosen=tuple(chosen), is_optimal=True)


def decide_cover(inst: CoverInstance, k: int) -> bool:
    """Is there a cover of size <= k? Infeasible instances answer no."""
    if k < 0:
        return False
    try:
        return exact_cover(inst).size <= k
    except InfeasibleError:
        return False
