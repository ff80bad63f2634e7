"""Coprime basis of an integer set with the full exponent matrix.

A coprime basis of a set A is a list of pairwise coprime integers >= 2
such that every element of A is exactly a product of powers of basis
elements. Bases are not unique; this implementation guarantees the
defining invariants plus determinism (same input, same basis), nothing
more. Computed by pairwise refinement: while two entries share a common
divisor h > 1, split them against h. The entry product strictly shrinks
each step, so the loop terminates.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from gcdlcm.errors import DomainError
from gcdlcm.numeric import NatSet, natset


@dataclass(frozen=True)
class CoprimeBasis:
    """Basis with exponent matrix: rows follow source order, columns basis order."""

    source: NatSet
    basis: tuple[int, ...]
    exponents: tuple[tuple[int, ...], ...]

    def exponent(self, a: int, p: int) -> int:
        """Multiplicity of basis element p in source element a."""
        return self.exponents[self.source.index(a)][self.basis.index(p)]

    def reconstruct(self, a: int) -> int:
        """Product of basis powers for a's row; equals a by the invariant."""
        row = self.exponents[self.source.index(a)]
        return math.prod(p**e for p, e in zip(self.basis, row))


def _refine(entries: set[int]) -> list[int]:
    """Fixed point of pairwise splitting; returns an ascending coprime list.

    The pair picked each step is the lexicographically first (by ascending
    value order) with gcd > 1, so the result is deterministic. Entries
    equal to 1 are dropped; equal values merge.
    """
    current = sorted(entries)
    while True:
        found = None
        for i in range(len(current)):
            for j in range(i + 1, len(current)):
                h = math.gcd(current[i], current[j])
                if h > 1:
                    found = (current[i], current[j], h)
                    break
            if found:
                break
        if found is None:
            return current
        p, q, h = found
        merged = set(current)
        merged.discard(p)
        merged.discard(q)
        for v in (p // h, q // h, h):
            if v > 1:
                merged.add(v)
        current = sorted(merged)


def compute_basis(a: Iterable[int]) -> CoprimeBasis:
    """Coprime basis of a set of positive integers.

    Elements equal to 1 get an all-zero exponent row and never enter the
    refinement. If dividing out all basis elements leaves a residual > 1
    (cannot happen for a correct refinement, kept as a safety net), the
    residual is folded into the basis and extraction restarts.
    """
    source = natset(a)
    basis = _refine({v for v in source if v > 1})
    while True:
        rows: list[tuple[int, ...]] = []
        residuals: set[int] = set()
        for v in source:
            row = []
            rem = v
            for p in basis:
                e = 0
                while rem % p == 0:
                    rem //= p
                    e += 1
                row.append(e)
            if rem > 1:
                residuals.add(rem)
            rows.append(tuple(row))
        if not residuals:
            return CoprimeBasis(source=source, basis=tuple(basis), exponents=tuple(rows))
        basis = _refine(set(basis) | residuals)


def exponent_profile(cb: CoprimeBasis, stat: str) -> dict[int, int]:
    """Per basis element, the max ("max") or min ("min") exponent over all rows.

    The product of p**profile[p] equals lcm(source) for "max" and
    gcd(source) for "min".
    """
    if stat not in ("max", "min"):
        raise DomainError(f"stat must be 'max' or 'min', got {stat!r}")
    if not cb.source:
        raise DomainError("exponent profile of an empty set does not exist")
    agg = max if stat == "max" else min
    return {
        p: agg(row[col] for row in cb.exponents)
        for col, p in enumerate(cb.basis)
    }
