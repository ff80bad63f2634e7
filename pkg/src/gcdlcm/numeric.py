"""Integer set arithmetic, prime generation and input-size accounting.

All values are plain Python ints (arbitrary precision). Sets of positive
integers are kept in canonical form: duplicate-free, ascending tuples, so
every set-valued result is byte-reproducible.
"""

from __future__ import annotations

import math
from collections.abc import Iterable

from gcdlcm.errors import DomainError

NatSet = tuple[int, ...]


def natset(values: Iterable[int]) -> NatSet:
    """Canonicalize an iterable of positive integers: dedup, sort ascending."""
    out = sorted(set(values))
    for v in out:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise DomainError(f"set elements must be positive integers, got {v!r}")
    return tuple(out)


def gcd_set(values: Iterable[int]) -> int:
    """gcd of all elements; 0 for the empty set (gcd(0, x) = x)."""
    return math.gcd(*values)


def lcm_set(values: Iterable[int]) -> int:
    """lcm of all elements; 1 for the empty set."""
    vals = list(values)
    for v in vals:
        if v == 0:
            raise DomainError("lcm is not defined for sets containing 0")
    return math.lcm(*vals)


def first_primes(m: int) -> list[int]:
    """The first m primes, via a sieve whose window doubles until m are found."""
    if m < 0:
        raise DomainError(f"prime count must be nonnegative, got {m}")
    if m == 0:
        return []
    # p_m < m (ln m + ln ln m) for m >= 6; small m use a fixed window.
    if m < 6:
        limit = 15
    else:
        limit = int(m * (math.log(m) + math.log(math.log(m)))) + 3
    while True:
        primes = _sieve(limit)
        if len(primes) >= m:
            return primes[:m]
        limit *= 2


def _sieve(limit: int) -> list[int]:
    is_prime = bytearray([1]) * (limit + 1)
    is_prime[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            start = p * p
            is_prime[start : limit + 1 : p] = b"\x00" * ((limit - start) // p + 1)
    return [i for i in range(2, limit + 1) if is_prime[i]]


def input_size(a: Iterable[int], b: Iterable[int] = ()) -> int:
    """Total bit length of the union: sum of ceil(log2(x + 1)), each element
    counted once even if listed in both sets."""
    union = set(a) | set(b)
    for v in union:
        if v < 1:
            raise DomainError(f"input-size elements must be >= 1, got {v}")
    # ceil(log2(x + 1)) == x.bit_length() for x >= 1
    return sum(v.bit_length() for v in union)
