"""Pure-Python kernels: cover search and circulant reachability.

Fallback twin of the compiled extension ``gcdlcm._core``. Both backends
implement identical algorithms with identical tie-breaks, so their
outputs are byte-for-byte interchangeable; tests assert parity.

Callers guarantee well-formed input: set elements in range, instances
feasible (union of sets equals the universe), steps reduced mod the node
count. Universes are represented as int bitmasks.
"""

from __future__ import annotations

from collections.abc import Sequence


def _bit_masks(sets: Sequence[Sequence[int]]) -> list[int]:
    masks = []
    for s in sets:
        m = 0
        for e in s:
            m |= 1 << e
        masks.append(m)
    return masks


def greedy_cover(universe_size: int, sets: Sequence[Sequence[int]]) -> list[int]:
    """Repeatedly pick the set covering the most uncovered elements.

    Ties break to the lowest set index. Returns indices in pick order.
    """
    masks = _bit_masks(sets)
    full = (1 << universe_size) - 1
    covered = 0
    chosen: list[int] = []
    while covered != full:
        best_i = -1
        best_gain = 0
        for i, m in enumerate(masks):
            gain = (m & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_i = i
        chosen.append(best_i)
        covered |= masks[best_i]
    return chosen


def exact_cover(universe_size: int, sets: Sequence[Sequence[int]]) -> list[int]:
    """Minimum-cardinality cover, canonical witness.

    Two phases: branch-and-bound on the uncovered element contained in the
    fewest sets gives the optimal size; a lexicographic depth-first search
    at that size returns the smallest index list among all minimum covers.
    """
    masks = _bit_masks(sets)
    full = (1 << universe_size) - 1
    if full == 0:
        return []
    ub = len(greedy_cover(universe_size, sets))
    size = _min_cover_size(universe_size, masks, full, ub)
    return _lex_min_cover(masks, full, size)


def _min_cover_size(universe_size: int, masks: list[int], full: int, ub: int) -> int:
    num_sets = len(masks)
    elem_sets = [
        [i for i, m in enumerate(masks) if (m >> x) & 1] for x in range(universe_size)
    ]
    best = ub

    def dfs(covered: int, depth: int) -> None:
        nonlocal best
        if covered == full:
            if depth < best:
                best = depth
            return
        rem = full & ~covered
        maxgain = 0
        for m in masks:
            g = (m & rem).bit_count()
            if g > maxgain:
                maxgain = g
        need = -(-rem.bit_count() // maxgain)
        if depth + need >= best:
            return
        # branch on the uncovered element in the fewest sets; ties: lowest element
        x = -1
        fewest = num_sets + 1
        r = rem
        while r:
            e = (r & -r).bit_length() - 1
            if len(elem_sets[e]) < fewest:
                fewest = len(elem_sets[e])
                x = e
            r &= r - 1
        cands = sorted(elem_sets[x], key=lambda i: (-(masks[i] & rem).bit_count(), i))
        tried: list[int] = []
        for i in cands:
            g = masks[i] & rem
            if any(g & ~t == 0 for t in tried):
                continue  # gain dominated by a sibling already explored
            tried.append(g)
            dfs(covered | masks[i], depth + 1)
            if depth + need >= best:
                return

    dfs(0, 0)
    return best


def _lex_min_cover(masks: list[int], full: int, size: int) -> list[int]:
    num_sets = len(masks)
    suffix_union = [0] * (num_sets + 1)
    suffix_maxbits = [0] * (num_sets + 1)
    for i in range(num_sets - 1, -1, -1):
        suffix_union[i] = suffix_union[i + 1] | masks[i]
        suffix_maxbits[i] = max(suffix_maxbits[i + 1], masks[i].bit_count())

    chosen: list[int] = []

    def dfs(start: int, covered: int, left: int) -> bool:
        if covered == full:
            return True
        if left == 0:
            return False
        if covered | suffix_union[start] != full:
            return False
        if (full & ~covered).bit_count() > left * suffix_maxbits[start]:
            return False
        for i in range(start, num_sets):
            if masks[i] & ~covered == 0:
                continue  # minimum covers never include a set adding nothing
            chosen.append(i)
            if dfs(i + 1, covered | masks[i], left - 1):
                return True
            chosen.pop()
        return False

    if not dfs(0, 0, size):
        raise RuntimeError("internal: lexicographic search missed the known optimum")
    return chosen


def bfs_reached(node_count: int, steps: Sequence[int]) -> int:
    """Nodes reachable from 0 stepping +-a mod node_count for each step a.

    Steps must already be reduced to the range [1, node_count - 1].
    """
    m = node_count
    seen = bytearray(m)
    seen[0] = 1
    count = 1
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for a in steps:
                w = v + a
                if w >= m:
                    w -= m
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    nxt.append(w)
                u = v - a
                if u < 0:
                    u += m
                if not seen[u]:
                    seen[u] = 1
                    count += 1
                    nxt.append(u)
        frontier = nxt
    return count
