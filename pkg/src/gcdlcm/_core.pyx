# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: cover search and circulant reachability.

Twin of ``gcdlcm._core_py`` with identical algorithms and tie-breaks, so
outputs are interchangeable byte for byte; tests assert parity. Callers
guarantee well-formed input: set elements in range, instances feasible,
steps reduced mod the node count. Universes are multiword bitsets.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memset

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define POPCNT64(x) __builtin_popcountll(x)
    #define CTZ64(x) __builtin_ctzll(x)
    #else
    static int POPCNT64(unsigned long long x) {
        int n = 0;
        while (x) { x &= x - 1; ++n; }
        return n;
    }
    static int CTZ64(unsigned long long x) {
        int n = 0;
        while (!(x & 1ULL)) { x >>= 1; ++n; }
        return n;
    }
    #endif
    """
    int POPCNT64(unsigned long long) nogil
    int CTZ64(unsigned long long) nogil

ctypedef unsigned long long u64


cdef inline bint words_eq(u64 *a, u64 *b, Py_ssize_t nw) nogil:
    cdef Py_ssize_t w
    for w in range(nw):
        if a[w] != b[w]:
            return False
    return True


cdef inline int diff_count(u64 *full, u64 *covered, Py_ssize_t nw) nogil:
    cdef Py_ssize_t w
    cdef int n = 0
    for w in range(nw):
        n += POPCNT64(full[w] & ~covered[w])
    return n


cdef inline int gain_count(u64 *mask, u64 *covered, Py_ssize_t nw) nogil:
    cdef Py_ssize_t w
    cdef int n = 0
    for w in range(nw):
        n += POPCNT64(mask[w] & ~covered[w])
    return n


cdef int _pack(object sets, Py_ssize_t nw, u64 *out) except -1:
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t e
    for s in sets:
        for e_obj in s:
            e = e_obj
            out[i * nw + (e >> 6)] |= (<u64>1) << (e & 63)
        i += 1
    return 0


cdef void _fill_full(u64 *full, Py_ssize_t n, Py_ssize_t nw) nogil:
    cdef Py_ssize_t w
    for w in range(nw):
        full[w] = 0
    for w in range(n >> 6):
        full[w] = <u64>0xFFFFFFFFFFFFFFFF
    if n & 63:
        full[n >> 6] = ((<u64>1) << (n & 63)) - 1


def greedy_cover(universe_size, sets):
    """Repeatedly pick the set covering the most uncovered elements.

    Ties break to the lowest set index. Returns indices in pick order.
    """
    cdef Py_ssize_t n = universe_size
    cdef Py_ssize_t nsets = len(sets)
    cdef Py_ssize_t nw = (n + 63) >> 6
    if nw == 0:
        nw = 1
    cdef u64 *masks = <u64 *>calloc(max(nsets, 1) * nw, sizeof(u64))
    cdef u64 *covered = <u64 *>calloc(nw, sizeof(u64))
    cdef u64 *full = <u64 *>calloc(nw, sizeof(u64))
    if masks == NULL or covered == NULL or full == NULL:
        free(masks); free(covered); free(full)
        raise MemoryError()
    cdef Py_ssize_t i, w
    cdef int gain, best_gain
    cdef Py_ssize_t best_i
    chosen = []
    try:
        _pack(sets, nw, masks)
        _fill_full(full, n, nw)
        while not words_eq(covered, full, nw):
            best_i = -1
            best_gain = 0
            for i in range(nsets):
                gain = gain_count(masks + i * nw, covered, nw)
                if gain > best_gain:
                    best_gain = gain
                    best_i = i
            if best_i < 0:
                raise RuntimeError("infeasible cover instance reached the kernel")
            chosen.append(best_i)
            for w in range(nw):
                covered[w] |= masks[best_i * nw + w]
        return chosen
    finally:
        free(masks); free(covered); free(full)


cdef struct P1Ctx:
    Py_ssize_t nw
    Py_ssize_t nsets
    u64 *masks
    u64 *full
    int *es_start
    int *es_data
    int best
    u64 *cov_stack
    u64 *tried
    int *cand_idx
    int *cand_gain


cdef void _p1_dfs(P1Ctx *c, int depth):
    cdef Py_ssize_t nw = c.nw
    cdef u64 *covered = c.cov_stack + depth * nw
    if words_eq(covered, c.full, nw):
        if depth < c.best:
            c.best = depth
        return
    cdef int maxgain = 0
    cdef int g
    cdef Py_ssize_t i, w
    for i in range(c.nsets):
        g = gain_count(c.masks + i * nw, covered, nw)
        if g > maxgain:
            maxgain = g
    cdef int need = (diff_count(c.full, covered, nw) + maxgain - 1) / maxgain
    if depth + need >= c.best:
        return
    # branch on the uncovered element in the fewest sets; ties: lowest element
    cdef int x = -1
    cdef int fewest = <int>c.nsets + 1
    cdef int e, cnt
    cdef u64 r
    for w in range(nw):
        r = c.full[w] & ~covered[w]
        while r:
            e = <int>(w << 6) + CTZ64(r)
            cnt = c.es_start[e + 1] - c.es_start[e]
            if cnt < fewest:
                fewest = cnt
                x = e
            r &= r - 1
    # candidates sorted by (gain descending, index ascending); the insertion
    # sort is stable and rows arrive in index order, so ties keep low indices
    cdef int *cidx = c.cand_idx + depth * c.nsets
    cdef int *cgain = c.cand_gain + depth * c.nsets
    cdef int ncand = 0
    cdef int j, k, ii, gi
    for j in range(c.es_start[x], c.es_start[x + 1]):
        ii = c.es_data[j]
        gi = gain_count(c.masks + ii * nw, covered, nw)
        k = ncand
        while k > 0 and cgain[k - 1] < gi:
            cgain[k] = cgain[k - 1]
            cidx[k] = cidx[k - 1]
            k -= 1
        cgain[k] = gi
        cidx[k] = ii
        ncand += 1
    cdef u64 *tried = c.tried + depth * c.nsets * nw
    cdef u64 *trow
    cdef u64 *nextcov = c.cov_stack + (depth + 1) * nw
    cdef int ntried = 0
    cdef int t
    cdef bint dominated
    for j in range(ncand):
        ii = cidx[j]
        trow = tried + ntried * nw
        for w in range(nw):
            trow[w] = c.masks[ii * nw + w] & ~covered[w]
        dominated = False
        for t in range(ntried):
            dominated = True
            for w in range(nw):
                if trow[w] & ~tried[t * nw + w]:
                    dominated = False
                    break
            if dominated:
                break
        if dominated:
            continue  # gain dominated by a sibling already explored
        ntried += 1
        for w in range(nw):
            nextcov[w] = covered[w] | c.masks[ii * nw + w]
        _p1_dfs(c, depth + 1)
        if depth + need >= c.best:
            return


cdef struct P2Ctx:
    Py_ssize_t nw
    Py_ssize_t nsets
    u64 *masks
    u64 *full
    u64 *suffix_union
    int *suffix_maxbits
    u64 *cov_stack
    int *chosen


cdef bint _p2_dfs(P2Ctx *c, int start, int depth, int left):
    cdef Py_ssize_t nw = c.nw
    cdef u64 *covered = c.cov_stack + depth * nw
    if words_eq(covered, c.full, nw):
        return True
    if left == 0:
        return False
    cdef Py_ssize_t w
    for w in range(nw):
        if (covered[w] | c.suffix_union[start * nw + w]) != c.full[w]:
            return False
    if diff_count(c.full, covered, nw) > left * c.suffix_maxbits[start]:
        return False
    cdef int i
    cdef u64 *m
    cdef u64 *nextcov = c.cov_stack + (depth + 1) * nw
    cdef bint adds
    for i in range(start, <int>c.nsets):
        m = c.masks + i * nw
        adds = False
        for w in range(nw):
            if m[w] & ~covered[w]:
                adds = True
                break
        if not adds:
            continue  # minimum covers never include a set adding nothing
        c.chosen[depth] = i
        for w in range(nw):
            nextcov[w] = covered[w] | m[w]
        if _p2_dfs(c, i + 1, depth + 1, left - 1):
            return True
    return False


def exact_cover(universe_size, sets):
    """Minimum-cardinality cover, canonical witness.

    Two phases: branch-and-bound on the uncovered element contained in the
    fewest sets gives the optimal size; a lexicographic depth-first search
    at that size returns the smallest index list among all minimum covers.
    """
    cdef Py_ssize_t n = universe_size
    cdef Py_ssize_t nsets = len(sets)
    if n == 0:
        return []
    cdef int ub = len(greedy_cover(universe_size, sets))
    cdef Py_ssize_t nw = (n + 63) >> 6
    cdef u64 *masks = <u64 *>calloc(max(nsets, 1) * nw, sizeof(u64))
    cdef u64 *full = <u64 *>calloc(nw, sizeof(u64))
    cdef int *es_count = <int *>calloc(n, sizeof(int))
    cdef int *es_start = <int *>calloc(n + 1, sizeof(int))
    cdef int *es_data = NULL
    cdef u64 *cov_stack = <u64 *>calloc((ub + 1) * nw, sizeof(u64))
    cdef u64 *tried = <u64 *>calloc(max(ub, 1) * max(nsets, 1) * nw, sizeof(u64))
    cdef int *cand_idx = <int *>calloc(max(ub, 1) * max(nsets, 1), sizeof(int))
    cdef int *cand_gain = <int *>calloc(max(ub, 1) * max(nsets, 1), sizeof(int))
    cdef u64 *suffix_union = <u64 *>calloc((nsets + 1) * nw, sizeof(u64))
    cdef int *suffix_maxbits = <int *>calloc(nsets + 1, sizeof(int))
    cdef int *chosen = NULL
    cdef P1Ctx c1
    cdef P2Ctx c2
    cdef Py_ssize_t i, w
    cdef int e, total, pc, size
    try:
        if (masks == NULL or full == NULL or es_count == NULL or es_start == NULL
                or cov_stack == NULL or tried == NULL or cand_idx == NULL
                or cand_gain == NULL or suffix_union == NULL or suffix_maxbits == NULL):
            raise MemoryError()
        _pack(sets, nw, masks)
        _fill_full(full, n, nw)
        # CSR of element -> containing set indices, rows in index order
        total = 0
        for i in range(nsets):
            for w in range(nw):
                total += POPCNT64(masks[i * nw + w])
        es_data = <int *>calloc(max(total, 1), sizeof(int))
        if es_data == NULL:
            raise MemoryError()
        for i in range(nsets):
            for s_e in sets[i]:
                e = s_e
                es_count[e] += 1
        es_start[0] = 0
        for e in range(<int>n):
            es_start[e + 1] = es_start[e] + es_count[e]
            es_count[e] = 0
        for i in range(nsets):
            for s_e in sets[i]:
                e = s_e
                es_data[es_start[e] + es_count[e]] = <int>i
                es_count[e] += 1

        c1.nw = nw
        c1.nsets = nsets
        c1.masks = masks
        c1.full = full
        c1.es_start = es_start
        c1.es_data = es_data
        c1.best = ub
        c1.cov_stack = cov_stack
        c1.tried = tried
        c1.cand_idx = cand_idx
        c1.cand_gain = cand_gain
        _p1_dfs(&c1, 0)
        size = c1.best

        for i in range(nsets - 1, -1, -1):
            pc = 0
            for w in range(nw):
                suffix_union[i * nw + w] = suffix_union[(i + 1) * nw + w] | masks[i * nw + w]
                pc += POPCNT64(masks[i * nw + w])
            suffix_maxbits[i] = max(suffix_maxbits[i + 1], pc)

        chosen = <int *>calloc(max(size, 1), sizeof(int))
        if chosen == NULL:
            raise MemoryError()
        memset(cov_stack, 0, (ub + 1) * nw * sizeof(u64))
        c2.nw = nw
        c2.nsets = nsets
        c2.masks = masks
        c2.full = full
        c2.suffix_union = suffix_union
        c2.suffix_maxbits = suffix_maxbits
        c2.cov_stack = cov_stack
        c2.chosen = chosen
        if not _p2_dfs(&c2, 0, 0, size):
            raise RuntimeError("internal: lexicographic search missed the known optimum")
        return [chosen[k] for k in range(size)]
    finally:
        free(masks); free(full); free(es_count); free(es_start); free(es_data)
        free(cov_stack); free(tried); free(cand_idx); free(cand_gain)
        free(suffix_union); free(suffix_maxbits); free(chosen)


def bfs_reached(node_count, steps):
    """Nodes reachable from 0 stepping +-a mod node_count for each step a.

    Steps must already be reduced to the range [1, node_count - 1].
    """
    cdef Py_ssize_t m = node_count
    cdef Py_ssize_t k = len(steps)
    cdef long *st = <long *>calloc(max(k, 1), sizeof(long))
    cdef char *seen = <char *>calloc(m, sizeof(char))
    cdef long *frontier = <long *>calloc(m, sizeof(long))
    cdef long *nxt = <long *>calloc(m, sizeof(long))
    cdef Py_ssize_t j
    cdef Py_ssize_t nf, nn, count, fi
    cdef long v, w_node, u_node, a
    cdef long *tmp
    try:
        if st == NULL or seen == NULL or frontier == NULL or nxt == NULL:
            raise MemoryError()
        for j in range(k):
            st[j] = steps[j]
        seen[0] = 1
        count = 1
        frontier[0] = 0
        nf = 1
        while nf:
            nn = 0
            for fi in range(nf):
                v = frontier[fi]
                for j in range(k):
                    a = st[j]
                    w_node = v + a
                    if w_node >= m:
                        w_node -= m
                    if not seen[w_node]:
                        seen[w_node] = 1
                        count += 1
                        nxt[nn] = w_node
                        nn += 1
                    u_node = v - a
                    if u_node < 0:
                        u_node += m
                    if not seen[u_node]:
                        seen[u_node] = 1
                        count += 1
                        nxt[nn] = u_node
                        nn += 1
            tmp = frontier
            frontier = nxt
            nxt = tmp
            nf = nn
        return count
    finally:
        free(st); free(seen); free(frontier); free(nxt)
