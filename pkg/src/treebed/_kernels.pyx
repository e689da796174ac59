# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Contract-identical to ``treebed._kernels_py``: same enumeration order, same
explored counts, same lexicographically-first witnesses.  The subset kernel
packs vertex sets into one 64-bit word, so callers route instances with
more than 64 vertices to the pure fallback.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define TB_POPCOUNT(x) __builtin_popcountll(x)
    #else
    static int TB_POPCOUNT(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; ++c; }
        return c;
    }
    #endif
    """
    int TB_POPCOUNT(unsigned long long x) nogil


ctypedef struct BijCtx:
    int nv
    long long* dist
    int* prev_start     # CSR over positions: earlier-adjacent guest vertices
    int* prev_vertex
    int* perm
    unsigned char* used
    long long best
    int* best_perm
    long long explored
    bint have_best


cdef void _bij_search(BijCtx* ctx, int pos, long long acc) noexcept nogil:
    cdef int nv = ctx.nv
    cdef int lab, t
    cdef long long add
    if pos == nv:
        ctx.explored += 1
        if not ctx.have_best or acc < ctx.best:
            ctx.best = acc
            ctx.have_best = True
            memcpy(ctx.best_perm, ctx.perm, nv * sizeof(int))
        return
    for lab in range(nv):
        if ctx.used[lab]:
            continue
        add = 0
        for t in range(ctx.prev_start[pos], ctx.prev_start[pos + 1]):
            add += ctx.dist[lab * nv + ctx.perm[ctx.prev_vertex[t]]]
        ctx.perm[pos] = lab
        ctx.used[lab] = 1
        _bij_search(ctx, pos + 1, acc + add)
        ctx.used[lab] = 0


def min_wirelength_bijections(int nv, dist, edge_u, edge_v, first_choices=None):
    """See ``treebed._kernels_py.min_wirelength_bijections``."""
    cdef int nedges = len(edge_u)
    cdef BijCtx ctx
    cdef int i, t, u, v, first
    cdef long long add

    ctx.nv = nv
    ctx.dist = <long long*> calloc(nv * nv, sizeof(long long))
    ctx.prev_start = <int*> calloc(nv + 1, sizeof(int))
    ctx.prev_vertex = <int*> calloc(2 * nedges if nedges else 1, sizeof(int))
    ctx.perm = <int*> calloc(nv, sizeof(int))
    ctx.used = <unsigned char*> calloc(nv, sizeof(unsigned char))
    ctx.best_perm = <int*> calloc(nv, sizeof(int))
    if (ctx.dist == NULL or ctx.prev_start == NULL or ctx.prev_vertex == NULL
            or ctx.perm == NULL or ctx.used == NULL or ctx.best_perm == NULL):
        _bij_free(&ctx)
        raise MemoryError()

    try:
        for i in range(nv * nv):
            ctx.dist[i] = dist[i]
        # Bucket each edge under its larger endpoint so the partial cost of a
        # prefix assignment only looks backward.
        counts = [0] * nv
        for t in range(nedges):
            u = edge_u[t]
            v = edge_v[t]
            counts[u if u > v else v] += 1
        total = 0
        for i in range(nv):
            ctx.prev_start[i] = total
            total += counts[i]
        ctx.prev_start[nv] = total
        fill = [ctx.prev_start[i] for i in range(nv)]
        for t in range(nedges):
            u = edge_u[t]
            v = edge_v[t]
            if u < v:
                u, v = v, u
            ctx.prev_vertex[fill[u]] = v
            fill[u] += 1

        ctx.best = 0
        ctx.have_best = False
        ctx.explored = 0

        if first_choices is None:
            _bij_search(&ctx, 0, 0)
        else:
            for first in first_choices:
                ctx.perm[0] = first
                ctx.used[first] = 1
                # Vertex 0 has no earlier neighbors, so the partial cost is 0.
                _bij_search(&ctx, 1, 0)
                ctx.used[first] = 0

        if not ctx.have_best:
            return None, None, 0
        best_perm = tuple(ctx.best_perm[i] for i in range(nv))
        return ctx.best, best_perm, ctx.explored
    finally:
        _bij_free(&ctx)


cdef void _bij_free(BijCtx* ctx) noexcept:
    free(ctx.dist)
    free(ctx.prev_start)
    free(ctx.prev_vertex)
    free(ctx.perm)
    free(ctx.used)
    free(ctx.best_perm)


ctypedef struct SubCtx:
    int nv
    int k
    unsigned long long* adj
    int* combo
    long long best
    int* best_combo
    long long explored


cdef void _sub_search(SubCtx* ctx, int start, int depth,
                      unsigned long long mask, long long count) noexcept nogil:
    cdef int v
    if depth == ctx.k:
        ctx.explored += 1
        if count > ctx.best:
            ctx.best = count
            memcpy(ctx.best_combo, ctx.combo, ctx.k * sizeof(int))
        return
    for v in range(start, ctx.nv - (ctx.k - depth) + 1):
        ctx.combo[depth] = v
        _sub_search(ctx, v + 1, depth + 1, mask | (1ULL << v),
                    count + TB_POPCOUNT(ctx.adj[v] & mask))


def max_induced_edges(int nv, adj_masks, int k):
    """See ``treebed._kernels_py.max_induced_edges``."""
    if nv > 64:
        raise ValueError("compiled subset kernel is limited to 64 vertices")
    if k == 0:
        return 0, (), 1
    cdef SubCtx ctx
    cdef int i
    ctx.nv = nv
    ctx.k = k
    ctx.adj = <unsigned long long*> calloc(nv, sizeof(unsigned long long))
    ctx.combo = <int*> calloc(k, sizeof(int))
    ctx.best_combo = <int*> calloc(k, sizeof(int))
    if ctx.adj == NULL or ctx.combo == NULL or ctx.best_combo == NULL:
        free(ctx.adj)
        free(ctx.combo)
        free(ctx.best_combo)
        raise MemoryError()
    try:
        for i in range(nv):
            ctx.adj[i] = adj_masks[i]
        ctx.best = -1
        ctx.explored = 0
        _sub_search(&ctx, 0, 0, 0, 0)
        witness = tuple(ctx.best_combo[i] for i in range(k))
        return ctx.best, witness, ctx.explored
    finally:
        free(ctx.adj)
        free(ctx.combo)
        free(ctx.best_combo)
