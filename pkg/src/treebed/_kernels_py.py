"""Pure-Python enumeration kernels.

Same contract as the compiled module ``treebed._kernels``; see
``treebed.kernels`` for the dispatch logic.  These run anywhere but are a
couple of orders of magnitude slower, which matters once factorials bite.
"""

from __future__ import annotations

from itertools import combinations, permutations

__all__ = ["min_wirelength_bijections", "max_induced_edges"]


def min_wirelength_bijections(nv, dist, edge_u, edge_v, first_choices=None):
    """Exhaustively minimize total edge length over all bijections.

    Parameters
    ----------
    nv:
        Number of vertices (and labels); both sides are ``0..nv-1`` here.
    dist:
        Flat row-major ``nv * nv`` distance table between labels.
    edge_u, edge_v:
        Parallel arrays of guest edge endpoints (0-based).
    first_choices:
        Optional sorted labels allowed as the image of vertex 0; ``None``
        means unrestricted.  Used for symmetry reduction by the caller.

    Returns ``(best_total, best_assignment, explored)`` where
    ``best_assignment`` is the lexicographically smallest optimal tuple
    (within the restriction) and ``explored`` counts complete bijections
    evaluated.
    """
    labels = range(nv)
    if first_choices is None:
        first_choices = labels
    pairs = list(zip(edge_u, edge_v))
    best = None
    best_perm = None
    explored = 0
    for first in first_choices:
        rest = [lab for lab in labels if lab != first]
        for tail in permutations(rest):
            perm = (first,) + tail
            total = 0
            for u, v in pairs:
                total += dist[perm[u] * nv + perm[v]]
            explored += 1
            if best is None or total < best:
                best = total
                best_perm = perm
    return best, best_perm, explored


def max_induced_edges(nv, adj_masks, k):
    """Maximize induced edge count over all k-subsets of ``0..nv-1``.

    ``adj_masks[v]`` is the neighbor bitmask of vertex ``v``.  Returns
    ``(best_count, witness, explored)`` with the lexicographically first
    witness tuple and the number of subsets examined.
    """
    best = -1
    witness = None
    explored = 0
    for combo in combinations(range(nv), k):
        mask = 0
        count = 0
        for v in combo:
            count += (adj_masks[v] & mask).bit_count()
            mask |= 1 << v
        explored += 1
        if count > best:
            best = count
            witness = combo
    return best, witness, explored
