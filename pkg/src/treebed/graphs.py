"""Undirected simple graphs and balanced complete multipartite guests.

Vertices are the integers ``1..vertex_count`` throughout.  Edges are stored
as ``(min, max)`` tuples so every edge has exactly one representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

__all__ = [
    "Graph",
    "Guest",
    "build_complete_multipartite",
    "build_guest",
    "induced_edge_count",
]


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    Parameters
    ----------
    vertex_count:
        Number of vertices; the vertex set is ``1..vertex_count``.
    edges:
        Normalized ``(min, max)`` pairs with distinct endpoints in range.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError(f"vertex_count must be positive, got {self.vertex_count}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u < v <= self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) is out of range or not normalized")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, normalizing edge orientation along the way."""
        return cls(vertex_count, frozenset(_normalize_edge(u, v) for u, v in edges))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        """Neighbor sets keyed by vertex; includes isolated vertices."""
        nbrs: dict[int, set[int]] = {v: set() for v in range(1, self.vertex_count + 1)}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Guest:
    """A balanced complete multipartite graph on ``2**n`` vertices.

    The graph is ``K_{r,...,r}`` with ``2**p`` partite sets of ``r = 2**(n-p)``
    vertices each.  Vertex ``m`` belongs to partite set ``((m - 1) % 2**p) + 1``,
    so the partite sets interleave: any window of consecutive vertices is
    spread as evenly as possible over the partite sets.
    """

    graph: Graph
    n: int
    p: int

    @property
    def part_count(self) -> int:
        return 1 << self.p

    @property
    def part_size(self) -> int:
        return 1 << (self.n - self.p)

    @property
    def degree(self) -> int:
        """Common degree: everything outside the vertex's own partite set."""
        return (1 << self.n) - self.part_size

    def partite_of(self, m: int) -> int:
        if not 1 <= m <= self.graph.vertex_count:
            raise ValueError(f"vertex {m} out of range 1..{self.graph.vertex_count}")
        return ((m - 1) % self.part_count) + 1

    @cached_property
    def partites(self) -> tuple[frozenset[int], ...]:
        parts: list[set[int]] = [set() for _ in range(self.part_count)]
        for m in range(1, self.graph.vertex_count + 1):
            parts[(m - 1) % self.part_count].add(m)
        return tuple(frozenset(s) for s in parts)


def build_complete_multipartite(part_sizes: Iterable[int]) -> Graph:
    """Complete multipartite graph with the given partite set sizes.

    Vertices are numbered block by block: the first partite set gets
    ``1..part_sizes[0]``, the second the next block, and so on.  Two
    vertices are adjacent exactly when they lie in different blocks.
    """
    sizes = list(part_sizes)
    if len(sizes) < 2:
        raise ValueError("need at least two partite sets")
    if any(s < 1 for s in sizes):
        raise ValueError("partite set sizes must be positive")
    block_of: list[int] = []
    for b, size in enumerate(sizes):
        block_of.extend([b] * size)
    count = len(block_of)
    edges = frozenset(
        (u, v)
        for u in range(1, count + 1)
        for v in range(u + 1, count + 1)
        if block_of[u - 1] != block_of[v - 1]
    )
    return Graph(count, edges)


def build_guest(n: int, p: int) -> Guest:
    """Guest graph on ``2**n`` vertices with ``2**p`` interleaved partite sets.

    Requires ``2 <= p <= n <= 20``.  The upper bound keeps instances inside
    the integer-width and memory envelope the rest of the package assumes.
    """
    if not 2 <= p <= n:
        raise ValueError(f"need 2 <= p <= n, got n={n}, p={p}")
    if n > 20:
        raise ValueError(f"n={n} exceeds the supported maximum of 20")
    count = 1 << n
    parts = 1 << p
    edges = frozenset(
        (u, v)
        for u in range(1, count + 1)
        for v in range(u + 1, count + 1)
        if (u - 1) % parts != (v - 1) % parts
    )
    return Guest(Graph(count, edges), n, p)


def induced_edge_count(graph: Graph, subset: Iterable[int]) -> int:
    """Number of edges with both endpoints in ``subset``."""
    chosen = set(subset)
    for v in chosen:
        if not 1 <= v <= graph.vertex_count:
            raise ValueError(f"vertex {v} out of range 1..{graph.vertex_count}")
    adjacency = graph.adjacency
    # Each induced edge is seen from both endpoints.
    return sum(len(adjacency[v] & chosen) for v in chosen) // 2
