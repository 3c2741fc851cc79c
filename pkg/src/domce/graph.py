"""Immutable simple-graph representation and precomputed neighborhood tables."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    pass


class Graph:
    """Undirected simple graph on dense vertex ids 0..n-1.

    Immutable after construction; all solver mutation lives in the criterion
    states, so one Graph can be shared across concurrent runs.
    """

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        self.n = n
        self.adj = tuple(tuple(nbrs) for nbrs in adjacency)
        self.degrees = tuple(len(a) for a in self.adj)
        self.m = sum(self.degrees) // 2
        self.max_degree = max(self.degrees, default=0)
        # open/closed neighbor sets and bitmasks, used by the naive checkers
        # and the exact oracle (kept independent of the incremental kernels)
        self.neighbor_sets = tuple(frozenset(a) for a in self.adj)
        self.open_masks = tuple(
            sum(1 << u for u in a) for a in self.adj
        )
        self.closed_masks = tuple(
            m | (1 << v) for v, m in enumerate(self.open_masks)
        )
        # CSR adjacency for the compiled kernels
        self.adj_indptr, self.adj_indices = _csr(self.adj, n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (v, u) for v in range(self.n) for u in self.adj[v] if v < u
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _csr(adjacency, n):
    indptr = np.zeros(n + 1, dtype=np.intc)
    for v, nbrs in enumerate(adjacency):
        indptr[v + 1] = indptr[v] + len(nbrs)
    indices = np.zeros(int(indptr[-1]), dtype=np.intc)
    pos = 0
    for nbrs in adjacency:
        for u in nbrs:
            indices[pos] = u
            pos += 1
    indptr.flags.writeable = False
    indices.flags.writeable = False
    return indptr, indices


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list, deduplicating and validating.

    Raises GraphError on out-of-range endpoints or self-loops.
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    seen: set[tuple[int, int]] = set()
    for pair in edge_list:
        u, v = pair
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphError(f"edge ({u}, {v}): endpoint out of range [0, {n})")
        if u == v:
            raise GraphError(f"edge ({u}, {v}): self-loops are not allowed")
        seen.add((u, v) if u < v else (v, u))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, [sorted(a) for a in nbrs])


def has_isolated_vertex(g: Graph) -> bool:
    return any(d == 0 for d in g.degrees)


class NeighborhoodTables:
    """Closed neighborhoods N[v] and distance-<=3 balls for every vertex.

    Precomputed once per graph (before any solver iteration); the secure
    domination updates touch exactly the vertices in ball3(v). Both tables
    include v itself: adding/removing v changes v's own counters too.
    """

    def __init__(self, g: Graph):
        n = g.n
        closed = tuple(
            tuple(sorted(g.adj[v] + (v,))) for v in range(n)
        )
        ball3 = tuple(_ball3(g, v) for v in range(n))
        self.n = n
        self._closed = closed
        self._ball3 = ball3
        self.closed_indptr, self.closed_indices = _csr(closed, n)
        self.ball3_indptr, self.ball3_indices = _csr(ball3, n)

    def closed(self, v: int) -> tuple[int, ...]:
        return self._closed[v]

    def ball3(self, v: int) -> tuple[int, ...]:
        return self._ball3[v]


def _ball3(g: Graph, source: int) -> tuple[int, ...]:
    # truncated BFS to depth 3
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if dist[v] == 3:
            continue
        for u in g.adj[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return tuple(sorted(dist))


def build_tables(g: Graph) -> NeighborhoodTables:
    return NeighborhoodTables(g)
