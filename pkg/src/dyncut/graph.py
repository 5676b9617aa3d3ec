"""Mutable weighted undirected simple graph with O(1)-expected edge lookup."""

from __future__ import annotations

from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised on invalid graph updates (self-loops, missing edges, bad weights)."""


class DynGraph:
    """Undirected simple graph over a fixed vertex set {0, ..., n-1}.

    Edge weights are strictly positive integers.  Inserting an edge that is
    already present accumulates its weight; deleting an edge removes it fully.
    Adjacency entries are swap-removed on deletion, so positions of entries are
    not stable across mutations.
    """

    __slots__ = ("n", "_adj", "_index", "total_weight", "num_edges", "version")

    def __init__(self, n: int) -> None:
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        self.n = n
        # _adj[u] holds [v, w] pairs; _index[(u, v)] is the position of v in _adj[u]
        self._adj: list[list[list[int]]] = [[] for _ in range(n)]
        self._index: dict[tuple[int, int], int] = {}
        self.total_weight = 0
        self.num_edges = 0
        self.version = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "DynGraph":
        g = cls(n)
        for u, v, w in edges:
            g.insert_edge(u, v, w)
        return g

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._index

    def edge_weight(self, u: int, v: int) -> int:
        """Weight of edge (u, v), or 0 if absent."""
        i = self._index.get((u, v))
        return 0 if i is None else self._adj[u][i][1]

    def degree(self, v: int) -> int:
        """Weighted degree: sum of incident edge weights."""
        return sum(w for _, w in self._adj[v])

    def neighbors(self, v: int) -> list[tuple[int, int]]:
        """List of (neighbor, weight) pairs."""
        return [(x, w) for x, w in self._adj[v]]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """All edges as (u, v, w) with u < v."""
        for u, nbrs in enumerate(self._adj):
            for v, w in nbrs:
                if u < v:
                    yield u, v, w

    # -- updates ---------------------------------------------------------

    def insert_edge(self, u: int, v: int, w: int) -> None:
        if u == v:
            raise GraphError(f"self-loop ({u},{v}) rejected")
        if w <= 0:
            raise GraphError(f"nonpositive weight {w} rejected")
        self._check_vertex(u)
        self._check_vertex(v)
        i = self._index.get((u, v))
        if i is not None:
            self._adj[u][i][1] += w
            j = self._index[(v, u)]
            self._adj[v][j][1] += w
        else:
            self._index[(u, v)] = len(self._adj[u])
            self._adj[u].append([v, w])
            self._index[(v, u)] = len(self._adj[v])
            self._adj[v].append([u, w])
            self.num_edges += 1
        self.total_weight += w
        self.version += 1

    def delete_edge(self, u: int, v: int) -> int:
        i = self._index.get((u, v))
        if i is None:
            raise GraphError(f"edge ({u},{v}) does not exist")
        w = self._adj[u][i][1]
        self._remove_half(u, v, i)
        self._remove_half(v, u, self._index[(v, u)])
        self.total_weight -= w
        self.num_edges -= 1
        self.version += 1
        return w

    def _remove_half(self, u: int, v: int, i: int) -> None:
        nbrs = self._adj[u]
        last = nbrs[-1]
        nbrs[i] = last
        nbrs.pop()
        del self._index[(u, v)]
        if i < len(nbrs):
            self._index[(u, last[0])] = i

    def contract(self, u: int, v: int) -> tuple["DynGraph", list[int]]:
        """Merge v into u; returns (new graph, merge map old id -> new id).

        Parallel edges merge by weight summation; the (u, v) edge, if present,
        becomes a dropped self-loop.  New vertex ids are compacted.
        """
        if u == v:
            raise GraphError("cannot contract a vertex with itself")
        self._check_vertex(u)
        self._check_vertex(v)
        remap = [0] * self.n
        k = 0
        for x in range(self.n):
            if x == v:
                continue
            remap[x] = k
            k += 1
        remap[v] = remap[u]
        g = DynGraph(self.n - 1)
        for a, b, w in self.edges():
            ra, rb = remap[a], remap[b]
            if ra != rb:
                g.insert_edge(ra, rb, w)
        return g, remap

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0,{self.n})")

    def __repr__(self) -> str:
        return f"DynGraph(n={self.n}, m={self.num_edges}, W={self.total_weight})"
