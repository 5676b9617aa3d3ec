"""Exhaustive and independent reference algorithms used for cross-checking.

These are deliberately simple: cut enumeration over all vertex subsets and a
blocking-flow (Dinic) maximum flow.  They serve as correctness anchors for the
production push-relabel engine and the cactus construction, and the blocking
flow doubles as the clean max flow used when a residual chain decomposition is
needed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .graph import DynGraph

_MAX_ORACLE_N = 20


@dataclass
class CutOracleResult:
    lam: int
    cuts: list[frozenset[int]]  # canonical: each side contains vertex 0


def _cut_weights_all_masks(g: DynGraph) -> np.ndarray:
    """weights[mask] = cut weight of side {v : bit v set in mask}."""
    n = g.n
    masks = np.arange(1 << n, dtype=np.int64)
    weights = np.zeros(1 << n, dtype=np.int64)
    for u, v, w in g.edges():
        crossing = ((masks >> u) & 1) != ((masks >> v) & 1)
        weights[crossing] += w
    return weights

def oracle_all_min_cuts(g: DynGraph) -> CutOracleResult:
    """Exact lambda and the complete list of minimum cut sides, by enumeration."""
    n = g.n
    if n > _MAX_ORACLE_N:
        raise ValueError(f"oracle limited to n <= {_MAX_ORACLE_N}, got {n}")
    if n < 2:
        raise ValueError("cuts need at least 2 vertices")
    weights = _cut_weights_all_masks(g)
    # canonical sides: contain vertex 0, proper subsets
    masks = np.arange(1 << n, dtype=np.int64)
    canonical = ((masks & 1) == 1) & (masks != (1 << n) - 1)
    lam = int(weights[canonical].min())
    hit = canonical & (weights == lam)
    cuts = [
        frozenset(v for v in range(n) if (int(mask) >> v) & 1)
        for mask in masks[hit]
    ]
    return CutOracleResult(lam=lam, cuts=cuts)

def oracle_min_st_cut(g: DynGraph, s: int, t: int) -> tuple[int, frozenset[int]]:
    """Minimum s-t cut value and one s-side, by enumeration (n <= 20)."""
    n = g.n
    if n > _MAX_ORACLE_N:
        raise ValueError(f"oracle limited to n <= {_MAX_ORACLE_N}, got {n}")
    weights = _cut_weights_all_masks(g)
    masks = np.arange(1 << n, dtype=np.int64)
    sep = (((masks >> s) & 1) == 1) & (((masks >> t) & 1) == 0)
    vals = weights[sep]
    best = int(vals.min())
    mask = int(masks[sep][int(vals.argmin())])
    return best, frozenset(v for v in range(n) if (mask >> v) & 1)

def cut_value(g: DynGraph, side) -> int:
    """Weight of the cut with the given side on g."""
    side = set(side)
    total = 0
    for u, v, w in g.edges():
        if (u in side) != (v in side):
            total += w
    return total


class DinicFlow:
    """Blocking-flow maximum s-t flow over an adjacency-list residual network.

    Independent of the push-relabel engine; also provides the final residual
    graph for closure-chain extraction.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.head: list[list[int]] = [[] for _ in range(n)]

    @classmethod
    def from_graph(cls, g: DynGraph) -> "DinicFlow":
        d = cls(g.n)
        for u, v, w in g.edges():
            d.add_undirected(u, v, w)
        return d

    def add_undirected(self, u: int, v: int, w: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(w)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(w)

    def _levels(self, s: int, t: int) -> list[int]:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for a in self.head[u]:
                v = self.to[a]
                if level[v] < 0 and self.cap[a] > 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level

    def _augment(self, s: int, t: int, level: list[int], it: list[int]) -> int:
        # iterative DFS for one augmenting path in the level graph
        path: list[int] = []
        u = s
        while True:
            if u == t:
                amount = min(self.cap[a] for a in path)
                for a in path:
                    self.cap[a] -= amount
                    self.cap[a ^ 1] += amount
                return amount
            advanced = False
            while it[u] < len(self.head[u]):
                a = self.head[u][it[u]]
                v = self.to[a]
                if self.cap[a] > 0 and level[v] == level[u] + 1:
                    path.append(a)
                    u = v
                    advanced = True
                    break
                it[u] += 1
            if not advanced:
                level[u] = -1  # dead end in this phase
                if u == s:
                    return 0
                a = path.pop()
                u = self.to[a ^ 1]
                it[u] += 1

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._levels(s, t)
            if level[t] < 0:
                return total
            it = [0] * self.n
            while True:
                pushed = self._augment(s, t, level, it)
                if pushed == 0:
                    break
                total += pushed

    def residual_arcs(self):
        """Directed arcs (u, v) with positive residual capacity."""
        for u in range(self.n):
            for a in self.head[u]:
                if self.cap[a] > 0:
                    yield u, self.to[a]

    def min_cut_side(self, s: int) -> frozenset[int]:
        """Vertices reachable from s in the residual graph (after max_flow)."""
        seen = [False] * self.n
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            for a in self.head[u]:
                v = self.to[a]
                if self.cap[a] > 0 and not seen[v]:
                    seen[v] = True
                    q.append(v)
        return frozenset(i for i in range(self.n) if seen[i])

def dinic_max_flow(g: DynGraph, s: int, t: int) -> int:
    return DinicFlow.from_graph(g).max_flow(s, t)
