"""Fully dynamic minimum cut maintenance.

Insertions are routed through cactus surgery (contract the path between the
endpoint images), deletions through a bounded max-flow check on the updated
graph; a dropped minimum triggers a (u,v)-cactus rebuild with the previous
cactus cached so it can be restored cheaply once the minimum comes back up.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .cactus import Cactus
from .flow import FlowNetwork
from .graph import DynGraph
from .static_cactus import (
    build_cactus,
    build_uv_cactus,
    connected_components,
    static_min_cut,
)


@dataclass
class Stats:
    insertions: int = 0
    deletions: int = 0
    insert_separated: int = 0
    flow_calls: int = 0
    early_terminations: int = 0
    exact_results: int = 0
    full_recomputes: int = 0
    uv_rebuilds: int = 0
    cache_restores: int = 0

    def as_dict(self) -> dict[str, int]:
        return dict(vars(self))


@dataclass
class CactusCache:
    cached: Cactus
    lambda1: int
    pending_insertions: list[tuple[int, int, int]] = field(default_factory=list)
    delta: float = 2.0


class DynamicMinCut:
    """Maintains lambda(G) and a cactus of (known) minimum cuts of G."""

    def __init__(self, graph: DynGraph, gamma: int = 1, delta: float = 2.0, seed: int = 0) -> None:
        if graph.n >= 2 and not 0 <= gamma < graph.n:
            raise ValueError(f"gamma must be in [0, {graph.n})")
        self.graph = graph
        self.gamma = gamma
        self.delta = delta
        self.seed = seed
        self.cactus = build_cactus(graph, seed)
        self.flow = FlowNetwork(graph)
        self.cache: CactusCache | None = None
        self.stats = Stats()
        self.stats.full_recomputes += 1

    # -- queries ---------------------------------------------------------

    def current_lambda(self) -> int:
        return self.cactus.lam

    def current_cut(self) -> frozenset[int]:
        """One side of some minimum cut of the live graph."""
        c = self.cactus
        if c.lam == 0:
            if c.n_star < 2:
                raise ValueError("no cut exists: single-vertex graph")
            return frozenset(next(iter(c.sets.values())))
        for side in c.represented_cut_sides():
            if side and len(side) < self.graph.n:
                return side
        raise AssertionError("cactus with lambda > 0 represents no cut")

    def current_most_balanced(self) -> frozenset[int]:
        c = self.cactus
        if c.lam == 0:
            if c.n_star < 2:
                raise ValueError("no cut exists: single-vertex graph")
            n = self.graph.n
            best = max(c.sets.values(), key=lambda s: min(len(s), n - len(s)))
            return frozenset(best)
        return c.most_balanced_cut()

    # -- updates ---------------------------------------------------------

    def insert(self, u: int, v: int, w: int = 1) -> None:
        self.graph.insert_edge(u, v, w)
        self.flow.apply_insert(u, v, w)
        self.stats.insertions += 1
        if self.cache is not None:
            self.cache.pending_insertions.append((u, v, w))
        self._insert_surgery(u, v)

    def _insert_surgery(self, u: int, v: int) -> None:
        c = self.cactus
        pu, pv = c.locate(u), c.locate(v)
        if pu == pv:
            return
        self.stats.insert_separated += 1
        if c.lam == 0:
            c.merge_components(pu, pv)
            if c.n_star == 1:
                self._collapse()
            return
        c.contract_path(c.find_path(pu, pv))
        if c.non_empty_count() <= 1:
            self._collapse()

    def delete(self, u: int, v: int) -> None:
        self.graph.delete_edge(u, v)
        self.flow.apply_delete(u, v)
        self.stats.deletions += 1
        lam = self.cactus.lam
        if lam == 0:
            if not self._connected(u, v):
                part = self._component_of(u)
                self.cactus.split_component(self.cactus.locate(u), part)
            return
        res = self.flow.max_flow_bounded(u, v, bound=lam, gamma=self.gamma)
        self.stats.flow_calls += 1
        if res.reached_bound:
            # still lam-connected: every represented cut is still minimum
            self.stats.early_terminations += 1
            return
        self.stats.exact_results += 1
        self.cache = CactusCache(self.cactus, lam, [], self.delta)
        if res.value == 0:
            c = Cactus(0, self.graph.n, pi=[-1] * self.graph.n)
            for comp in connected_components(self.graph):
                c.add_vertex(comp)
            self.cactus = c
        else:
            self.cactus = build_uv_cactus(self.graph, u, v, res.value)
            self.stats.uv_rebuilds += 1

    # -- cache / recompute ----------------------------------------------

    def try_restore_from_cache(self) -> bool:
        """At a collapse point, restore the cached cactus if lambda is back to
        its cached value and few insertions are pending; otherwise recompute."""
        if self.cache is None:
            self._recompute()
            return False
        cache, self.cache = self.cache, None
        lam_new = static_min_cut(self.graph)
        ratio = len(cache.pending_insertions) / max(cache.cached.n_star, 1)
        if lam_new != cache.lambda1 or ratio >= cache.delta:
            self._recompute()
            return False
        self.cactus = cache.cached
        self.stats.cache_restores += 1
        for u, v, _ in cache.pending_insertions:
            c = self.cactus
            pu, pv = c.locate(u), c.locate(v)
            if pu == pv:
                continue
            c.contract_path(c.find_path(pu, pv))
            if c.non_empty_count() <= 1:
                self._recompute()
                break
        return True

    def _collapse(self) -> None:
        if self.cache is not None:
            self.try_restore_from_cache()
        else:
            self._recompute()

    def _recompute(self) -> None:
        self.cache = None
        self.cactus = build_cactus(self.graph, self.seed)
        self.stats.full_recomputes += 1

    # -- helpers ---------------------------------------------------------

    def _connected(self, u: int, v: int) -> bool:
        return v in self._component_of(u)

    def _component_of(self, u: int) -> set[int]:
        seen = {u}
        q = deque([u])
        while q:
            x = q.popleft()
            for y, _ in self.graph.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    q.append(y)
        return seen
