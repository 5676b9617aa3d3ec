"""Maximum-flow engine for the deletion check.

A :class:`FlowNetwork` mirrors a :class:`~dyncut.graph.DynGraph` as paired
directed arcs.  It supports bounded push-relabel solves with lowest-label
selection, early termination, local relabeling and implicit per-problem flow
reset.  The arc structure is kept in sync incrementally via
:meth:`FlowNetwork.apply_insert` / :meth:`FlowNetwork.apply_delete`; if the
underlying graph was mutated behind its back it is rebuilt lazily.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import flow_kernels as fk
from .graph import DynGraph

UNBOUNDED = 1 << 62


@dataclass
class FlowResult:
    kind: str  # "reached_bound" | "exact"
    value: int
    source_side: frozenset[int] | None = None

    @property
    def reached_bound(self) -> bool:
        return self.kind == "reached_bound"

    @property
    def exact(self) -> bool:
        return self.kind == "exact"


class FlowNetwork:
    """Residual network over a DynGraph snapshot with implicit flow reset."""

    def __init__(self, graph: DynGraph) -> None:
        self.graph = graph
        self.n = graph.n
        self.current_problem = 0
        self._rebuild()

    # -- arc structure ---------------------------------------------------

    def _alloc(self, narcs: int) -> None:
        cap_slots = max(16, narcs)
        self.to = np.zeros(cap_slots, dtype=np.int64)
        self.nxt = np.full(cap_slots, -1, dtype=np.int64)
        self.cap = np.zeros(cap_slots, dtype=np.int64)
        self.flow = np.zeros(cap_slots, dtype=np.int64)
        self.stamp = np.full(cap_slots, -1, dtype=np.int64)

    def _rebuild(self) -> None:
        g = self.graph
        n = self.n
        self.head = np.full(n, -1, dtype=np.int64)
        self._alloc(2 * g.num_edges)
        self.num_arcs = 0
        self.arc_index: dict[tuple[int, int], int] = {}
        self.dead_edges = 0
        for u, v, w in g.edges():
            self._append_pair(u, v, w)
        self.labels = np.zeros(n, dtype=np.int64)
        self.excess = np.zeros(n, dtype=np.int64)
        self._cur = np.zeros(n, dtype=np.int64)
        self._bhead = np.zeros(n + 2, dtype=np.int64)
        self._btail = np.zeros(n + 2, dtype=np.int64)
        self._bnext = np.zeros(n, dtype=np.int64)
        self._inb = np.zeros(n, dtype=np.int64)
        self._queue = np.zeros(max(n, 1), dtype=np.int64)
        self._mark = np.zeros(n, dtype=np.int64)
        self._graph_version = g.version

    def _grow(self) -> None:
        new = max(32, 2 * len(self.to))
        for name in ("to", "nxt", "cap", "flow", "stamp"):
            old = getattr(self, name)
            arr = np.full(new, -1, dtype=np.int64) if name in ("nxt", "stamp") else np.zeros(new, dtype=np.int64)
            arr[: len(old)] = old
            setattr(self, name, arr)

    def _append_pair(self, u: int, v: int, w: int) -> None:
        if self.num_arcs + 2 > len(self.to):
            self._grow()
        a = self.num_arcs
        self.num_arcs += 2
        self.to[a] = v
        self.nxt[a] = self.head[u]
        self.head[u] = a
        self.to[a + 1] = u
        self.nxt[a + 1] = self.head[v]
        self.head[v] = a + 1
        self.cap[a] = w
        self.cap[a + 1] = w
        self.flow[a] = 0
        self.flow[a + 1] = 0
        self.stamp[a] = -1
        self.stamp[a + 1] = -1
        self.arc_index[(min(u, v), max(u, v))] = a

    def apply_insert(self, u: int, v: int, w: int) -> None:
        """Mirror a graph insertion (weight accumulation on existing edges)."""
        key = (min(u, v), max(u, v))
        a = self.arc_index.get(key)
        if a is not None:
            if self.cap[a] == 0:
                self.dead_edges -= 1
            self.cap[a] += w
            self.cap[a ^ 1] += w
        else:
            self._append_pair(u, v, w)
        self._graph_version = self.graph.version

    def apply_delete(self, u: int, v: int) -> None:
        """Mirror a graph deletion (arc pair is tombstoned, slot reused)."""
        a = self.arc_index[(min(u, v), max(u, v))]
        self.cap[a] = 0
        self.cap[a ^ 1] = 0
        self.dead_edges += 1
        self._graph_version = self.graph.version
        if self.dead_edges * 2 > max(16, self.num_arcs // 2):
            self._rebuild()

    def sync(self) -> None:
        """Rebuild if the graph changed without matching apply_* calls."""
        if self._graph_version != self.graph.version:
            self._rebuild()

    # -- operations ------------------------------------------------------

    def reset_implicit(self) -> None:
        """Start a fresh flow problem: O(n) vertex-state clear, no arc touch."""
        self.current_problem += 1
        self.labels.fill(0)
        self.excess.fill(0)

    def local_relabel(self, s: int, t: int, gamma: int) -> None:
        """Set labels to a BFS funnel of depth gamma around the sink."""
        if s == t:
            raise ValueError("source and sink must differ")
        if not 0 <= gamma < self.n:
            raise ValueError(f"gamma must be in [0, {self.n}), got {gamma}")
        self.sync()
        fk.local_relabel_kernel(
            self.head, self.nxt, self.to, self.cap,
            self.labels, self._queue, s, t, gamma, self.n,
        )

    def max_flow_bounded(
        self, s: int, t: int, bound: int | None = None, gamma: int = 1
    ) -> FlowResult:
        """Bounded lowest-label push-relabel between s and t.

        Starts a fresh problem (implicit reset), applies local relabeling with
        depth ``gamma`` and runs until either ``bound`` units reach the sink
        (``reached_bound``) or the preflow is exhausted (``exact``, with the
        source side of a minimum s-t cut).
        """
        if s == t:
            raise ValueError("source and sink must differ")
        if bound is None:
            bound = UNBOUNDED
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        self.sync()
        self.reset_implicit()
        if bound == 0:
            return FlowResult("reached_bound", 0)
        self.local_relabel(s, t, gamma)
        kind, value = fk.max_flow_kernel(
            self.head, self.nxt, self.to, self.cap, self.flow, self.stamp,
            self.current_problem,
            self.labels, self.excess, self._cur,
            self._bhead, self._btail, self._bnext, self._inb,
            s, t, bound, self.n,
        )
        if kind == fk.KIND_REACHED_BOUND:
            return FlowResult("reached_bound", int(value))
        side = self._source_side(t)
        return FlowResult("exact", int(value), source_side=side)

    def _source_side(self, t: int) -> frozenset[int]:
        fk.sink_reachers_kernel(
            self.head, self.nxt, self.to, self.cap, self.flow, self.stamp,
            self.current_problem, self._mark, self._queue, t, self.n,
        )
        return frozenset(int(v) for v in np.nonzero(self._mark == 0)[0])

    # -- diagnostics -----------------------------------------------------

    def labeling_violations(self) -> int:
        """Residual arcs violating d(u) <= d(v) + 1 under the current problem."""
        return int(
            fk.labeling_violations_kernel(
                self.head, self.nxt, self.to, self.cap, self.flow, self.stamp,
                self.current_problem, self.labels, self.n,
            )
        )

    def effective_flow(self, u: int, v: int) -> int:
        """Signed flow on arc (u, v) in the current problem."""
        key = (min(u, v), max(u, v))
        a = self.arc_index[key]
        if u > v:
            a ^= 1
        return int(self.flow[a]) if self.stamp[a] == self.current_problem else 0
