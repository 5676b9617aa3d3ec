"""Cactus representation of minimum cuts and its incremental surgery.

A cactus vertex holds a (possibly empty) set of original-graph vertices; the
``pi`` array maps each original vertex to its cactus vertex.  Tree edges are
kept in an adjacency dict; every cycle is an ordered ring of vertex ids of
length >= 3 (a squeezed "cycle" of two vertices is normalized to a tree edge).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


class CactusError(RuntimeError):
    pass


@dataclass
class PathStep:
    kind: str  # "tree" | "cycle"
    a: int  # tree endpoints, or cycle entry
    b: int  # tree endpoint, or cycle exit
    cycle_id: int = -1


@dataclass
class Cactus:
    lam: int
    n_orig: int
    sets: dict[int, set[int]] = field(default_factory=dict)
    pi: list[int] = field(default_factory=list)
    tree_adj: dict[int, set[int]] = field(default_factory=dict)
    cycles: dict[int, list[int]] = field(default_factory=dict)
    vertex_cycles: dict[int, set[int]] = field(default_factory=dict)
    _next_vid: int = 0
    _next_cid: int = 0

    # -- construction helpers -------------------------------------------

    def add_vertex(self, members=()) -> int:
        vid = self._next_vid
        self._next_vid += 1
        self.sets[vid] = set(members)
        self.tree_adj[vid] = set()
        self.vertex_cycles[vid] = set()
        for x in self.sets[vid]:
            self.pi[x] = vid
        return vid

    def add_tree_edge(self, a: int, b: int) -> None:
        if a == b or b in self.tree_adj[a]:
            raise CactusError(f"bad tree edge ({a},{b})")
        self.tree_adj[a].add(b)
        self.tree_adj[b].add(a)

    def add_cycle(self, ring: list[int]) -> int:
        if len(ring) == 2:
            self.add_tree_edge(ring[0], ring[1])
            return -1
        if len(ring) < 2 or len(set(ring)) != len(ring):
            raise CactusError(f"bad ring {ring}")
        cid = self._next_cid
        self._next_cid += 1
        self.cycles[cid] = list(ring)
        for v in ring:
            self.vertex_cycles[v].add(cid)
        return cid

    # -- basic queries ---------------------------------------------------

    def locate(self, v: int) -> int:
        return self.pi[v]

    @property
    def n_star(self) -> int:
        return len(self.sets)

    @property
    def m_star(self) -> int:
        return sum(len(a) for a in self.tree_adj.values()) // 2 + sum(
            len(r) for r in self.cycles.values()
        )

    def non_empty_count(self) -> int:
        return sum(1 for s in self.sets.values() if s)

    def neighbors(self, v: int):
        """(neighbor, cycle_id) pairs; cycle_id is -1 for tree edges."""
        for w in self.tree_adj[v]:
            yield w, -1
        for cid in self.vertex_cycles[v]:
            ring = self.cycles[cid]
            i = ring.index(v)
            yield ring[(i + 1) % len(ring)], cid
            yield ring[(i - 1) % len(ring)], cid

    def _edge_cycle(self, a: int, b: int) -> int:
        """Cycle id of edge (a, b), or -1 for a tree edge."""
        if b in self.tree_adj[a]:
            return -1
        for cid in self.vertex_cycles[a] & self.vertex_cycles[b]:
            ring = self.cycles[cid]
            k = len(ring)
            i = ring.index(a)
            if ring[(i + 1) % k] == b or ring[(i - 1) % k] == b:
                return cid
        raise CactusError(f"no edge between {a} and {b}")

    # -- path finding ----------------------------------------------------

    def find_path(self, a: int, b: int) -> list[PathStep]:
        """Path between cactus vertices a and b via alternating BFS.

        Each traversed cycle contributes a single step with its entry and exit
        vertices; tree edges are individual steps.
        """
        if a == b:
            raise CactusError("path endpoints must differ")
        verts = self._vertex_path(a, b)
        steps: list[PathStep] = []
        i = 0
        while i + 1 < len(verts):
            cid = self._edge_cycle(verts[i], verts[i + 1])
            if cid == -1:
                steps.append(PathStep("tree", verts[i], verts[i + 1]))
                i += 1
            else:
                j = i + 1
                while j + 1 < len(verts) and self._edge_cycle(verts[j], verts[j + 1]) == cid:
                    j += 1
                steps.append(PathStep("cycle", verts[i], verts[j], cid))
                i = j
        return steps

    def _vertex_path(self, a: int, b: int) -> list[int]:
        # alternating BFS: expand the smaller frontier each round
        parent_a = {a: -1}
        parent_b = {b: -1}
        frontier_a = [a]
        frontier_b = [b]
        meet = -1
        while meet == -1:
            if not frontier_a and not frontier_b:
                raise CactusError(f"vertices {a} and {b} are disconnected")
            if frontier_a and (not frontier_b or len(frontier_a) <= len(frontier_b)):
                frontier, parent, other = frontier_a, parent_a, parent_b
                nxt = []
                for v in frontier:
                    for w, _ in self.neighbors(v):
                        if w not in parent:
                            parent[w] = v
                            nxt.append(w)
                        if w in other:
                            meet = w
                            break
                    if meet != -1:
                        break
                frontier_a = nxt
            else:
                frontier, parent, other = frontier_b, parent_b, parent_a
                nxt = []
                for v in frontier:
                    for w, _ in self.neighbors(v):
                        if w not in parent:
                            parent[w] = v
                            nxt.append(w)
                        if w in other:
                            meet = w
                            break
                    if meet != -1:
                        break
                frontier_b = nxt
        left = []
        x = meet
        while x != -1:
            left.append(x)
            x = parent_a[x]
        left.reverse()
        x = parent_b[meet]
        while x != -1:
            left.append(x)
            x = parent_b[x]
        return left

    # -- contraction (edge insertion surgery) ----------------------------

    def contract_path(self, steps: list[PathStep]) -> None:
        """Contract all tree edges of the path and squeeze traversed cycles."""
        merged: set[int] = set()
        for st in steps:
            merged.add(st.a)
            merged.add(st.b)
        survivor = max(merged, key=lambda v: len(self.sets[v]))

        # squeeze each traversed cycle into up to two smaller cycles
        new_rings: list[list[int]] = []
        for st in steps:
            if st.kind != "cycle":
                continue
            ring = self.cycles.pop(st.cycle_id)
            for v in ring:
                self.vertex_cycles[v].discard(st.cycle_id)
            k = len(ring)
            i, j = ring.index(st.a), ring.index(st.b)
            arc1 = [ring[p % k] for p in range(i + 1, i + ((j - i) % k))]
            arc2 = [ring[p % k] for p in range(j + 1, j + ((i - j) % k))]
            for arc in (arc1, arc2):
                if arc:
                    new_rings.append([survivor] + arc)

        # drop path tree edges
        for st in steps:
            if st.kind == "tree":
                self.tree_adj[st.a].discard(st.b)
                self.tree_adj[st.b].discard(st.a)

        # fold every merged vertex into the survivor
        for x in list(merged):
            if x == survivor:
                continue
            for w in list(self.tree_adj[x]):
                self.tree_adj[w].discard(x)
                if w in merged or w == survivor:
                    raise CactusError("unexpected tree edge inside contracted path")
                self.tree_adj[w].add(survivor)
                self.tree_adj[survivor].add(w)
            for cid in list(self.vertex_cycles[x]):
                ring = self.cycles[cid]
                if survivor in ring:
                    raise CactusError("two path vertices share an off-path cycle")
                ring[ring.index(x)] = survivor
                self.vertex_cycles[survivor].add(cid)
            for orig in self.sets[x]:
                self.pi[orig] = survivor
            self.sets[survivor] |= self.sets[x]
            del self.sets[x]
            del self.tree_adj[x]
            del self.vertex_cycles[x]

        for ring in new_rings:
            self.add_cycle(ring)

    def merge_components(self, a: int, b: int) -> None:
        """Merge two cactus vertices in the disconnected (lambda = 0) regime."""
        if self.lam != 0:
            raise CactusError("merge_components only applies when lambda = 0")
        if a == b:
            raise CactusError("component vertices must differ")
        keep, gone = (a, b) if len(self.sets[a]) >= len(self.sets[b]) else (b, a)
        for orig in self.sets[gone]:
            self.pi[orig] = keep
        self.sets[keep] |= self.sets[gone]
        del self.sets[gone]
        del self.tree_adj[gone]
        del self.vertex_cycles[gone]

    def split_component(self, old: int, part: set[int]) -> None:
        """Split ``part`` out of cactus vertex ``old`` (lambda = 0 regime)."""
        if self.lam != 0:
            raise CactusError("split_component only applies when lambda = 0")
        vid = self.add_vertex(part)
        self.sets[old] -= part
        for x in part:
            self.pi[x] = vid

    # -- cut extraction --------------------------------------------------

    def _component_side(self, start: int, banned: set[frozenset[int]]) -> set[int]:
        """Cactus vertices reachable from start avoiding banned edges."""
        seen = {start}
        q = deque([start])
        while q:
            v = q.popleft()
            for w, _ in self.neighbors(v):
                if w not in seen and frozenset((v, w)) not in banned:
                    seen.add(w)
                    q.append(w)
        return seen

    def _expand(self, cactus_side) -> frozenset[int]:
        out: set[int] = set()
        for v in cactus_side:
            out |= self.sets[v]
        return frozenset(out)

    def _canonical(self, side: frozenset[int]) -> frozenset[int]:
        if 0 in side:
            return side
        return frozenset(range(self.n_orig)) - side

    def represented_cut_sides(self):
        """One original-vertex side per represented cut (may repeat)."""
        for a, nbrs in self.tree_adj.items():
            for b in nbrs:
                if a < b:
                    yield self._expand(self._component_side(a, {frozenset((a, b))}))
        for cid, ring in self.cycles.items():
            k = len(ring)
            edges = [frozenset((ring[i], ring[(i + 1) % k])) for i in range(k)]
            for p in range(k):
                for q in range(p + 1, k):
                    banned = {edges[p], edges[q]}
                    side = self._component_side(ring[(p + 1) % k], banned)
                    yield self._expand(side)

    def enumerate_cuts(self) -> list[frozenset[int]]:
        """Duplicate-free canonical sides of all represented minimum cuts."""
        if self.lam <= 0:
            raise CactusError("enumerate_cuts requires lambda > 0")
        full = frozenset(range(self.n_orig))
        out = set()
        for side in self.represented_cut_sides():
            if side and side != full:
                out.add(self._canonical(side))
        return sorted(out, key=sorted)

    # -- most balanced cut -----------------------------------------------

    def most_balanced_cut(self) -> frozenset[int]:
        """Represented cut side maximizing the smaller side's vertex count."""
        if self.lam <= 0 or self.n_star < 2:
            raise CactusError("most_balanced_cut requires lambda > 0 and >= 2 vertices")
        total = self.n_orig
        root = next(iter(self.sets))
        # iterative DFS over the block-cut forest: nodes are ('v', id) / ('c', cid)
        sub: dict[tuple[str, int], int] = {}
        parent: dict[tuple[str, int], tuple[str, int] | None] = {("v", root): None}
        order = []
        stack = [("v", root)]
        while stack:
            node = stack.pop()
            order.append(node)
            if node[0] == "v":
                v = node[1]
                for w in self.tree_adj[v]:
                    cn = ("v", w)
                    if cn not in parent and parent.get(node) != cn:
                        parent[cn] = node
                        stack.append(cn)
                for cid in self.vertex_cycles[v]:
                    cn = ("c", cid)
                    if cn not in parent:
                        parent[cn] = node
                        stack.append(cn)
            else:
                for w in self.cycles[node[1]]:
                    cn = ("v", w)
                    if cn not in parent:
                        parent[cn] = node
                        stack.append(cn)
        child_sum: dict[tuple[str, int], int] = {n: 0 for n in order}
        for node in reversed(order):
            w = (len(self.sets[node[1]]) if node[0] == "v" else 0) + child_sum[node]
            sub[node] = w
            par = parent[node]
            if par is not None:
                child_sum[par] += w

        best_score = -1
        best: tuple | None = None

        def consider(score: int, item: tuple) -> None:
            nonlocal best_score, best
            if score > best_score:
                best_score = score
                best = item

        for a, nbrs in self.tree_adj.items():
            for b in nbrs:
                if parent.get(("v", b)) == ("v", a):
                    s = sub[("v", b)]
                    consider(min(s, total - s), ("tree", a, b))

        for cid, ring in self.cycles.items():
            k = len(ring)
            hang = []
            for v in ring:
                if parent[("v", v)] == ("c", cid):
                    hang.append(sub[("v", v)])
                else:
                    hang.append(total - sub[("c", cid)])
            prefix = [0]
            for h in hang + hang:
                prefix.append(prefix[-1] + h)
            j = 1
            for i in range(k):
                # the arc strictly after position i up to jj: sum over i+1..jj
                if j < i + 1:
                    j = i + 1
                while j < i + k - 1 and (prefix[j + 1] - prefix[i + 1]) * 2 <= total:
                    j += 1
                for jj in (j - 1, j):
                    if i + 1 <= jj <= i + k - 1:
                        s = prefix[jj + 1] - prefix[i + 1]
                        consider(min(s, total - s), ("cycle", cid, i, jj % k))

        if best is None:
            raise CactusError("no represented cuts")
        if best[0] == "tree":
            _, a, b = best
            side = self._component_side(b, {frozenset((a, b))})
        else:
            _, cid, i, jj = best
            ring = self.cycles[cid]
            k = len(ring)
            banned = {
                frozenset((ring[i], ring[(i + 1) % k])),
                frozenset((ring[jj], ring[(jj + 1) % k])),
            }
            side = self._component_side(ring[(i + 1) % k], banned)
        return self._expand(side)

    # -- serialization and checks ---------------------------------------

    def dump(self) -> str:
        """Debug text format: one vertex line `id: v1 v2 ...`, one edge line
        `a b tree|cycle:<cid>` each."""
        lines = []
        for vid in sorted(self.sets):
            members = " ".join(str(x) for x in sorted(self.sets[vid]))
            lines.append(f"{vid}: {members}".rstrip())
        for a in sorted(self.tree_adj):
            for b in sorted(self.tree_adj[a]):
                if a < b:
                    lines.append(f"{a} {b} tree")
        for cid in sorted(self.cycles):
            ring = self.cycles[cid]
            k = len(ring)
            for i in range(k):
                a, b = ring[i], ring[(i + 1) % k]
                lines.append(f"{min(a, b)} {max(a, b)} cycle:{cid}")
        return "\n".join(lines) + "\n"

    def validate(self) -> None:
        """Structural invariants; raises CactusError on violation."""
        seen: set[int] = set()
        for vid, members in self.sets.items():
            for x in members:
                if x in seen or self.pi[x] != vid:
                    raise CactusError(f"pi inconsistent at original vertex {x}")
                seen.add(x)
        if len(seen) != self.n_orig:
            raise CactusError("pi is not total")
        if self.n_star > 2 * max(self.n_orig, 1):
            raise CactusError("cactus too large")
        for cid, ring in self.cycles.items():
            if len(ring) < 3 or len(set(ring)) != len(ring):
                raise CactusError(f"bad ring {cid}")
            for v in ring:
                if cid not in self.vertex_cycles[v]:
                    raise CactusError("vertex_cycles out of sync")
        ids = list(self.cycles)
        for i, c1 in enumerate(ids):
            for c2 in ids[i + 1 :]:
                if len(set(self.cycles[c1]) & set(self.cycles[c2])) > 1:
                    raise CactusError(f"cycles {c1},{c2} share more than one vertex")
        if self.lam > 0 and self.n_star > 0:
            start = next(iter(self.sets))
            comp = self._component_side(start, set())
            if len(comp) != self.n_star:
                raise CactusError("cactus disconnected with lambda > 0")
            if self.m_star != self.n_star - 1 + len(self.cycles):
                raise CactusError("edge count inconsistent with cycle count")
        if self.lam == 0 and self.m_star != 0:
            raise CactusError("lambda = 0 cactus must be edgeless")
