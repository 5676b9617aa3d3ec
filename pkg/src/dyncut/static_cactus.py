"""Static minimum-cut computation and cactus construction.

``static_min_cut`` runs maximum-adjacency-ordering contraction sweeps: each
sweep records the last vertex's cut of the phase and contracts the final two
vertices of the ordering, plus every edge whose sweep certificate proves its
endpoints more connected than the best cut seen so far (which is what makes
repeated sweeps collapse large graphs quickly).

``build_cactus`` constructs a cactus of ALL minimum cuts recursively: find an
edge (u, v) with lambda(u, v) = lambda (contracting edges that are better
connected), peel the nested chain of minimum u-v cuts from the max-flow
residual, recurse on each chain piece with its complement contracted, and glue
the child cacti along the chain — with a cycle wherever consecutive chain cuts
overlap at half weight.

``build_uv_cactus`` emits just the chain of nested minimum u-v cuts as a path
cactus: every represented cut is minimum; completeness is not guaranteed when
crossing u-v cuts exist.
"""

from __future__ import annotations

import random
from collections import deque

import numpy as np

from . import static_kernels as sk
from .cactus import Cactus, CactusError
from .flow import FlowNetwork
from .graph import DynGraph
from .oracles import CutOracleResult, DinicFlow, oracle_all_min_cuts  # noqa: F401

# above this (vertices x arcs) budget the chain extraction keeps only the two
# extreme cuts instead of probing every vertex's residual closure
_CHAIN_WORK_BUDGET = 50_000_000


def connected_components(g: DynGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        q = deque([s])
        while q:
            u = q.popleft()
            for v, _ in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    q.append(v)
        comps.append(comp)
    return comps


# -- maximum-adjacency sweeps over edge arrays ---------------------------


def _edge_arrays(g: DynGraph):
    m = g.num_edges
    eu = np.empty(m, dtype=np.int64)
    ev = np.empty(m, dtype=np.int64)
    ew = np.empty(m, dtype=np.int64)
    for i, (u, v, w) in enumerate(g.edges()):
        eu[i] = u
        ev[i] = v
        ew[i] = w
    return eu, ev, ew


def _csr(eu, ev, ew, n):
    src = np.concatenate([eu, ev])
    dst = np.concatenate([ev, eu])
    wgt = np.concatenate([ew, ew])
    order = np.argsort(src, kind="stable")
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return indptr, dst[order], wgt[order], src[order]


def _sweep(eu, ev, ew, n):
    """One sweep; returns (cut_of_phase, q per entry, src per entry, adjv, order)."""
    indptr, adjv, adjw, asrc = _csr(eu, ev, ew, n)
    narcs = len(adjv)
    q = np.zeros(narcs, dtype=np.int64)
    r = np.empty(n, dtype=np.int64)
    visited = np.empty(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    hkey = np.empty(narcs + 2, dtype=np.int64)
    hvert = np.empty(narcs + 2, dtype=np.int64)
    last_r = sk.capforest_kernel(indptr, adjv, adjw, n, q, r, visited, order, hkey, hvert)
    return int(last_r), q, asrc, adjv, order


def _coalesce(eu, ev, ew, labels, ncur):
    ru = labels[eu]
    rv = labels[ev]
    keep = ru != rv
    a = np.minimum(ru[keep], rv[keep])
    b = np.maximum(ru[keep], rv[keep])
    key = a * ncur + b
    uniq, inv = np.unique(key, return_inverse=True)
    w2 = np.bincount(inv, weights=ew[keep].astype(np.float64)).astype(np.int64)
    return uniq // ncur, uniq % ncur, w2


def _apply_unions(parent, n):
    """Flatten a union-find and relabel roots to 0..k-1; returns (labels, k)."""
    sk.uf_flatten(parent)
    roots, labels = np.unique(parent, return_inverse=True)
    return labels, len(roots)


def static_min_cut(g: DynGraph) -> int:
    """Global minimum cut weight; 0 for disconnected (or single-vertex) graphs."""
    if g.n == 0:
        raise ValueError("empty graph")
    if g.n == 1:
        return 0
    if len(connected_components(g)) > 1:
        return 0
    eu, ev, ew = _edge_arrays(g)
    deg = np.bincount(np.concatenate([eu, ev]), weights=np.concatenate([ew, ew]).astype(np.float64), minlength=g.n)
    best = int(deg.min())
    ncur = g.n
    while ncur > 1:
        cut_of_phase, q, asrc, adjv, order = _sweep(eu, ev, ew, ncur)
        if cut_of_phase < best:
            best = cut_of_phase
        parent = np.arange(ncur, dtype=np.int64)
        sel = q >= best
        sk.uf_union_pairs(parent, asrc[sel], adjv[sel])
        # the ordering's final two vertices are exactly this connected
        sk.uf_union_pairs(parent, order[-1:], order[-2:])
        labels, ncur = _apply_unions(parent, ncur)
        eu, ev, ew = _coalesce(eu, ev, ew, labels, ncur)
    return best


def _kernelize(g: DynGraph, threshold: int):
    """Contract every edge certified >= threshold connected; keeps all smaller cuts.

    Returns (kernel graph, groups) where groups[i] lists the g-vertices merged
    into kernel vertex i.
    """
    groups = [[v] for v in range(g.n)]
    if g.n <= 2 or g.num_edges == 0:
        return g, groups
    eu, ev, ew = _edge_arrays(g)
    ncur = g.n
    while ncur > 2:
        _, q, asrc, adjv, _ = _sweep(eu, ev, ew, ncur)
        sel = q >= threshold
        if not sel.any():
            break
        parent = np.arange(ncur, dtype=np.int64)
        sk.uf_union_pairs(parent, asrc[sel], adjv[sel])
        labels, nnew = _apply_unions(parent, ncur)
        new_groups: list[list[int]] = [[] for _ in range(nnew)]
        for i in range(ncur):
            new_groups[labels[i]].extend(groups[i])
        groups = new_groups
        eu, ev, ew = _coalesce(eu, ev, ew, labels, ncur)
        ncur = nnew
    kernel = DynGraph.from_edges(ncur, zip(eu.tolist(), ev.tolist(), ew.tolist()))
    return kernel, groups


# -- chain extraction from the flow residual -----------------------------


def _residual_reach(din: DinicFlow, seeds) -> frozenset[int]:
    seen = [False] * din.n
    q = deque()
    for s in seeds:
        if not seen[s]:
            seen[s] = True
            q.append(s)
    while q:
        u = q.popleft()
        for a in din.head[u]:
            v = din.to[a]
            if din.cap[a] > 0 and not seen[v]:
                seen[v] = True
                q.append(v)
    return frozenset(i for i in range(din.n) if seen[i])


def _residual_reach_rev(din: DinicFlow, t: int) -> frozenset[int]:
    seen = [False] * din.n
    seen[t] = True
    q = deque([t])
    while q:
        u = q.popleft()
        for a in din.head[u]:
            v = din.to[a]
            if din.cap[a ^ 1] > 0 and not seen[v]:
                seen[v] = True
                q.append(v)
    return frozenset(i for i in range(din.n) if seen[i])


def _min_cut_chain(g: DynGraph, u: int, v: int, lam: int, complete: bool) -> list[frozenset[int]]:
    """Nested u-sides V1 c V2 c ... c Vk of minimum u-v cuts of weight lam.

    With ``complete`` the candidates must form a chain (raises otherwise);
    without it, non-nested candidates (crossing cuts) are silently dropped.
    """
    din = DinicFlow.from_graph(g)
    value = din.max_flow(u, v)
    if value != lam:
        raise ValueError(f"lambda(u,v) is {value}, expected {lam}")
    candidates = {_residual_reach(din, [u])}
    full = frozenset(range(g.n))
    candidates.add(full - _residual_reach_rev(din, v))
    if complete or g.n * (2 * g.num_edges + 1) <= _CHAIN_WORK_BUDGET:
        # every minimum u-v cut side is the residual closure of {u, x} for
        # some vertex x, so probing all x enumerates the whole family
        for x in range(g.n):
            side = _residual_reach(din, [u, x])
            if v not in side:
                candidates.add(side)
    chain: list[frozenset[int]] = []
    for side in sorted(candidates, key=len):
        if not chain or chain[-1] < side:
            chain.append(side)
        elif complete:
            raise CactusError("minimum u-v cuts are not nested")
    return chain


def _cross_weight(g: DynGraph, a: set[int], b: set[int]) -> int:
    total = 0
    for x, y, w in g.edges():
        if (x in a and y in b) or (y in a and x in b):
            total += w
    return total


def _contract_complement(g: DynGraph, keep: list[int]) -> DynGraph:
    """Graph on keep + [x] where x (the last index) absorbs all other vertices."""
    idx = {v: i for i, v in enumerate(keep)}
    x = len(keep)
    acc: dict[tuple[int, int], int] = {}
    for a, b, w in g.edges():
        ia = idx.get(a, x)
        ib = idx.get(b, x)
        if ia == ib:
            continue
        key = (min(ia, ib), max(ia, ib))
        acc[key] = acc.get(key, 0) + w
    return DynGraph.from_edges(x + 1, ((a, b, w) for (a, b), w in acc.items()))


def _relabel(c: Cactus, groups: list[list[int]], n_orig: int) -> Cactus:
    """Same cactus structure with each member k expanded to groups[k]."""
    out = Cactus(c.lam, n_orig, pi=[-1] * n_orig)
    vmap = {}
    for vid in sorted(c.sets):
        vmap[vid] = out.add_vertex([x for k in c.sets[vid] for x in groups[k]])
    for a, nbrs in c.tree_adj.items():
        for b in nbrs:
            if a < b:
                out.add_tree_edge(vmap[a], vmap[b])
    for cid in sorted(c.cycles):
        out.add_cycle([vmap[x] for x in c.cycles[cid]])
    return out


def _single_vertex(n: int, lam: int) -> Cactus:
    c = Cactus(lam, n, pi=[-1] * n)
    c.add_vertex(range(n))
    return c


def _drop_vertex(c: Cactus, v: int) -> None:
    for w in list(c.tree_adj[v]):
        c.tree_adj[w].discard(v)
    del c.sets[v], c.tree_adj[v], c.vertex_cycles[v]


def _cleanup(c: Cactus) -> None:
    """Normalize away removable empty vertices (cut family is unchanged)."""
    changed = True
    while changed:
        changed = False
        for v in list(c.sets):
            if v not in c.sets or c.sets[v] or c.n_star == 1:
                continue
            tdeg = len(c.tree_adj[v])
            cdeg = len(c.vertex_cycles[v])
            if cdeg == 0 and tdeg <= 1:
                _drop_vertex(c, v)
                changed = True
            elif cdeg == 0 and tdeg == 2:
                # pass-through on two tree edges: both cuts coincide
                a, b = c.tree_adj[v]
                _drop_vertex(c, v)
                c.add_tree_edge(a, b)
                changed = True
            elif cdeg == 1 and tdeg == 0:
                # plain ring stop: adjacent-pair cuts have an empty side
                cid = next(iter(c.vertex_cycles[v]))
                ring = c.cycles[cid]
                ring.remove(v)
                del c.sets[v], c.tree_adj[v], c.vertex_cycles[v]
                if len(ring) == 2:
                    a, b = ring
                    del c.cycles[cid]
                    c.vertex_cycles[a].discard(cid)
                    c.vertex_cycles[b].discard(cid)
                    c.add_tree_edge(a, b)
                changed = True
            elif cdeg == 1 and tdeg == 1:
                # pendant leaf hanging off an empty ring vertex: the leaf's
                # cut equals the adjacent ring-pair cut, so absorb the leaf
                b = next(iter(c.tree_adj[v]))
                if c.tree_adj[b] == {v} and not c.vertex_cycles[b] and c.sets[b]:
                    c.sets[v] = c.sets[b]
                    for x in c.sets[b]:
                        c.pi[x] = v
                    _drop_vertex(c, b)
                    c.tree_adj[v].discard(b)
                    changed = True


def _cactus_rec(g: DynGraph, lam: int, rng: random.Random) -> Cactus:
    """Cactus of all weight-lam cuts of connected g (single vertex if none)."""
    if g.n == 1:
        return _single_vertex(1, lam)
    if g.n == 2:
        if g.edge_weight(0, 1) == lam:
            c = Cactus(lam, 2, pi=[-1, -1])
            c.add_tree_edge(c.add_vertex([0]), c.add_vertex([1]))
            return c
        return _single_vertex(2, lam)
    kg, groups = _kernelize(g, lam + 1)
    # contract edges with connectivity above lam until a critical edge (an
    # edge whose endpoints are exactly lam-connected) is found
    critical = None
    while kg.n > 1 and critical is None:
        edges = list(kg.edges())
        rng.shuffle(edges)
        net = FlowNetwork(kg)
        progressed = False
        for a, b, _ in edges:
            res = net.max_flow_bounded(a, b, bound=lam + 1)
            if res.reached_bound:
                kg2, remap = kg.contract(a, b)
                new_groups: list[list[int]] = [[] for _ in range(kg2.n)]
                for i in range(kg.n):
                    new_groups[remap[i]].extend(groups[i])
                kg, groups = kg2, new_groups
                progressed = True
                break
            assert res.value == lam
            critical = (a, b)
            break
        if not progressed and critical is None:
            break
    if kg.n == 1 or critical is None:
        return _single_vertex(g.n, lam)

    chain = _min_cut_chain(kg, critical[0], critical[1], lam, complete=True)

    if len(chain) == 1 and len(chain[0]) in (1, kg.n - 1):
        # the only minimum cut separating the critical pair isolates one
        # vertex z; the big piece would reproduce the whole graph, so instead
        # recurse with the pair contracted (covers every cut not separating
        # them) and graft the z cut back on as a pendant tree edge
        z = critical[0] if len(chain[0]) == 1 else critical[1]
        kg2, remap = kg.contract(critical[0], critical[1])
        groups2: list[list[int]] = [[] for _ in range(kg2.n)]
        for i in range(kg.n):
            groups2[remap[i]].append(i)
        base = _relabel(_cactus_rec(kg2, lam, rng), groups2, kg.n)
        holder = base.pi[z]
        base.sets[holder].discard(z)
        zv = base.add_vertex([z])
        base.add_tree_edge(zv, holder)
        _cleanup(base)
        return _relabel(base, groups, g.n)

    everything = frozenset(range(kg.n))
    pieces: list[list[int]] = [sorted(chain[0])]
    for i in range(1, len(chain)):
        pieces.append(sorted(chain[i] - chain[i - 1]))
    pieces.append(sorted(everything - chain[-1]))

    result = Cactus(lam, kg.n, pi=[-1] * kg.n)
    attach: list[int] = []
    for piece in pieces:
        sub = _contract_complement(kg, piece)
        child = _cactus_rec(sub, lam, rng)
        x = len(piece)  # the contracted-complement vertex
        vmap = {}
        for cv in sorted(child.sets):
            vmap[cv] = result.add_vertex(piece[j] for j in child.sets[cv] if j != x)
        for a, nbrs in child.tree_adj.items():
            for b in nbrs:
                if a < b:
                    result.add_tree_edge(vmap[a], vmap[b])
        for cid in sorted(child.cycles):
            result.add_cycle([vmap[y] for y in child.cycles[cid]])
        attach.append(vmap[child.pi[x]])

    # consecutive chain cuts overlap in a cycle exactly when the jump-over
    # weight is half of lam
    k = len(chain)
    pair_cyclic = [
        2 * _cross_weight(kg, set(chain[i - 1]), set(everything - chain[i])) == lam
        for i in range(1, k)
    ]
    t = 1
    while t <= k:
        b = t
        while b < k and pair_cyclic[b - 1]:
            b += 1
        if b > t:
            result.add_cycle([attach[t - 1]] + [attach[x] for x in range(t, b + 1)])
        else:
            result.add_tree_edge(attach[t - 1], attach[t])
        t = b + 1

    _cleanup(result)
    return _relabel(result, groups, g.n)


def build_cactus(g: DynGraph, seed: int = 0) -> Cactus:
    """Cactus representing ALL minimum cuts of g (lambda = 0: one vertex per
    component, no edges)."""
    if g.n == 0:
        raise ValueError("empty graph")
    comps = connected_components(g)
    if len(comps) > 1 or g.n == 1:
        c = Cactus(0, g.n, pi=[-1] * g.n)
        for comp in comps:
            c.add_vertex(comp)
        return c
    lam = static_min_cut(g)
    return _cactus_rec(g, lam, random.Random(seed))


def build_uv_cactus(g: DynGraph, u: int, v: int, lam: int) -> Cactus:
    """Path cactus of the nested minimum u-v cuts (weight exactly lam).

    Sound but possibly incomplete: crossing u-v cuts are dropped.  Raises if
    lambda(g, u, v) differs from lam.
    """
    if lam <= 0:
        raise ValueError("lam must be positive")
    chain = _min_cut_chain(g, u, v, lam, complete=False)
    everything = frozenset(range(g.n))
    pieces = [sorted(chain[0])]
    for i in range(1, len(chain)):
        pieces.append(sorted(chain[i] - chain[i - 1]))
    pieces.append(sorted(everything - chain[-1]))
    c = Cactus(lam, g.n, pi=[-1] * g.n)
    ids = [c.add_vertex(p) for p in pieces]
    for i in range(len(ids) - 1):
        c.add_tree_edge(ids[i], ids[i + 1])
    return c
