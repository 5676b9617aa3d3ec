"""Cactus structure and incremental surgery, cross-checked by enumeration.

Starting cacti are built by hand for graphs whose minimum cuts are obvious
(cycles: all pairs of edges; paths: all bridges), then random insertions are
replayed through find_path/contract_path and the represented cuts are compared
against the exhaustive oracle after every step.
"""

import random

import pytest

from dyncut.cactus import Cactus, CactusError
from dyncut.graph import DynGraph
from dyncut.oracles import oracle_all_min_cuts


def ring_instance(n: int, w: int = 1):
    """Cycle graph C_n with uniform weight w and its exact cut cactus."""
    g = DynGraph(n)
    for i in range(n):
        g.insert_edge(i, (i + 1) % n, w)
    c = Cactus(lam=2 * w, n_orig=n, pi=[-1] * n)
    ids = [c.add_vertex([i]) for i in range(n)]
    c.add_cycle(ids)
    return g, c

def path_instance(n: int, w: int = 1):
    """Path graph P_n with uniform weight w and its exact cut cactus."""
    g = DynGraph(n)
    for i in range(n - 1):
        g.insert_edge(i, i + 1, w)
    c = Cactus(lam=w, n_orig=n, pi=[-1] * n)
    ids = [c.add_vertex([i]) for i in range(n)]
    for i in range(n - 1):
        c.add_tree_edge(ids[i], ids[i + 1])
    return g, c


def as_sorted(cuts):
    return sorted(sorted(side) for side in cuts)


def check_matches_oracle(g: DynGraph, c: Cactus) -> None:
    ref = oracle_all_min_cuts(g)
    assert ref.lam == c.lam
    assert as_sorted(c.enumerate_cuts()) == as_sorted(ref.cuts)


class TestHandBuilt:
    def test_ring_represents_all_edge_pairs(self):
        g, c = ring_instance(6, w=3)
        c.validate()
        ref = oracle_all_min_cuts(g)
        assert ref.lam == 6 and len(ref.cuts) == 15  # C(6,2) edge pairs
        check_matches_oracle(g, c)

    def test_path_represents_all_bridges(self):
        g, c = path_instance(5, w=2)
        c.validate()
        assert len(c.enumerate_cuts()) == 4
        check_matches_oracle(g, c)

    def test_dump_format(self):
        _, c = ring_instance(3)
        text = c.dump()
        lines = text.strip().split("\n")
        assert lines[0] == "0: 0"
        assert all(line.endswith("cycle:0") for line in lines[3:])
        assert len(lines) == 6

    def test_two_vertex_ring_becomes_tree_edge(self):
        c = Cactus(lam=4, n_orig=2, pi=[-1, -1])
        a = c.add_vertex([0])
        b = c.add_vertex([1])
        assert c.add_cycle([a, b]) == -1
        assert b in c.tree_adj[a] and not c.cycles
        c.validate()


class TestPathFinding:
    def test_single_cycle_step(self):
        _, c = ring_instance(6)
        steps = c.find_path(0, 3)
        assert len(steps) == 1
        st = steps[0]
        assert st.kind == "cycle" and {st.a, st.b} == {0, 3}

    def test_tree_path_steps(self):
        _, c = path_instance(5)
        steps = c.find_path(1, 4)
        assert [s.kind for s in steps] == ["tree"] * 3
        assert steps[0].a == 1 and steps[-1].b == 4

    def test_same_vertex_rejected(self):
        _, c = ring_instance(4)
        with pytest.raises(CactusError):
            c.find_path(2, 2)

    def test_mixed_path_groups_cycle(self):
        # triangle ring with a pendant tree vertex hanging off vertex 2
        c = Cactus(lam=2, n_orig=4, pi=[-1] * 4)
        ids = [c.add_vertex([i]) for i in range(3)]
        c.add_cycle(ids)
        pend = c.add_vertex([3])
        c.add_tree_edge(ids[2], pend)
        steps = c.find_path(ids[0], pend)
        assert [s.kind for s in steps] == ["cycle", "tree"]
        assert steps[0].a == ids[0] and steps[0].b == ids[2]


class TestContraction:
    def test_chord_squeezes_ring(self):
        g, c = ring_instance(6)
        g.insert_edge(0, 3, 1)
        c.contract_path(c.find_path(c.locate(0), c.locate(3)))
        c.validate()
        # entry/exit merged, two 3-vertex arcs -> two 4-rings on the junction
        assert c.n_star == 5 and len(c.cycles) == 2
        check_matches_oracle(g, c)

    def test_adjacent_chord_leaves_single_ring(self):
        g, c = ring_instance(5)
        g.insert_edge(0, 1, 2)
        c.contract_path(c.find_path(c.locate(0), c.locate(1)))
        c.validate()
        assert c.n_star == 4 and len(c.cycles) == 1
        check_matches_oracle(g, c)

    def test_tree_edge_contraction(self):
        g, c = path_instance(6)
        g.insert_edge(1, 4, 1)
        c.contract_path(c.find_path(c.locate(1), c.locate(4)))
        c.validate()
        # bridges strictly between 1 and 4 are gone, outer bridges survive
        assert c.lam == 1
        check_matches_oracle(g, c)

    def test_insert_within_cactus_vertex_changes_nothing(self):
        g, c = path_instance(6)
        g.insert_edge(1, 4, 1)
        c.contract_path(c.find_path(c.locate(1), c.locate(4)))
        before = as_sorted(c.enumerate_cuts())
        g.insert_edge(2, 3, 5)
        assert c.locate(2) == c.locate(3)
        check_matches_oracle(g, c)
        assert as_sorted(c.enumerate_cuts()) == before


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("builder", [ring_instance, path_instance])
def test_random_insertion_replay(builder, seed):
    """Replay random insertions; represented cuts must track the oracle."""
    rng = random.Random(seed)
    n = rng.randint(5, 10)
    g, c = builder(n, w=rng.randint(1, 3))
    check_matches_oracle(g, c)
    for _ in range(25):
        u, v = rng.sample(range(n), 2)
        w = rng.randint(1, 3)
        g.insert_edge(u, v, w)
        pu, pv = c.locate(u), c.locate(v)
        if pu != pv:
            c.contract_path(c.find_path(pu, pv))
        c.validate()
        if c.n_star == 1:
            # every represented cut was invalidated: lambda must have risen
            assert oracle_all_min_cuts(g).lam > c.lam
            return
        check_matches_oracle(g, c)


@pytest.mark.parametrize("seed", range(6))
def test_most_balanced_cut_matches_enumeration(seed):
    rng = random.Random(1000 + seed)
    n = rng.randint(5, 11)
    g, c = ring_instance(n)
    for _ in range(rng.randint(0, 6)):
        u, v = rng.sample(range(n), 2)
        g.insert_edge(u, v, 1)
        pu, pv = c.locate(u), c.locate(v)
        if pu != pv:
            c.contract_path(c.find_path(pu, pv))
        if c.n_star == 1:
            return
    cuts = c.enumerate_cuts()
    best = max(min(len(s), n - len(s)) for s in cuts)
    side = c.most_balanced_cut()
    assert min(len(side), n - len(side)) == best
    canon = side if 0 in side else frozenset(range(n)) - side
    assert canon in set(cuts)


class TestDisconnectedRegime:
    def test_merge_and_split(self):
        c = Cactus(lam=0, n_orig=6, pi=[-1] * 6)
        a = c.add_vertex([0, 1])
        b = c.add_vertex([2, 3])
        c.add_vertex([4, 5])
        c.merge_components(a, b)
        assert c.n_star == 2 and c.locate(2) == c.locate(0)
        c.validate()
        c.split_component(c.locate(0), {1, 3})
        assert c.locate(1) == c.locate(3) != c.locate(0)
        c.validate()

    def test_guards(self):
        _, c = ring_instance(4)
        with pytest.raises(CactusError):
            c.merge_components(0, 1)
        c0 = Cactus(lam=0, n_orig=2, pi=[-1, -1])
        c0.add_vertex([0])
        c0.add_vertex([1])
        with pytest.raises(CactusError):
            c0.enumerate_cuts()
