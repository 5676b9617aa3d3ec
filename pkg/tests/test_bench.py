"""Benchmark harness: parsers, generators and comparison runs."""

import random

import pytest

from dyncut.bench import (
    BenchError,
    gen_random_workload,
    gen_worstcase_workload,
    parse_graph,
    parse_stream,
    run_compare,
)
from dyncut.dynamic import DynamicMinCut
from dyncut.graph import DynGraph


def cycle(n):
    return DynGraph.from_edges(n, [(i, (i + 1) % n, 1) for i in range(n)])


# -- parsers -------------------------------------------------------------


def test_parse_metis_unweighted(tmp_path):
    p = tmp_path / "g.metis"
    p.write_text("% a triangle plus a tail\n4 4\n2 3\n1 3 4\n1 2\n2\n")
    g = parse_graph(str(p))
    assert g.n == 4 and g.num_edges == 4
    assert g.has_edge(0, 1) and g.has_edge(1, 3) and g.edge_weight(0, 2) == 1


def test_parse_metis_weighted_merges_duplicates(tmp_path):
    p = tmp_path / "g.metis"
    # vertex 1 lists neighbor 2 twice: weights accumulate
    p.write_text("3 3 001\n2 4 2 1 3 2\n1 4 1 1 3 5\n1 2 2 5\n")
    g = parse_graph(str(p))
    assert g.edge_weight(0, 1) == 5
    assert g.edge_weight(0, 2) == 2 and g.edge_weight(1, 2) == 5


@pytest.mark.parametrize("text,frag", [
    ("", "missing header"),
    ("3\n\n\n\n", "header"),
    ("2 1\n2\n", "adjacency lines"),
    ("2 1\n5\n1\n", "out of range"),
    ("2 1 001\n2\n1 1\n", "dangling weight"),
    ("2 1 001\n2 0\n1 0\n", "nonpositive weight"),
    ("2 1\nx\n1\n", "bad neighbor"),
])
def test_parse_metis_errors_carry_line_numbers(tmp_path, text, frag):
    p = tmp_path / "bad.metis"
    p.write_text(text)
    with pytest.raises(BenchError, match="line \\d+"):
        try:
            parse_graph(str(p))
        except BenchError as exc:
            assert frag in str(exc)
            raise


def test_parse_edgelist(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("# comment\n0 1 2\n1 2\n2 2 9\n0 1 3\n")
    g = parse_graph(str(p), fmt="dimacs-edgelist")
    assert g.n == 3
    assert g.edge_weight(0, 1) == 5  # duplicates merged
    assert g.num_edges == 2  # self-loop dropped


def test_parse_stream(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("n 5\n1 + 0 1 3\n1 + 1 2\n2 - 0 1\n")
    g, stream = parse_stream(str(p))
    assert g.n == 5 and g.num_edges == 0
    assert [r.op for r in stream.records] == ["+", "+", "-"]
    assert stream.records[0].w == 3 and stream.records[1].w == 1
    assert [len(b) for b in stream.batches()] == [2, 1]


def test_parse_stream_rejects_time_travel(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("n 3\n2 + 0 1\n1 + 1 2\n")
    with pytest.raises(BenchError, match="nondecreasing"):
        parse_stream(str(p))


def test_stream_roundtrip(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("n 4\n1 + 0 1 2\n2 - 0 1\n")
    _, stream = parse_stream(str(p))
    q = tmp_path / "copy.txt"
    q.write_text(stream.dump())
    _, again = parse_stream(str(q))
    assert [(r.ts, r.op, r.u, r.v, r.w) for r in again.records] == [
        (r.ts, r.op, r.u, r.v, r.w) for r in stream.records
    ]


# -- generators ----------------------------------------------------------


def dense_graph(n, seed=0):
    rng = random.Random(seed)
    g = DynGraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.6:
                g.insert_edge(u, v, rng.randint(1, 3))
    return g


def test_gen_random_workload_shape():
    g = dense_graph(14)
    initial, stream = gen_random_workload(g, 0.2, 0.2, seed=1)
    m = g.num_edges
    k = int(0.2 * m)
    plus = [r for r in stream.records if r.op == "+"]
    minus = [r for r in stream.records if r.op == "-"]
    assert len(plus) == k and len(minus) == k
    assert initial.num_edges == m - k
    # every vertex keeps at least one untouched incident edge
    touched_edges = {(min(r.u, r.v), max(r.u, r.v)) for r in stream.records}
    for v in range(g.n):
        incident = {(min(v, x), max(v, x)) for x, _ in g.neighbors(v)}
        if incident:
            assert len(incident & touched_edges) < len(incident)


def test_gen_random_workload_deterministic():
    g = dense_graph(12)
    a = gen_random_workload(g, 0.15, 0.15, seed=7)
    b = gen_random_workload(g, 0.15, 0.15, seed=7)
    assert a[1].dump() == b[1].dump()
    c = gen_random_workload(g, 0.15, 0.15, seed=8)
    assert a[1].dump() != c[1].dump()


def test_gen_random_workload_validates_alphas():
    g = dense_graph(8)
    with pytest.raises(BenchError):
        gen_random_workload(g, 0.7, 0.4, seed=0)


def test_gen_worstcase_every_insertion_separated():
    g = cycle(30)
    dyn = DynamicMinCut(DynGraph.from_edges(g.n, g.edges()))
    stream = gen_worstcase_workload(g, 20, 10, seed=3, dyn=dyn)
    plus = [r for r in stream.records if r.op == "+"]
    minus = [r for r in stream.records if r.op == "-"]
    assert len(plus) == 20 and len(minus) == 10
    assert dyn.stats.insert_separated == dyn.stats.insertions == 20
    # every deletion removes a previously inserted edge
    inserted = set()
    for r in stream.records:
        if r.op == "+":
            inserted.add((min(r.u, r.v), max(r.u, r.v)))
        else:
            assert (min(r.u, r.v), max(r.u, r.v)) in inserted


def test_gen_worstcase_rejects_more_deletes_than_inserts():
    g = cycle(10)
    dyn = DynamicMinCut(DynGraph.from_edges(g.n, g.edges()))
    with pytest.raises(BenchError):
        gen_worstcase_workload(g, 2, 3, seed=0, dyn=dyn)


# -- comparison runs -----------------------------------------------------


def test_run_compare_both_mode_agrees():
    g = dense_graph(15, seed=4)
    initial, stream = gen_random_workload(g, 0.2, 0.2, seed=4)
    report = run_compare(initial, stream, mode="both")
    agg = report.aggregates
    assert agg["lambda_mismatches"] == 0
    assert agg["static_batches_extrapolated"] == 0
    assert "speedup_dynamic_vs_static" in agg
    csv = report.to_csv()
    lines = csv.splitlines()
    assert lines[0] == "update_idx,batch_idx,op,u,v,w,lambda,micros"
    data = [ln for ln in lines if not ln.startswith("#")]
    # init row plus one per update
    assert len(data) - 1 == 1 + len(stream.records)
    assert data[1].startswith("0,0,init,-1,-1,0,")


def test_run_compare_dynamic_only_stats():
    initial, stream = gen_random_workload(dense_graph(12, seed=2), 0.25, 0.1, seed=2)
    report = run_compare(initial, stream, mode="dynamic")
    agg = report.aggregates
    assert agg["stats_insertions"] + agg["stats_deletions"] == len(stream.records)
    assert "static_total_micros" not in agg


def test_run_compare_static_timeout_extrapolates():
    g = dense_graph(20, seed=6)
    initial, stream = gen_random_workload(g, 0.25, 0.25, seed=6)
    report = run_compare(initial, stream, mode="static", timeout_secs=0.0)
    agg = report.aggregates
    assert agg["static_batches_measured"] == 1
    assert agg["static_batches_extrapolated"] == len(stream.batches()) - 1
    assert "static_note" in agg
    lam_cols = [int(ln.split(",")[6]) for ln in report.to_csv().splitlines()[2:]
                if not ln.startswith("#")]
    assert -1 in lam_cols  # extrapolated rows carry the sentinel


def test_run_compare_rejects_bad_replay():
    from dyncut.bench import UpdateRecord, UpdateStream

    stream = UpdateStream(3, [UpdateRecord(1, "-", 0, 1)])
    with pytest.raises(BenchError, match="cannot replay"):
        run_compare(DynGraph(3), stream, mode="static")


def test_run_compare_rejects_unknown_mode():
    from dyncut.bench import UpdateStream

    with pytest.raises(BenchError):
        run_compare(DynGraph(2), UpdateStream(2), mode="nope")
