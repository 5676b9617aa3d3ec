"""Benchmark harness: graph/stream ingestion, workload generators, and
dynamic-vs-static comparison runs with CSV reporting."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field

from .dynamic import DynamicMinCut
from .graph import DynGraph
from .static_cactus import static_min_cut


class BenchError(ValueError):
    pass


@dataclass
class UpdateRecord:
    ts: int
    op: str  # "+" | "-"
    u: int
    v: int
    w: int = 1
    line: int = -1


@dataclass
class UpdateStream:
    n: int
    records: list[UpdateRecord] = field(default_factory=list)

    def batches(self) -> list[list[UpdateRecord]]:
        out: list[list[UpdateRecord]] = []
        for rec in self.records:
            if out and out[-1][0].ts == rec.ts:
                out[-1].append(rec)
            else:
                out.append([rec])
        return out

    def dump(self) -> str:
        lines = [f"n {self.n}"]
        for r in self.records:
            suffix = f" {r.w}" if r.op == "+" else ""
            lines.append(f"{r.ts} {r.op} {r.u} {r.v}{suffix}")
        return "\n".join(lines) + "\n"


# -- parsers -------------------------------------------------------------


def _parse_int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise BenchError(f"line {lineno}: bad {what} {tok!r}") from None


def parse_graph(path: str, fmt: str = "metis") -> DynGraph:
    """Read a graph file; duplicate undirected edges are merged by weight sum,
    self-loops dropped."""
    with open(path) as fh:
        lines = fh.readlines()
    if fmt == "metis":
        return _parse_metis(lines)
    if fmt == "dimacs-edgelist":
        return _parse_edgelist(lines)
    raise BenchError(f"unknown graph format {fmt!r}")


def _parse_metis(lines: list[str]) -> DynGraph:
    it = [
        (i + 1, ln.strip())
        for i, ln in enumerate(lines)
        if ln.strip() and not ln.lstrip().startswith("%")
    ]
    if not it:
        raise BenchError("line 1: missing header")
    lineno, header = it[0]
    parts = header.split()
    if len(parts) < 2:
        raise BenchError(f"line {lineno}: header needs 'n m [fmt]'")
    n = _parse_int(parts[0], lineno, "vertex count")
    _parse_int(parts[1], lineno, "edge count")
    weighted = len(parts) >= 3 and parts[2].endswith("1")
    if len(it) - 1 != n:
        raise BenchError(f"line {lineno}: expected {n} adjacency lines, got {len(it) - 1}")
    acc: dict[tuple[int, int], int] = {}
    for u, (lno, ln) in enumerate(it[1:]):
        toks = ln.split()
        step = 2 if weighted else 1
        if weighted and len(toks) % 2 != 0:
            raise BenchError(f"line {lno}: dangling weight")
        for i in range(0, len(toks), step):
            v = _parse_int(toks[i], lno, "neighbor") - 1
            w = _parse_int(toks[i + 1], lno, "weight") if weighted else 1
            if not 0 <= v < n:
                raise BenchError(f"line {lno}: neighbor {v + 1} out of range")
            if w <= 0:
                raise BenchError(f"line {lno}: nonpositive weight")
            if u < v:  # each undirected edge is taken from its lower endpoint
                key = (u, v)
                acc[key] = acc.get(key, 0) + w
    return DynGraph.from_edges(n, ((a, b, w) for (a, b), w in acc.items()))


def _parse_edgelist(lines: list[str]) -> DynGraph:
    acc: dict[tuple[int, int], int] = {}
    top = -1
    for lno, raw in enumerate(lines, start=1):
        ln = raw.strip()
        if not ln or ln.startswith("#") or ln.startswith("%"):
            continue
        toks = ln.split()
        if len(toks) not in (2, 3):
            raise BenchError(f"line {lno}: expected 'u v [w]'")
        u = _parse_int(toks[0], lno, "endpoint")
        v = _parse_int(toks[1], lno, "endpoint")
        w = _parse_int(toks[2], lno, "weight") if len(toks) == 3 else 1
        if u < 0 or v < 0:
            raise BenchError(f"line {lno}: negative vertex id")
        if w <= 0:
            raise BenchError(f"line {lno}: nonpositive weight")
        top = max(top, u, v)
        if u != v:
            key = (min(u, v), max(u, v))
            acc[key] = acc.get(key, 0) + w
    return DynGraph.from_edges(top + 1, ((a, b, w) for (a, b), w in acc.items()))


def parse_stream(path: str) -> tuple[DynGraph, UpdateStream]:
    """Update-stream text: header `n <count>`, then lines `t +|- u v [w]`."""
    with open(path) as fh:
        lines = fh.readlines()
    n = None
    stream = None
    last_ts = None
    for lno, raw in enumerate(lines, start=1):
        ln = raw.strip()
        if not ln or ln.startswith("#") or ln.startswith("%"):
            continue
        toks = ln.split()
        if n is None:
            if toks[0] != "n" or len(toks) != 2:
                raise BenchError(f"line {lno}: expected header 'n <count>'")
            n = _parse_int(toks[1], lno, "vertex count")
            stream = UpdateStream(n)
            continue
        if len(toks) not in (4, 5) or toks[1] not in ("+", "-"):
            raise BenchError(f"line {lno}: expected 't +|- u v [w]'")
        ts = _parse_int(toks[0], lno, "timestamp")
        u = _parse_int(toks[2], lno, "endpoint")
        v = _parse_int(toks[3], lno, "endpoint")
        w = _parse_int(toks[4], lno, "weight") if len(toks) == 5 else 1
        if last_ts is not None and ts < last_ts:
            raise BenchError(f"line {lno}: timestamps must be nondecreasing")
        last_ts = ts
        if not (0 <= u < n and 0 <= v < n):
            raise BenchError(f"line {lno}: vertex out of range")
        stream.records.append(UpdateRecord(ts, toks[1], u, v, w, lno))
    if stream is None:
        raise BenchError("line 1: missing header")
    return DynGraph(n), stream


# -- workload generators -------------------------------------------------


def gen_random_workload(
    g: DynGraph, alpha_ins: float, alpha_del: float, seed: int = 0
) -> tuple[DynGraph, UpdateStream]:
    """Random mixed workload: remove a sample of edges to form the initial
    graph, then replay them as insertions shuffled with a disjoint sample of
    deletions, keeping at least one untouched edge incident to every vertex."""
    if not (0 <= alpha_ins < 1 and 0 <= alpha_del < 1 and alpha_ins + alpha_del < 1):
        raise BenchError("need alpha_ins + alpha_del < 1")
    rng = random.Random(seed)
    m = g.num_edges
    k_ins = int(alpha_ins * m)
    k_del = int(alpha_del * m)
    edges = list(g.edges())
    rng.shuffle(edges)
    untouched = [len(g.neighbors(v)) for v in range(g.n)]
    e_ins: list[tuple[int, int, int]] = []
    e_del: list[tuple[int, int, int]] = []
    for u, v, w in edges:
        if len(e_ins) + len(e_del) == k_ins + k_del:
            break
        if untouched[u] <= 1 or untouched[v] <= 1:
            continue
        untouched[u] -= 1
        untouched[v] -= 1
        if len(e_ins) < k_ins:
            e_ins.append((u, v, w))
        else:
            e_del.append((u, v, w))
    if len(e_ins) + len(e_del) < k_ins + k_del:
        raise BenchError("cannot satisfy the untouched-incident-edge constraint")
    removed = set(e_ins)
    initial = DynGraph.from_edges(
        g.n, ((u, v, w) for u, v, w in g.edges() if (u, v, w) not in removed)
    )
    ops = [("+", e) for e in e_ins] + [("-", e) for e in e_del]
    rng.shuffle(ops)
    stream = UpdateStream(g.n)
    for t, (op, (u, v, w)) in enumerate(ops, start=1):
        stream.records.append(UpdateRecord(t, op, u, v, w))
    return initial, stream


def gen_worstcase_workload(
    g: DynGraph, n_ins: int, n_del: int, seed: int, dyn: DynamicMinCut
) -> UpdateStream:
    """Adversarial workload built online: every insertion joins a pair of
    vertices currently separated by a minimum cut; deletions remove a subset
    of the inserted edges, each after its insertion."""
    if n_del > n_ins:
        raise BenchError("n_del must not exceed n_ins")
    rng = random.Random(seed)
    stream = UpdateStream(g.n)
    deletable: list[tuple[int, int]] = []
    ins_left, del_left = n_ins, n_del
    t = 0
    while ins_left or del_left:
        t += 1
        do_delete = (
            del_left > 0
            and deletable
            and rng.random() < del_left / (ins_left + del_left)
        )
        if do_delete:
            u, v = deletable.pop(rng.randrange(len(deletable)))
            dyn.delete(u, v)
            stream.records.append(UpdateRecord(t, "-", u, v))
            del_left -= 1
        else:
            pair = _separated_pair(dyn, rng)
            if pair is None:
                raise BenchError("no separated vertex pair available")
            u, v = pair
            dyn.insert(u, v, 1)
            stream.records.append(UpdateRecord(t, "+", u, v, 1))
            deletable.append((u, v))
            ins_left -= 1
    return stream


def _separated_pair(dyn: DynamicMinCut, rng: random.Random):
    c = dyn.cactus
    nonempty = [vid for vid, s in c.sets.items() if s]
    if len(nonempty) <= 1:
        return None
    for _ in range(200):
        a, b = rng.sample(nonempty, 2)
        u = rng.choice(sorted(c.sets[a]))
        v = rng.choice(sorted(c.sets[b]))
        if not dyn.graph.has_edge(u, v):
            return u, v
    return None


# -- comparison runs -----------------------------------------------------


@dataclass
class ReportRow:
    update_idx: int
    batch_idx: int
    op: str
    u: int
    v: int
    w: int
    lam: int
    micros: int
    extrapolated: bool = False


@dataclass
class RunReport:
    mode: str
    rows: list[ReportRow] = field(default_factory=list)
    aggregates: dict[str, object] = field(default_factory=dict)

    def to_csv(self) -> str:
        out = ["update_idx,batch_idx,op,u,v,w,lambda,micros"]
        for r in self.rows:
            out.append(
                f"{r.update_idx},{r.batch_idx},{r.op},{r.u},{r.v},{r.w},{r.lam},{r.micros}"
            )
        for key in sorted(self.aggregates):
            out.append(f"# {key}={self.aggregates[key]}")
        return "\n".join(out) + "\n"


def _copy_graph(g: DynGraph) -> DynGraph:
    return DynGraph.from_edges(g.n, g.edges())


def _geomean_micros(values: list[int]) -> float:
    if not values:
        return 0.0
    return math.exp(sum(math.log(max(v, 1)) for v in values) / len(values))


def _replay_record(g: DynGraph, rec: UpdateRecord) -> None:
    try:
        if rec.op == "+":
            g.insert_edge(rec.u, rec.v, rec.w)
        else:
            g.delete_edge(rec.u, rec.v)
    except ValueError as exc:
        where = f"line {rec.line}" if rec.line >= 0 else f"update ts={rec.ts}"
        raise BenchError(f"{where}: cannot replay {rec.op} {rec.u} {rec.v}: {exc}") from exc


def run_compare(
    initial: DynGraph,
    stream: UpdateStream,
    mode: str = "both",
    gamma: int = 1,
    delta: float = 2.0,
    seed: int = 0,
    timeout_secs: float | None = None,
) -> RunReport:
    """Replay a stream in dynamic and/or static mode and report timings.

    Dynamic mode drives one DynamicMinCut update-by-update; static mode
    recomputes static_min_cut once per batch.  In both-mode the lambda
    sequences are compared at batch boundaries and a mismatch is a hard
    failure.  A timeout makes static mode measure a sample of batches and
    extrapolate the rest (marked in the report).
    """
    if mode not in ("dynamic", "static", "both"):
        raise BenchError(f"unknown mode {mode!r}")
    report = RunReport(mode=mode)
    batches = stream.batches()

    dyn_lams: list[int] = []
    if mode in ("dynamic", "both"):
        t0 = time.perf_counter()
        dyn = DynamicMinCut(_copy_graph(initial), gamma=gamma, delta=delta, seed=seed)
        init_micros = int((time.perf_counter() - t0) * 1e6)
        report.rows.append(
            ReportRow(0, 0, "init", -1, -1, 0, dyn.current_lambda(), init_micros)
        )
        idx = 0
        dyn_update_micros: list[int] = []
        for bi, batch in enumerate(batches, start=1):
            for rec in batch:
                idx += 1
                t0 = time.perf_counter()
                if rec.op == "+":
                    dyn.insert(rec.u, rec.v, rec.w)
                else:
                    try:
                        dyn.delete(rec.u, rec.v)
                    except ValueError as exc:
                        where = f"line {rec.line}" if rec.line >= 0 else f"update {idx}"
                        raise BenchError(f"{where}: {exc}") from exc
                micros = int((time.perf_counter() - t0) * 1e6)
                dyn_update_micros.append(micros)
                report.rows.append(
                    ReportRow(idx, bi, rec.op, rec.u, rec.v, rec.w, dyn.current_lambda(), micros)
                )
            dyn_lams.append(dyn.current_lambda())
        report.aggregates["dynamic_total_micros"] = init_micros + sum(dyn_update_micros)
        report.aggregates["dynamic_update_total_micros"] = sum(dyn_update_micros)
        report.aggregates["dynamic_geomean_micros"] = round(
            _geomean_micros(dyn_update_micros), 2
        )
        for key, val in dyn.stats.as_dict().items():
            report.aggregates[f"stats_{key}"] = val

    if mode in ("static", "both"):
        g = _copy_graph(initial)
        t0 = time.perf_counter()
        lam0 = static_min_cut(g)
        init_micros = int((time.perf_counter() - t0) * 1e6)
        if mode == "static":
            report.rows.append(ReportRow(0, 0, "init", -1, -1, 0, lam0, init_micros))
        static_micros: list[int] = []
        measured = 0
        extrapolated = 0
        budget_start = time.perf_counter()
        idx = 0
        for bi, batch in enumerate(batches, start=1):
            for rec in batch:
                idx += 1
                _replay_record(g, rec)
            last = batch[-1]
            timed_out = (
                timeout_secs is not None
                and time.perf_counter() - budget_start > timeout_secs
                and measured > 0
            )
            if timed_out:
                mean = sum(static_micros) / len(static_micros)
                extrapolated += 1
                row = ReportRow(idx, bi, last.op, last.u, last.v, last.w, -1, int(mean), True)
            else:
                t0 = time.perf_counter()
                lam = static_min_cut(g)
                micros = int((time.perf_counter() - t0) * 1e6)
                static_micros.append(micros)
                measured += 1
                row = ReportRow(idx, bi, last.op, last.u, last.v, last.w, lam, micros)
                if mode == "both" and dyn_lams[bi - 1] != lam:
                    raise BenchError(
                        f"lambda mismatch at batch {bi}: dynamic={dyn_lams[bi - 1]} static={lam}"
                    )
            if mode == "static":
                report.rows.append(row)
        mean = sum(static_micros) / len(static_micros) if static_micros else 0.0
        total = init_micros + sum(static_micros) + int(extrapolated * mean)
        report.aggregates["static_total_micros"] = total
        report.aggregates["static_batches_measured"] = measured
        report.aggregates["static_batches_extrapolated"] = extrapolated
        report.aggregates["static_geomean_micros"] = round(_geomean_micros(static_micros), 2)
        if extrapolated:
            report.aggregates["static_note"] = (
                "timings for extrapolated batches are estimates; lambda=-1 means not computed"
            )

    if mode == "both":
        dyn_total = report.aggregates["dynamic_update_total_micros"]
        sta_total = report.aggregates["static_total_micros"]
        report.aggregates["speedup_dynamic_vs_static"] = round(
            sta_total / max(dyn_total, 1), 2
        )
        report.aggregates["lambda_mismatches"] = 0
    return report
