"""Command-line interface for the dynamic minimum-cut benchmark harness."""

from __future__ import annotations

import argparse
import sys

from .bench import (
    BenchError,
    gen_random_workload,
    gen_worstcase_workload,
    parse_graph,
    parse_stream,
    run_compare,
)
from .dynamic import DynamicMinCut
from .graph import DynGraph
from .static_cactus import build_cactus


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gamma", type=int, default=1, help="local relabeling depth (default 1)")
    p.add_argument("--delta", type=float, default=2.0, help="cache restore threshold (default 2)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", default="metis", choices=["metis", "dimacs-edgelist"])


def _load(args) -> DynGraph:
    return parse_graph(args.graph, args.format)


def cmd_init_stats(args) -> int:
    g = _load(args)
    dyn = DynamicMinCut(g, gamma=args.gamma, delta=args.delta, seed=args.seed)
    c = dyn.cactus
    print(f"n={g.n} m={g.num_edges} total_weight={g.total_weight}")
    print(f"lambda={c.lam} cactus_vertices={c.n_star} cactus_edges={c.m_star} cycles={len(c.cycles)}")
    if args.dump_cactus:
        sys.stdout.write(c.dump())
    return 0


def cmd_dump_cactus(args) -> int:
    g = _load(args)
    c = build_cactus(g, seed=args.seed)
    print(f"# lambda={c.lam}")
    sys.stdout.write(c.dump())
    return 0


def cmd_run(args) -> int:
    if args.stream:
        initial, stream = parse_stream(args.stream)
        if args.graph:
            initial = parse_graph(args.graph, args.format)
            if initial.n != stream.n:
                raise BenchError(
                    f"graph has {initial.n} vertices but stream declares {stream.n}"
                )
    else:
        raise BenchError("run requires --stream")
    report = run_compare(
        initial,
        stream,
        mode=args.mode,
        gamma=args.gamma,
        delta=args.delta,
        seed=args.seed,
        timeout_secs=args.timeout_secs,
    )
    out = report.to_csv()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_gen_random(args) -> int:
    g = _load(args)
    initial, stream = gen_random_workload(g, args.alpha_ins, args.alpha_del, args.seed)
    with open(args.out_stream, "w") as fh:
        fh.write(stream.dump())
    with open(args.out_initial, "w") as fh:
        for u, v, w in initial.edges():
            fh.write(f"{u} {v} {w}\n")
    print(f"wrote {len(stream.records)} updates to {args.out_stream}; "
          f"initial graph ({initial.num_edges} edges) to {args.out_initial}")
    return 0


def cmd_gen_worstcase(args) -> int:
    g = _load(args)
    dyn = DynamicMinCut(
        DynGraph.from_edges(g.n, g.edges()),
        gamma=args.gamma,
        delta=args.delta,
        seed=args.seed,
    )
    stream = gen_worstcase_workload(g, args.n_ins, args.n_del, args.seed, dyn)
    with open(args.out_stream, "w") as fh:
        fh.write(stream.dump())
    print(f"wrote {len(stream.records)} updates to {args.out_stream}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dyncut", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("init-stats", help="build the cactus and print summary statistics")
    p.add_argument("--graph", required=True)
    p.add_argument("--dump-cactus", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_init_stats)

    p = sub.add_parser("dump-cactus", help="print the minimum-cut cactus of a graph")
    p.add_argument("--graph", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_dump_cactus)

    p = sub.add_parser("run", help="replay an update stream and report timings as CSV")
    p.add_argument("--stream", required=True)
    p.add_argument("--graph", help="initial graph (default: empty graph from stream header)")
    p.add_argument("--mode", default="both", choices=["dynamic", "static", "both"])
    p.add_argument("--timeout-secs", type=float, default=None)
    p.add_argument("--output", help="write CSV here instead of stdout")
    _add_common(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("gen-random", help="generate a random insertion/deletion workload")
    p.add_argument("--graph", required=True)
    p.add_argument("--alpha-ins", type=float, required=True)
    p.add_argument("--alpha-del", type=float, required=True)
    p.add_argument("--out-stream", required=True)
    p.add_argument("--out-initial", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_gen_random)

    p = sub.add_parser("gen-worstcase", help="generate an adversarial workload online")
    p.add_argument("--graph", required=True)
    p.add_argument("--n-ins", type=int, required=True)
    p.add_argument("--n-del", type=int, required=True)
    p.add_argument("--out-stream", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_gen_worstcase)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BenchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
