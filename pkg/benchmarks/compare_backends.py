"""Compare the compiled (numba) and pure-python kernel backends.

The backend is frozen at import time via the DYNCUT_BACKEND environment
variable, so this script re-runs itself in a subprocess per backend and
prints a side-by-side timing table.

Usage: python3 benchmarks/compare_backends.py [--scale small|large]
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time


SCALES = {
    "small": {"n": 2_000, "m": 8_000, "flips": 50},
    "large": {"n": 50_000, "m": 400_000, "flips": 100},
}


def build_graph(n, m, seed=0):
    from dyncut.graph import DynGraph

    rng = random.Random(seed)
    g = DynGraph(n)
    for v in range(1, n):
        g.insert_edge(v, rng.randrange(v), 1)
    while g.num_edges < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v and not g.has_edge(u, v):
            g.insert_edge(u, v, 1)
    return g


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def worker(scale):
    from dyncut.backend import backend_name
    from dyncut.dynamic import DynamicMinCut
    from dyncut.flow import FlowNetwork
    from dyncut.static_cactus import build_cactus, static_min_cut

    cfg = SCALES[scale]
    g = build_graph(cfg["n"], cfg["m"])
    results = {"backend": backend_name()}

    static_min_cut(g)  # warm-up (JIT compilation on the compiled backend)
    _, results["static_min_cut_warm"] = timed(lambda: static_min_cut(g))
    _, results["build_cactus"] = timed(lambda: build_cactus(g))

    net = FlowNetwork(g)
    rng = random.Random(1)
    pairs = [tuple(rng.sample(range(g.n), 2)) for _ in range(5)]

    def flows():
        for s, t in pairs:
            net.max_flow_bounded(s, t, bound=4, gamma=1)

    flows()  # warm-up
    _, results["5_bounded_flows"] = timed(flows)

    dyn = DynamicMinCut(g)
    u, v, w = next(iter(g.edges()))

    def flip_loop():
        for _ in range(cfg["flips"]):
            dyn.delete(u, v)
            dyn.insert(u, v, w)

    _, results[f"{cfg['flips']}_delete_insert_flips"] = timed(flip_loop)
    print(json.dumps(results))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scale", default="small", choices=sorted(SCALES))
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        worker(args.scale)
        return

    rows = {}
    for backend in ("python", "numba"):
        env = dict(os.environ, DYNCUT_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--worker", "--scale", args.scale],
            env=env, capture_output=True, text=True,
        )
        if proc.returncode != 0:
            print(f"{backend} backend failed:\n{proc.stderr}", file=sys.stderr)
            continue
        rows[backend] = json.loads(proc.stdout.strip().splitlines()[-1])

    if len(rows) < 2:
        sys.exit(1)
    keys = [k for k in rows["python"] if k != "backend"]
    width = max(len(k) for k in keys) + 2
    print(f"scale={args.scale} (n={SCALES[args.scale]['n']}, m={SCALES[args.scale]['m']})")
    print(f"{'benchmark':<{width}}{'python':>12}{'numba':>12}{'speedup':>10}")
    for k in keys:
        py, nb = rows["python"][k], rows["numba"][k]
        ratio = py / nb if nb > 0 else float("inf")
        print(f"{k:<{width}}{py:>11.3f}s{nb:>11.3f}s{ratio:>9.1f}x")


if __name__ == "__main__":
    main()
