"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 3]

Kernel rows call both backends in-process; the end-to-end rows run the CLI
in a subprocess with and without SEPDEPTH_PURE_PYTHON=1.
"""
from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time

from sepdepth._kernels import _pure
from sepdepth.generators import double_broom, grid
from sepdepth.oracle import random_connected_graph
from sepdepth.pace import graph_to_gr

try:
    from sepdepth._kernels import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_cases():
    rng = random.Random(5)
    big = [random_connected_graph(rng, 200, 0.02) for _ in range(3)] + [double_broom(1, 7, 8)]
    masks = [[rng.getrandbits(g.n) for _ in range(300)] for g in big]

    def components(mod):
        packed = [mod.PackedGraph(list(g.adj)) for g in big]

        def run():
            for pg, ms in zip(packed, masks):
                for m in ms:
                    pg.components(m)
                    pg.neighborhood(m)

        return run

    small = [random_connected_graph(rng, 12, 0.35) for _ in range(5)]
    medium = [random_connected_graph(rng, 14, 0.3) for _ in range(2)]

    def td_dp(mod):
        return lambda: [mod.treedepth_subsets(list(g.adj), g.n) for g in small]

    def tw_dp(mod):
        return lambda: [mod.treewidth_subsets(list(g.adj), g.n) for g in medium]

    return [
        ("components + neighborhood (1200 masks, n=200..517)", components),
        ("treedepth subset DP (5 graphs, n=12)", td_dp),
        ("treewidth subset DP (2 graphs, n=14)", tw_dp),
    ]


def cli_time(text: str, pure: bool, repeat: int) -> float:
    env = dict(os.environ)
    env.pop("SEPDEPTH_PURE_PYTHON", None)
    if pure:
        env["SEPDEPTH_PURE_PYTHON"] = "1"
    cmd = [sys.executable, "-m", "sepdepth", "solve"]
    return best_of(lambda: subprocess.run(cmd, input=text, text=True, capture_output=True, env=env, check=True), repeat)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; only the pure backend is available")
        return 1
    print(f"{'case':56} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, make in kernel_cases():
        py = best_of(make(_pure), args.repeat)
        cy = best_of(make(_ckernels), args.repeat)
        print(f"{name:56} {py:10.4f} {cy:10.4f} {py / cy:8.1f}")
    for name, g in [("solve double_broom(1,7,8) end to end", double_broom(1, 7, 8)), ("solve grid(4,4) end to end", grid(4, 4))]:
        text = graph_to_gr(g)
        py = cli_time(text, True, args.repeat)
        cy = cli_time(text, False, args.repeat)
        print(f"{name:56} {py:10.4f} {cy:10.4f} {py / cy:8.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
