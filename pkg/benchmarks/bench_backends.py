"""Compare the compiled search kernel against the pure Python reference.

Both backends must agree on status, node count, and search fingerprint;
the point of the benchmark is the wall-time ratio.

Usage: python benchmarks/bench_backends.py
"""

from __future__ import annotations

import time

import planewheel._core as core
from planewheel._core import backends
from planewheel.partition import MODE_DOUBLE_STAR, MODE_SUBGRAPH, MODE_TREE
from planewheel.solver import SolveConfig, solve
from planewheel.wheelgeom import build_bumpy_wheel, build_generalized_wheel

INSTANCES = [
    ("BW_{3,3} tree", build_bumpy_wheel(3, 3), MODE_TREE),
    ("BW_{3,3} double-star", build_bumpy_wheel(3, 3), MODE_DOUBLE_STAR),
    ("BW_{3,5} subgraph", build_bumpy_wheel(3, 5), MODE_SUBGRAPH),
    ("BW_{3,5} tree", build_bumpy_wheel(3, 5), MODE_TREE),
    ("GW_{[2,3,3,4,3]} tree", build_generalized_wheel([2, 3, 3, 4, 3]), MODE_TREE),
]


def run_backend(fn, model, mode):
    orig = core.search
    core.search = fn
    try:
        t0 = time.perf_counter()
        out = solve(model, SolveConfig(mode=mode))
        wall = time.perf_counter() - t0
    finally:
        core.search = orig
    return out, wall


def main():
    avail = backends()
    names = sorted(avail)
    print(f"backends: {', '.join(names)}")
    header = f"{'instance':<24}" + "".join(f"{n:>12}" for n in names) + f"{'ratio':>9}"
    print(header)
    print("-" * len(header))
    for label, model, mode in INSTANCES:
        results = {}
        walls = {}
        for n in names:
            out, wall = run_backend(avail[n], model, mode)
            results[n] = (out.status, out.stats["nodes"], out.stats["fingerprint"])
            walls[n] = wall
        agree = len(set(results.values())) == 1
        status, nodes, _ = results[names[0]]
        row = f"{label:<24}" + "".join(f"{walls[n]:>11.3f}s" for n in names)
        if "python" in walls and "compiled" in walls and walls["compiled"] > 0:
            row += f"{walls['python'] / walls['compiled']:>8.1f}x"
        print(row + f"   {status} nodes={nodes}" + ("" if agree else "   MISMATCH"))
        if not agree:
            raise SystemExit(f"backend disagreement on {label}: {results}")
    print("all backends agree on status, nodes, and fingerprint")


if __name__ == "__main__":
    main()
