#!/usr/bin/env python3
"""Times the pure-Python kernels against the compiled extension.

Runs each hot kernel on the same inputs through both backend modules and
prints a table with the speedup. The compiled column needs the extension;
install with Cython available or this script reports python-only numbers.

    python3 benchmarks/compare_backends.py [--scale small|large]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from maxbisect import _kernels_py, gen_gnm, gen_gnp
from maxbisect.bisection import pair_sequence
from maxbisect.graph import Matching
from maxbisect.oracle import adjacency_masks

try:
    from maxbisect import _speedups
except ImportError:
    _speedups = None

SCALES = {
    # (gnm n, gnm m, exact-enumeration n)
    "small": (50_000, 150_000, 18),
    "large": (1_000_000, 3_000_000, 22),
}


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def row(label, py_s, cy_s):
    if cy_s is None:
        print(f"{label:<28} {py_s * 1e3:>10.1f} ms {'-':>12} {'-':>8}")
    else:
        print(
            f"{label:<28} {py_s * 1e3:>10.1f} ms {cy_s * 1e3:>9.1f} ms "
            f"{py_s / cy_s:>7.1f}x"
        )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scale", choices=sorted(SCALES), default="small")
    args = parser.parse_args()
    n, m, exact_n = SCALES[args.scale]

    print(f"scale={args.scale}: G(n={n}, m={m}), exact enumeration on n={exact_n}")
    if _speedups is None:
        print("compiled extension not built; showing pure-Python timings only")
    print(f"{'kernel':<28} {'python':>13} {'cython':>12} {'speedup':>8}")

    g = gen_gnm(n, m, seed=7)

    backends = [("python", _kernels_py)] + ([("cython", _speedups)] if _speedups else [])
    results = {}
    for name, mod in backends:
        results[name] = {}
        results[name]["matching_scan"], pairs = timed(
            mod.matching_scan, g.edges_u, g.edges_v, g.n
        )
        ps = pair_sequence(g, Matching(pairs=pairs))
        pu = np.ascontiguousarray(ps.pairs[:, 0])
        pv = np.ascontiguousarray(ps.pairs[:, 1])

        def greedy():
            side = np.full(g.n, -1, np.int8)
            return mod.greedy_assign(g.indptr, g.indices, side, pu, pv)

        def randomized():
            side = np.full(g.n, -1, np.int8)
            return mod.random_assign(g.indptr, g.indices, side, pu, pv, 42)

        results[name]["greedy_assign"], _ = timed(greedy)
        results[name]["random_assign"], _ = timed(randomized)

    dense = gen_gnp(exact_n, 0.5, seed=3)
    masks = adjacency_masks(dense)
    for name, mod in backends:
        results[name]["best_bisection"], _ = timed(
            mod.best_bisection, masks, dense.n, repeat=1
        )

    for kernel in ("matching_scan", "greedy_assign", "random_assign", "best_bisection"):
        row(
            kernel,
            results["python"][kernel],
            results.get("cython", {}).get(kernel),
        )

    for name, mod in backends:
        cut, _ = mod.best_bisection(masks, dense.n)
        print(f"best_bisection[{name}] cut = {cut}")


if __name__ == "__main__":
    main()
