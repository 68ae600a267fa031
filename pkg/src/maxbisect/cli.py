"""Command-line front end.

Verbs: solve, kernelize, bisect, bound, gen, bench. Every invocation prints
one JSON object to stdout (bench writes CSV to --out instead). Exit codes:
0 = yes / success, 1 = decided no, 2 = error or undecided, with a diagnostic
on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from maxbisect import bench as bench_mod
from maxbisect import io as gio
from maxbisect.bisection import greedy_bisection
from maxbisect.graph import gen_complete, gen_gnm, gen_gnp, gen_star, normalize_even
from maxbisect.kernel import EarlyYes, Reduced, kernelize
from maxbisect.matching import maximal_matching
from maxbisect.oracle import (
    DEFAULT_VERTEX_LIMIT,
    VertexLimitExceeded,
    _ceil_half,
    decide_above_guarantee,
    pm_lower_bound,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2


def _emit(obj: dict) -> None:
    json.dump(obj, sys.stdout)
    sys.stdout.write("\n")


def _cmd_solve(args: argparse.Namespace) -> int:
    g = gio.load_graph(args.file)
    result = decide_above_guarantee(g, args.k, vertex_limit=args.limit)
    payload = {
        "answer": result.answer,
        "k": args.k,
        "m": g.m,
        "bound": result.bound_used,
        "path": result.path,
        "cut": result.witness.cut if result.witness else None,
    }
    if args.witness and result.witness is not None:
        payload["witness_x"] = sorted(result.witness.side_x)
    _emit(payload)
    return EXIT_YES if result.answer else EXIT_NO


def _cmd_kernelize(args: argparse.Namespace) -> int:
    g = gio.load_graph(args.file)
    even, padded = normalize_even(g)
    outcome = kernelize(even, args.k)
    if isinstance(outcome, EarlyYes):
        _emit(
            {
                "outcome": "early_yes",
                "reason": outcome.reason,
                "k": args.k,
                "bound": _ceil_half(even.m) + args.k,
                "cut": outcome.witness.cut,
                "witness_x": sorted(outcome.witness.side_x),
                "normalized": padded,
            }
        )
        return EXIT_YES
    assert isinstance(outcome, Reduced)
    kernel_file = f"{args.out}.kernel.el"
    trace_file = f"{args.out}.trace.json"
    gio.save_graph(kernel_file, outcome.kernel, comment=f"kernel of {args.file} at k={args.k}")
    with open(trace_file, "w", encoding="utf-8") as handle:
        handle.write(outcome.trace.to_json())
        handle.write("\n")
    _emit(
        {
            "outcome": "reduced",
            "k": args.k,
            "kernel_n": outcome.kernel.n,
            "kernel_m": outcome.kernel.m,
            "vertex_bound": outcome.vertex_bound,
            "edge_bound": outcome.edge_bound,
            "normalized": padded,
            "kernel_file": kernel_file,
            "trace_file": trace_file,
        }
    )
    return EXIT_YES


def _cmd_bisect(args: argparse.Namespace) -> int:
    g = gio.load_graph(args.file)
    even, _ = normalize_even(g)
    matching = maximal_matching(even)
    result = greedy_bisection(even, matching)
    bound = _ceil_half(even.m) + len(matching) // 2
    if result.cut < bound:
        raise AssertionError(f"greedy bug: cut {result.cut} below guarantee {bound}")
    _emit({"cut": result.cut, "bound": bound, "matching_size": len(matching)})
    return EXIT_YES


def _cmd_bound(args: argparse.Namespace) -> int:
    g = gio.load_graph(args.file)
    _emit({"half_m_ceil": _ceil_half(g.m), "pm_ceil": pm_lower_bound(g)})
    return EXIT_YES


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "star":
        g = gen_star(args.leaves)
        desc = f"star leaves={args.leaves}"
    elif args.family == "complete":
        g = gen_complete(args.n)
        desc = f"complete n={args.n}"
    elif args.family == "gnp":
        g = gen_gnp(args.n, args.p, args.seed)
        desc = f"gnp n={args.n} p={args.p} seed={args.seed}"
    else:
        g = gen_gnm(args.n, args.m, args.seed)
        desc = f"gnm n={args.n} m={args.m} seed={args.seed}"
    gio.save_graph(args.out, g, comment=desc)
    _emit({"file": args.out, "n": g.n, "m": g.m})
    return EXIT_YES


def _cmd_bench(args: argparse.Namespace) -> int:
    with open(args.config, "r", encoding="utf-8") as config:
        with open(args.out, "w", encoding="utf-8", newline="") as out:
            rows = bench_mod.run_bench(config, out, vertex_limit=args.limit)
    _emit({"rows": rows, "out": args.out})
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxbisect",
        description="Max bisection above the ceil(m/2) guarantee: solve, kernelize, bound, bench.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="decide cut >= ceil(m/2) + k; JSON to stdout")
    solve.add_argument("file", help="edge-list or DIMACS graph file")
    solve.add_argument("--k", type=int, required=True)
    solve.add_argument("--witness", action="store_true", help="include witness_x in the JSON")
    solve.add_argument("--limit", type=int, default=DEFAULT_VERTEX_LIMIT,
                       help="exact-oracle vertex limit (default %(default)s)")
    solve.set_defaults(func=_cmd_solve)

    kern = sub.add_parser("kernelize", help="write the reduced instance and its trace")
    kern.add_argument("file")
    kern.add_argument("--k", type=int, required=True)
    kern.add_argument("--out", required=True, help="output prefix for .kernel.el / .trace.json")
    kern.set_defaults(func=_cmd_kernelize)

    bis = sub.add_parser("bisect", help="greedy bisection with its certified bound")
    bis.add_argument("file")
    bis.set_defaults(func=_cmd_bisect)

    bnd = sub.add_parser("bound", help="print ceil(m/2) and the ceil(p*m) bound")
    bnd.add_argument("file")
    bnd.set_defaults(func=_cmd_bound)

    gen = sub.add_parser("gen", help="write a generated instance")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    star = gen_sub.add_parser("star")
    star.add_argument("--leaves", type=int, required=True)
    comp = gen_sub.add_parser("complete")
    comp.add_argument("--n", type=int, required=True)
    gnp = gen_sub.add_parser("gnp")
    gnp.add_argument("--n", type=int, required=True)
    gnp.add_argument("--p", type=float, required=True)
    gnp.add_argument("--seed", type=int, default=0)
    gnm = gen_sub.add_parser("gnm")
    gnm.add_argument("--n", type=int, required=True)
    gnm.add_argument("--m", type=int, required=True)
    gnm.add_argument("--seed", type=int, default=0)
    for p in (star, comp, gnp, gnm):
        p.add_argument("--out", required=True)
        p.set_defaults(func=_cmd_gen)

    ben = sub.add_parser("bench", help="run a config sweep, CSV to --out")
    ben.add_argument("config", help="plain-text sweep config")
    ben.add_argument("--out", required=True)
    ben.add_argument("--limit", type=int, default=DEFAULT_VERTEX_LIMIT)
    ben.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, VertexLimitExceeded) as exc:
        print(f"maxbisect: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
