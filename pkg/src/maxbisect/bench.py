"""Instance-sweep benchmark harness behind the ``bench`` CLI verb.

The config is plain text: blank lines and ``#`` comments are ignored, every
other line declares one sweep as ``key=value`` tokens with comma-separated
value lists, e.g.

    family=gnp n=10,20 p=0.1,0.3 seed=1,2 k=1,2
    family=star leaves=5,7 k=1

Each line expands to the cartesian product of its value lists in a fixed
nesting order (n, p, seed, leaves, m, k from outer to inner), so repeated
runs of the same config produce identical rows; only the elapsed_ms column
varies.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from itertools import product
from typing import IO, Iterator

from maxbisect.bisection import greedy_bisection
from maxbisect.graph import Graph, gen_complete, gen_gnm, gen_gnp, gen_star, normalize_even
from maxbisect.kernel import EarlyYes, Reduced, kernelize
from maxbisect.matching import maximal_matching
from maxbisect.oracle import (
    DEFAULT_VERTEX_LIMIT,
    PATH_TRIVIAL,
    VertexLimitExceeded,
    _ceil_half,
    max_bisection_exact,
)

CSV_COLUMNS = [
    "graph_id",
    "n",
    "m",
    "k",
    "matching_size",
    "path",
    "kernel_n",
    "kernel_m",
    "bound_4k_k1",
    "greedy_cut",
    "lemma1_bound",
    "elapsed_ms",
]

_SWEEP_KEYS = ("n", "p", "seed", "leaves", "m", "k")


@dataclass(frozen=True)
class BenchInstance:
    graph_id: str
    graph: Graph
    k: int


def _parse_line(line: str, lineno: int) -> dict[str, list[str]]:
    fields: dict[str, list[str]] = {}
    for token in line.split():
        if "=" not in token:
            raise ValueError(f"config line {lineno}: expected key=value, got {token!r}")
        key, _, raw = token.partition("=")
        if key != "family" and key not in _SWEEP_KEYS:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        fields[key] = raw.split(",")
    if "family" not in fields:
        raise ValueError(f"config line {lineno}: missing family=")
    if len(fields["family"]) != 1:
        raise ValueError(f"config line {lineno}: family takes a single value")
    return fields


def _build(family: str, params: dict[str, str], lineno: int) -> tuple[str, Graph]:
    try:
        if family == "star":
            leaves = int(params["leaves"])
            return f"star-l{leaves}", gen_star(leaves)
        if family == "complete":
            n = int(params["n"])
            return f"complete-n{n}", gen_complete(n)
        if family == "gnp":
            n, p, seed = int(params["n"]), float(params["p"]), int(params["seed"])
            return f"gnp-n{n}-p{p}-s{seed}", gen_gnp(n, p, seed)
        if family == "gnm":
            n, m, seed = int(params["n"]), int(params["m"]), int(params["seed"])
            return f"gnm-n{n}-m{m}-s{seed}", gen_gnm(n, m, seed)
    except KeyError as exc:
        raise ValueError(
            f"config line {lineno}: family {family!r} needs {exc.args[0]}="
        ) from None
    raise ValueError(f"config line {lineno}: unknown family {family!r}")


def parse_config(handle: IO[str]) -> Iterator[BenchInstance]:
    """Expand a config stream into instances, deterministically ordered."""
    for lineno, raw in enumerate(handle, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = _parse_line(line, lineno)
        family = fields["family"][0]
        sweep = [key for key in _SWEEP_KEYS if key != "k" and key in fields]
        ks = [int(v) for v in fields.get("k", ["1"])]
        for values in product(*(fields[key] for key in sweep)):
            params = dict(zip(sweep, values))
            graph_id, graph = _build(family, params, lineno)
            for k in ks:
                yield BenchInstance(graph_id=graph_id, graph=graph, k=k)


def run_instance(inst: BenchInstance, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> dict[str, object]:
    """One CSV row: certified greedy numbers plus the kernelization route."""
    start = time.perf_counter()
    even, _ = normalize_even(inst.graph)
    matching = maximal_matching(even)
    greedy = greedy_bisection(even, matching)
    lemma_bound = _ceil_half(even.m) + len(matching) // 2
    kernel_n = kernel_m = ""
    if inst.k <= 0:
        path = PATH_TRIVIAL
    else:
        outcome = kernelize(even, inst.k)
        if isinstance(outcome, EarlyYes):
            path = "early_" + outcome.reason
        else:
            assert isinstance(outcome, Reduced)
            kernel_n, kernel_m = outcome.kernel.n, outcome.kernel.m
            try:
                max_bisection_exact(outcome.kernel, vertex_limit)
                path = "kernel_bruteforce"
            except VertexLimitExceeded:
                path = "undecided"
    elapsed_ms = (time.perf_counter() - start) * 1e3
    return {
        "graph_id": inst.graph_id,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "k": inst.k,
        "matching_size": len(matching),
        "path": path,
        "kernel_n": kernel_n,
        "kernel_m": kernel_m,
        "bound_4k_k1": 4 * inst.k * (inst.k + 1),
        "greedy_cut": greedy.cut,
        "lemma1_bound": lemma_bound,
        "elapsed_ms": f"{elapsed_ms:.3f}",
    }


def run_bench(config: IO[str], out: IO[str], vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> int:
    """Run every configured instance, writing rows in grid order; returns the
    number of rows written."""
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    rows = 0
    for inst in parse_config(config):
        writer.writerow(run_instance(inst, vertex_limit))
        rows += 1
    return rows
