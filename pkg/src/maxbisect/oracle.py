"""Exact maximum bisection by exhaustive enumeration, and the end-to-end
decision pipeline for "is there a bisection of size >= ceil(m/2) + k?".

The enumerator is ground truth for everything else in the package: it visits
every side-X candidate of size n/2 that contains vertex 0 (the X/Y swap
symmetry halves the work), keeping the lexicographically smallest maximizer.
The decision pipeline answers via the kernelizer, touching the enumerator
only on the kernel, whose size depends on k alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from maxbisect import backends
from maxbisect.bisection import greedy_bisection
from maxbisect.graph import (
    EMPTY_MATCHING,
    Bisection,
    Graph,
    cut_size,
    normalize_even,
)
from maxbisect.kernel import EarlyYes, Reduced, kernelize, lift_witness

DEFAULT_VERTEX_LIMIT = 24

PATH_TRIVIAL = "trivial_k_nonpositive"
PATH_BIG_MATCHING = "early_big_matching"
PATH_CASE1 = "early_case1"
PATH_KERNEL = "kernel_bruteforce"


class VertexLimitExceeded(RuntimeError):
    """Raised instead of silently refusing or guessing when a graph is too
    large for exhaustive enumeration."""


def _ceil_half(m: int) -> int:
    return -(m // -2)


def adjacency_masks(g: Graph) -> np.ndarray:
    """Per-vertex adjacency bitmasks (bit t set iff adjacent to t); n <= 64."""
    masks = np.zeros(g.n, dtype=np.uint64)
    one = np.uint64(1)
    np.bitwise_or.at(masks, g.edges_u, one << g.edges_v.astype(np.uint64))
    np.bitwise_or.at(masks, g.edges_v, one << g.edges_u.astype(np.uint64))
    return masks


def max_bisection_exact(g: Graph, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> tuple[int, Bisection]:
    """Maximum bisection size and the lexicographically smallest witness.

    Requires an even vertex count (normalize first) and n <= vertex_limit.
    The default limit of 24 means ~1.35M candidate sets; enumeration is
    sequential and deterministic.

    Raises:
        ValueError: if n is odd.
        VertexLimitExceeded: if n exceeds vertex_limit (or the structural
            64-vertex cap of the bitmask enumeration).
    """
    if g.n % 2 != 0:
        raise ValueError(f"exact oracle needs an even vertex count, got n={g.n}")
    if g.n > vertex_limit:
        raise VertexLimitExceeded(
            f"graph has {g.n} vertices, exact enumeration is limited to {vertex_limit}"
        )
    if g.n > 64:
        raise VertexLimitExceeded("bitmask enumeration supports at most 64 vertices")
    if g.n == 0:
        return 0, Bisection(frozenset(), frozenset(), 0)
    best, xmask = backends.best_bisection(adjacency_masks(g), g.n)
    xs = frozenset(i for i in range(g.n) if (xmask >> i) & 1)
    ys = frozenset(range(g.n)) - xs
    return best, Bisection(side_x=xs, side_y=ys, cut=best)


def pm_lower_bound(g: Graph) -> int:
    """ceil(p * m) with p = n / (2(n-1)), in exact rational arithmetic.

    This is the expected cut of a uniformly random balanced partition of the
    even-normalized graph, hence a valid lower bound on the maximum
    bisection; it is at least ceil(m/2). Returns 0 for graphs with fewer
    than 2 vertices after normalization.
    """
    even, _ = normalize_even(g)
    if even.n < 2:
        return 0
    p = Fraction(even.n, 2 * (even.n - 1))
    return math.ceil(p * even.m)


@dataclass(frozen=True)
class DecisionResult:
    """Outcome of the decision pipeline; witness ids refer to the input graph."""

    answer: bool
    witness: Bisection | None
    bound_used: int  # ceil(m/2) + k
    path: str

    def __post_init__(self) -> None:
        if self.answer and (self.witness is None or self.witness.cut < self.bound_used):
            raise ValueError("yes-answers must carry a witness meeting the bound")


def _strip_padding(b: Bisection, pad_vertex: int) -> Bisection:
    """Drop the isolated vertex added by even-normalization; cut unchanged."""
    xs, ys = set(b.side_x), set(b.side_y)
    if pad_vertex in xs:
        xs.remove(pad_vertex)
    else:
        ys.remove(pad_vertex)
    if len(xs) > len(ys):
        xs, ys = ys, xs
    return Bisection(side_x=frozenset(xs), side_y=frozenset(ys), cut=b.cut)


def decide_above_guarantee(
    g: Graph, k: int, vertex_limit: int = DEFAULT_VERTEX_LIMIT
) -> DecisionResult:
    """Decide whether g has a bisection of size >= ceil(m/2) + k.

    k <= 0 is trivially YES with a greedy witness. Otherwise the instance is
    kernelized: early exits pass their witness through, a Reduced outcome is
    decided exactly on the kernel and a YES witness is lifted back. Odd n is
    normalized internally and the padding vertex stripped from the witness.

    Raises:
        VertexLimitExceeded: if the kernel is too large to enumerate
            (possible for k >= 3 at the default limit) - never a silent
            wrong answer.
    """
    bound = _ceil_half(g.m) + k
    even, padded = normalize_even(g)

    def finish(witness: Bisection, path: str) -> DecisionResult:
        if padded:
            witness = _strip_padding(witness, even.n - 1)
        actual = cut_size(g, witness)
        if actual != witness.cut:
            raise AssertionError(
                f"witness bookkeeping bug: cached {witness.cut}, recomputed {actual}"
            )
        return DecisionResult(answer=True, witness=witness, bound_used=bound, path=path)

    if k <= 0:
        return finish(greedy_bisection(even, EMPTY_MATCHING), PATH_TRIVIAL)

    outcome = kernelize(even, k)
    if isinstance(outcome, EarlyYes):
        path = PATH_BIG_MATCHING if outcome.reason == "big_matching" else PATH_CASE1
        return finish(outcome.witness, path)

    assert isinstance(outcome, Reduced)
    size, kernel_witness = max_bisection_exact(outcome.kernel, vertex_limit)
    if size >= _ceil_half(outcome.kernel.m) + k:
        lifted = lift_witness(kernel_witness, outcome.trace, outcome.id_map)
        return finish(lifted, PATH_KERNEL)
    return DecisionResult(answer=False, witness=None, bound_used=bound, path=PATH_KERNEL)
