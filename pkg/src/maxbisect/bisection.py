"""Bisections with a certified cut size: pair the vertices, then split every
pair across the two sides.

Splitting a matched pair guarantees its edge crosses; any other edge crosses
with probability 1/2 under random placement, so the expected cut is
|M| + (m - |M|)/2. The greedy variant derandomizes this by conditional
expectations: at each step it keeps the placement that gains at least as many
crossing edges against the sides built so far, which can only improve on the
expectation. With no seed the result is therefore at least
ceil(m/2 + |M|/2) >= ceil(m/2) + floor(|M|/2).

A seed partition (two equal-size pre-placed sets, used by the kernelizer's
early-witness route) is honored by both variants: seeded vertices are fixed,
forced pairs come first, and the leftovers are paired in ascending id order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from maxbisect import backends
from maxbisect.graph import Bisection, Graph, Matching


@dataclass(frozen=True)
class SeedPartition:
    """Equal-size disjoint vertex sets fixed on side X / side Y up front."""

    seed_x: frozenset[int]
    seed_y: frozenset[int]

    def __post_init__(self) -> None:
        if self.seed_x & self.seed_y:
            raise ValueError("seed sides overlap")
        if len(self.seed_x) != len(self.seed_y):
            raise ValueError(
                f"seed sides must have equal size, got {len(self.seed_x)} and {len(self.seed_y)}"
            )

    @property
    def vertices(self) -> frozenset[int]:
        return self.seed_x | self.seed_y


@dataclass(frozen=True, eq=False)
class PairSequence:
    """Disjoint vertex pairs exhausting V minus the seeds; forced pairs first."""

    pairs: np.ndarray  # (p, 2) int64
    matched_prefix_len: int


def pair_sequence(g: Graph, matching: Matching, seed: SeedPartition | None = None) -> PairSequence:
    """Pair every non-seeded vertex: matching pairs first (canonical order,
    each oriented (min, max)), then leftover vertices in ascending id order,
    paired consecutively.

    Raises:
        ValueError: if n is odd (callers normalize first), if the matching
            is not made of edges of g, if the seed overlaps the matching,
            or if ids are out of range.
    """
    if g.n % 2 != 0:
        raise ValueError(f"pairing needs an even vertex count, got n={g.n}")
    taken = np.zeros(g.n, dtype=bool)
    pairs = matching.pairs
    if pairs.size:
        if pairs.max() >= g.n or pairs.min() < 0:
            raise ValueError("matching names a vertex outside the graph")
        # canonical (min, max) pairs and edges share the same packed key space
        keys = pairs[:, 0] * np.int64(g.n) + pairs[:, 1]
        edge_keys = g.edges_u * np.int64(g.n) + g.edges_v
        pos = np.searchsorted(edge_keys, keys)
        hit = pos < edge_keys.shape[0]
        hit[hit] = edge_keys[pos[hit]] == keys[hit]
        if not hit.all():
            bad = pairs[~hit][0]
            raise ValueError(f"matching pair {tuple(bad.tolist())} is not an edge")
        taken[pairs.ravel()] = True
    if seed is not None and seed.vertices:
        seed_ids = np.fromiter(seed.vertices, dtype=np.int64, count=len(seed.vertices))
        if seed_ids.min() < 0 or seed_ids.max() >= g.n:
            raise ValueError("seed names a vertex outside the graph")
        if taken[seed_ids].any():
            raise ValueError("seed partition overlaps the matching")
        taken[seed_ids] = True
    leftover = np.flatnonzero(~taken).astype(np.int64)
    # even by construction: n, 2|M| and the seed size are all even
    rest = leftover.reshape(-1, 2)
    return PairSequence(
        pairs=np.concatenate([pairs, rest]) if rest.size else pairs,
        matched_prefix_len=len(matching),
    )


def _seeded_side(g: Graph, seed: SeedPartition | None) -> tuple[np.ndarray, int]:
    """Initial side labels (-1 unassigned) and the cut among seeded vertices."""
    side = np.full(g.n, -1, dtype=np.int8)
    if seed is None:
        return side, 0
    side[np.fromiter(seed.seed_x, np.int64, len(seed.seed_x))] = 0
    side[np.fromiter(seed.seed_y, np.int64, len(seed.seed_y))] = 1
    su, sv = side[g.edges_u], side[g.edges_v]
    seed_cut = int(np.count_nonzero((su >= 0) & (sv >= 0) & (su != sv)))
    return side, seed_cut


def _finish(g: Graph, side: np.ndarray, cut: int) -> Bisection:
    return Bisection(
        side_x=frozenset(np.flatnonzero(side == 0).tolist()),
        side_y=frozenset(np.flatnonzero(side == 1).tolist()),
        cut=cut,
    )


def randomized_bisection(
    g: Graph,
    matching: Matching,
    seed_partition: SeedPartition | None = None,
    rng_seed: int = 0,
) -> Bisection:
    """One sample of the randomized pairing procedure.

    Each pair is split by a fair coin (pair i consumes SplitMix64(rng_seed)
    output i; top bit 0 sends the pair's first vertex to X). Without a seed
    partition the expected cut over the coin flips is |M| + (m - |M|)/2:
    matched edges always cross, every other edge crosses with probability
    1/2. Reproducible given rng_seed.
    """
    ps = pair_sequence(g, matching, seed_partition)
    side, seed_cut = _seeded_side(g, seed_partition)
    pu, pv = (np.ascontiguousarray(ps.pairs[:, i]) for i in (0, 1))
    added = backends.random_assign(g.indptr, g.indices, side, pu, pv, rng_seed)
    return _finish(g, side, seed_cut + added)


def greedy_bisection(
    g: Graph,
    matching: Matching,
    seed_partition: SeedPartition | None = None,
) -> Bisection:
    """Deterministic bisection by conditional expectations, O(n + m).

    At step i, pair (u, v) puts u in X and v in Y iff
    |(u,Y)| + |(v,X)| >= |(u,X)| + |(v,Y)| against the sides built so far
    (ties keep u on X), else the opposite. Without a seed the cut is at
    least ceil(m/2 + |M|/2), which this function verifies before returning;
    seeded callers own their stronger bound.
    """
    ps = pair_sequence(g, matching, seed_partition)
    side, seed_cut = _seeded_side(g, seed_partition)
    pu, pv = (np.ascontiguousarray(ps.pairs[:, i]) for i in (0, 1))
    added = backends.greedy_assign(g.indptr, g.indices, side, pu, pv)
    result = _finish(g, side, seed_cut + added)
    if seed_partition is None:
        floor_bound = -((g.m + len(matching)) // -2)  # ceil((m + |M|) / 2)
        if result.cut < floor_bound:
            raise AssertionError(
                f"derandomization bug: cut {result.cut} below guaranteed {floor_bound}"
            )
    return result
