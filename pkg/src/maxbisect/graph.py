"""Core graph representation and the value types shared by the whole package.

Graphs are simple and undirected, with dense integer vertex ids 0..n-1.
Edges are stored once per unordered pair as (min, max) and kept in canonical
order: sorted by (min endpoint, max endpoint). All deterministic tie-breaking
elsewhere in the package refers to this order. Adjacency is a CSR structure
(indptr/indices) with each neighbor row sorted ascending, so structural
queries are numpy-friendly even at millions of edges.

Graph, Bisection and Matching are immutable after construction (their numpy
buffers are marked read-only) and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from maxbisect import rng

EdgeInput = Iterable[Sequence[int]] | np.ndarray


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph: n vertices, canonical edge arrays, CSR adjacency."""

    n: int
    edges_u: np.ndarray
    edges_v: np.ndarray
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def m(self) -> int:
        return int(self.edges_u.shape[0])

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of v as a read-only array view."""
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return frozenset(self.neighbors(v).tolist())

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = int(np.searchsorted(row, v))
        return i < row.shape[0] and int(row[i]) == v

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges as (min, max) int tuples in canonical order."""
        return list(zip(self.edges_u.tolist(), self.edges_v.tolist()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.edges_u, other.edges_u)
            and np.array_equal(self.edges_v, other.edges_v)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def new_graph(n: int, edges: EdgeInput) -> Graph:
    """Build a validated Graph from an edge collection.

    Accepts any iterable of (u, v) pairs or an (m, 2) integer array. Endpoints
    must lie in [0, n); self-loops are rejected; duplicates of the same
    unordered pair collapse to one edge.

    Raises:
        ValueError: on an out-of-range endpoint or a self-loop.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if isinstance(edges, np.ndarray):
        arr = edges.astype(np.int64, copy=False).reshape(-1, 2)
    else:
        pairs = [tuple(e) for e in edges]
        if any(len(t) != 2 for t in pairs):
            raise ValueError("edges must be pairs of vertex ids")
        arr = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        bad = arr[(arr < 0).any(axis=1) | (arr >= n).any(axis=1)][0]
        raise ValueError(f"edge endpoint out of range [0, {n}): {tuple(bad.tolist())}")
    if arr.size and (arr[:, 0] == arr[:, 1]).any():
        v = int(arr[arr[:, 0] == arr[:, 1]][0, 0])
        raise ValueError(f"self-loop at vertex {v} not allowed")

    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    # Dedup + canonical (lo, hi) lexicographic order via a packed sort key.
    keys = np.unique(lo * np.int64(n) + hi) if arr.size else np.empty(0, np.int64)
    eu = keys // n if n else keys
    ev = keys % n if n else keys

    m = eu.shape[0]
    # CSR with sorted rows: lexsort by (vertex, neighbor).
    heads = np.concatenate([eu, ev])
    tails = np.concatenate([ev, eu])
    order = np.lexsort((tails, heads))
    indices = tails[order]
    counts = np.bincount(heads, minlength=n) if m else np.zeros(n, np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])

    return Graph(
        n=n,
        edges_u=_freeze(eu),
        edges_v=_freeze(ev),
        indptr=_freeze(indptr),
        indices=_freeze(indices.astype(np.int64, copy=False)),
    )


def normalize_even(g: Graph) -> tuple[Graph, bool]:
    """Append one isolated vertex when n is odd; identity otherwise.

    The extra vertex changes neither m nor the maximum bisection size.
    Returns (graph, added_flag).
    """
    if g.n % 2 == 0:
        return g, False
    indptr = np.append(g.indptr, g.indptr[-1])
    even = Graph(
        n=g.n + 1,
        edges_u=g.edges_u,
        edges_v=g.edges_v,
        indptr=_freeze(indptr),
        indices=g.indices,
    )
    return even, True


@dataclass(frozen=True)
class Bisection:
    """Balanced two-part vertex partition with its cached cut size.

    Only size-level invariants are enforced here (disjoint sides, balance
    |X| <= |Y| <= |X|+1); coverage of a particular vertex set and cut
    correctness are checked against a graph by cut_size().
    """

    side_x: frozenset[int]
    side_y: frozenset[int]
    cut: int

    def __post_init__(self) -> None:
        if self.side_x & self.side_y:
            raise ValueError("bisection sides overlap")
        if not len(self.side_x) <= len(self.side_y) <= len(self.side_x) + 1:
            raise ValueError(
                f"bisection unbalanced: |X|={len(self.side_x)}, |Y|={len(self.side_y)}"
            )
        if self.cut < 0:
            raise ValueError("cut size must be non-negative")

    @property
    def n(self) -> int:
        return len(self.side_x) + len(self.side_y)


def side_array(g: Graph, b: Bisection) -> np.ndarray:
    """Per-vertex side labels (0 for X, 1 for Y); validates that b partitions V(g)."""
    if b.n != g.n:
        raise ValueError(f"bisection covers {b.n} vertices, graph has {g.n}")
    side = np.full(g.n, -1, dtype=np.int8)
    xs = np.fromiter(b.side_x, dtype=np.int64, count=len(b.side_x))
    ys = np.fromiter(b.side_y, dtype=np.int64, count=len(b.side_y))
    for ids in (xs, ys):
        if ids.size and (ids.min() < 0 or ids.max() >= g.n):
            raise ValueError("bisection names a vertex outside the graph")
    side[xs] = 0
    side[ys] = 1
    if (side < 0).any():
        raise ValueError("bisection does not cover every vertex")
    return side


def cut_size(g: Graph, b: Bisection) -> int:
    """Number of edges of g with one endpoint on each side of b."""
    side = side_array(g, b)
    return int(np.count_nonzero(side[g.edges_u] != side[g.edges_v]))


def make_bisection(g: Graph, side_x: Iterable[int], side_y: Iterable[int]) -> Bisection:
    """Bisection from explicit sides, with the cut computed from g."""
    b = Bisection(frozenset(side_x), frozenset(side_y), 0)
    return Bisection(b.side_x, b.side_y, cut_size(g, b))


@dataclass(frozen=True, eq=False)
class Matching:
    """Pairwise vertex-disjoint edge set; pairs are (min, max) in canonical order."""

    pairs: np.ndarray  # (p, 2) int64

    def __post_init__(self) -> None:
        arr = np.asarray(self.pairs, dtype=np.int64).reshape(-1, 2)
        if arr.size and np.unique(arr).shape[0] != arr.size:
            raise ValueError("matching pairs share a vertex")
        arr = np.sort(arr, axis=1)  # orient (min, max)
        arr = arr[np.lexsort((arr[:, 1], arr[:, 0]))]  # canonical order
        object.__setattr__(self, "pairs", _freeze(arr))

    def __len__(self) -> int:
        return int(self.pairs.shape[0])

    @cached_property
    def covered(self) -> frozenset[int]:
        """V(M): every endpoint of every pair."""
        return frozenset(self.pairs.ravel().tolist())

    def pair_tuples(self) -> list[tuple[int, int]]:
        return list(zip(self.pairs[:, 0].tolist(), self.pairs[:, 1].tolist()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return np.array_equal(self.pairs, other.pairs)


EMPTY_MATCHING = Matching(pairs=np.empty((0, 2), dtype=np.int64))


# ---------------------------------------------------------------------------
# Deterministic generators
# ---------------------------------------------------------------------------

def gen_star(leaf_count: int) -> Graph:
    """K_{1,leaf_count}: vertex 0 is the center, 1..leaf_count the leaves."""
    if leaf_count < 1:
        raise ValueError("star needs at least one leaf")
    leaves = np.arange(1, leaf_count + 1, dtype=np.int64)
    return new_graph(leaf_count + 1, np.column_stack([np.zeros_like(leaves), leaves]))


def gen_complete(n: int) -> Graph:
    """K_n on n >= 1 vertices."""
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    iu, iv = np.triu_indices(n, k=1)
    return new_graph(n, np.column_stack([iu, iv]).astype(np.int64))


def gen_path(n: int) -> Graph:
    """Path 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    a = np.arange(n - 1, dtype=np.int64)
    return new_graph(n, np.column_stack([a, a + 1]))


def gen_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    a = np.arange(n, dtype=np.int64)
    return new_graph(n, np.column_stack([a, (a + 1) % n]))


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each of the C(n, 2) candidate edges kept with probability p.

    Candidate pairs are visited in canonical order and pair number j consumes
    stream value j of SplitMix64(seed); identical (n, p, seed) triples
    reproduce the identical edge list on every platform.
    """
    if n < 1:
        raise ValueError("gnp needs at least one vertex")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    iu, iv = np.triu_indices(n, k=1)
    keep = rng.stream_unit(seed, iu.shape[0]) < p
    return new_graph(n, np.column_stack([iu[keep], iv[keep]]).astype(np.int64))


def gen_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniformly random simple graph with exactly m edges.

    Candidate endpoints come in (u, v) pairs from consecutive SplitMix64(seed)
    outputs reduced mod n; self-loops and repeats are discarded in stream
    order until m distinct edges remain. Exists because per-pair Bernoulli
    sampling is hopeless for sparse graphs on ~10^6 vertices.
    """
    if n < 2:
        raise ValueError("gnm needs at least two vertices")
    limit = n * (n - 1) // 2
    if not 0 <= m <= limit:
        raise ValueError(f"edge count {m} outside [0, {limit}]")
    chosen = np.empty(0, dtype=np.int64)
    offset = 0
    while chosen.shape[0] < m:
        # rejections are rare on sparse instances, so a thin first overdraw
        # usually suffices; retries widen aggressively
        deficit = m - chosen.shape[0]
        chunk = deficit + deficit // 16 + 1024 if offset == 0 else 4 * deficit + 1024
        vals = rng.stream_uint64(seed, 2 * chunk, offset)
        offset += 2 * chunk
        u = (vals[0::2] % np.uint64(n)).astype(np.int64)
        v = (vals[1::2] % np.uint64(n)).astype(np.int64)
        ok = u != v
        keys = np.minimum(u[ok], v[ok]) * np.int64(n) + np.maximum(u[ok], v[ok])
        merged = np.concatenate([chosen, keys])
        _, first = np.unique(merged, return_index=True)
        # keep first-seen stream order so truncation to m is deterministic
        chosen = merged[np.sort(first)]
    chosen = chosen[:m]
    return new_graph(n, np.column_stack([chosen // n, chosen % n]))
