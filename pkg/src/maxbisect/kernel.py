"""Kernelization for deciding whether a graph has a bisection of size at
least ceil(m/2) + k.

The pipeline shrinks an instance to a kernel with at most 4k(k+1) vertices
and 4k*n' + 8k^2 edges, or terminates early with a certified witness:

  * big matching: a maximal matching with |M| >= 2k already certifies a
    greedy bisection of size >= ceil(m/2) + floor(|M|/2) >= ceil(m/2) + k;
  * seeded witness: some matched vertex z has, outside the matching, at
    least 2k - |M| + 1 neighbors and equally many non-neighbors. Fixing
    those neighbors on side X and z plus non-neighbors on side Y banks
    exactly 2k - |M| + 1 crossing edges (the uncovered vertices form an
    independent set, so no other edges run between the seeds), and the
    seeded greedy bisection reaches ceil(m/2) + k;
  * twin reduction: an independent class of vertices with identical open
    neighborhoods that holds n/2 + j vertices (j > 0) loses 2j members.
    Any balanced bisection puts at least j of them on each side, so the
    answer is preserved for every k, and each deleted twin contributes
    exactly its class degree to any lifted cut.

The three phases loop to a global fixpoint so that, on a Reduced exit, the
matching test, the seed test and the twin-class bound all hold on the final
graph simultaneously; that is what makes the kernel-size assertions valid.
Deletions are replayed in reverse by lift_witness to turn any kernel
bisection into a bisection of the original graph, growing the cut by
exactly j * degree per step.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from maxbisect.bisection import SeedPartition, greedy_bisection
from maxbisect.graph import Bisection, Graph, Matching, cut_size, new_graph
from maxbisect.matching import maximal_matching

NEIGHBORS_OUTSIDE = "neighbors_outside_M"
NON_NEIGHBORS_OUTSIDE = "non_neighbors_outside_M"


@dataclass(frozen=True)
class SideSet:
    """For a matched vertex, the smaller of its two candidate seed pools:
    neighbors outside the matching vs. non-neighbors outside the matching."""

    vertex: int
    members: frozenset[int]
    which_side: str


def side_set(g: Graph, matching: Matching, x: int) -> SideSet:
    """Smaller of N(x) \\ V(M) and V \\ (V(M) u N(x)); ties pick the neighbors.

    Raises:
        ValueError: if x is not covered by the matching.
    """
    covered = matching.covered
    if x not in covered:
        raise ValueError(f"vertex {x} is not covered by the matching")
    nb = g.neighbor_set(x)
    neighbors_outside = nb - covered
    # |V \ (V(M) u N(x))| without materializing it: uncovered minus the
    # uncovered neighbors (x itself is covered).
    other_size = g.n - len(covered) - len(neighbors_outside)
    if len(neighbors_outside) <= other_size:
        return SideSet(x, frozenset(neighbors_outside), NEIGHBORS_OUTSIDE)
    members = frozenset(range(g.n)) - covered - nb
    return SideSet(x, members, NON_NEIGHBORS_OUTSIDE)


def find_seed_vertex(g: Graph, matching: Matching, k: int) -> int | None:
    """Smallest matched vertex whose side set reaches 2k - |M| + 1, or None.

    Only meaningful below the big-matching threshold.

    Raises:
        ValueError: if called with |M| >= 2k (contract violation).
    """
    if len(matching) >= 2 * k:
        raise ValueError(
            f"seed search requires |M| < 2k, got |M|={len(matching)}, k={k}"
        )
    threshold = 2 * k - len(matching) + 1
    if threshold > g.n:
        return None
    for x in sorted(matching.covered):
        if len(side_set(g, matching, x).members) >= threshold:
            return x
    return None


def seeded_witness(g: Graph, matching: Matching, k: int, z: int) -> Bisection:
    """Witness bisection of size >= ceil(m/2) + k built around seed vertex z.

    Side X seeds the 2k - |M| + 1 lowest-id uncovered neighbors of z; side Y
    seeds z plus the 2k - |M| lowest-id uncovered non-neighbors. The edges
    between the seeds are exactly z's edges into the X seed (verified here),
    the matching minus z's pair is forced, and the seeded greedy fills in
    the rest.

    Raises:
        ValueError: if z's side pools are too small (z did not come from
            find_seed_vertex).
    """
    covered = matching.covered
    nb = g.neighbor_set(z)
    need = 2 * k - len(matching) + 1
    xs = sorted(nb - covered)[:need]
    ys_pool = sorted(frozenset(range(g.n)) - covered - nb)[: need - 1]
    if len(xs) < need or len(ys_pool) < need - 1:
        raise ValueError(f"vertex {z} cannot seed a witness for k={k}")
    ys = [z] + ys_pool
    seed = SeedPartition(frozenset(xs), frozenset(ys))

    ys_set = set(ys)
    seed_edges = sum(1 for u in xs for w in g.neighbors(u).tolist() if w in ys_set)
    if seed_edges != need:
        raise AssertionError(
            f"seed construction bug: {seed_edges} edges between seeds, expected {need}"
        )

    keep = (matching.pairs[:, 0] != z) & (matching.pairs[:, 1] != z)
    forced = Matching(pairs=matching.pairs[keep])
    witness = greedy_bisection(g, forced, seed)
    bound = -(g.m // -2) + k
    if witness.cut < bound:
        raise AssertionError(
            f"seeded witness bug: cut {witness.cut} below guaranteed {bound}"
        )
    return witness


# ---------------------------------------------------------------------------
# Twin reduction
# ---------------------------------------------------------------------------

def twin_classes(g: Graph) -> list[list[int]]:
    """Partition of V into classes of identical open neighborhood.

    Classes of size >= 2 are automatically independent sets (a vertex cannot
    be its own neighbor). Members are ascending; classes are ordered by
    their smallest member.
    """
    groups: dict[bytes, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.neighbors(v).tobytes(), []).append(v)
    return sorted(groups.values(), key=lambda cls: cls[0])


@dataclass(frozen=True)
class TraceStep:
    """One twin-class deletion: 2j vertices with open neighborhood equal to
    ``neighborhood`` removed from a graph that had ``n_before`` vertices."""

    neighborhood: tuple[int, ...]
    deleted: tuple[int, ...]
    degree: int
    n_before: int

    def __post_init__(self) -> None:
        if len(self.deleted) == 0 or len(self.deleted) % 2 != 0:
            raise ValueError("a trace step must delete a positive even number of twins")
        if self.degree != len(self.neighborhood):
            raise ValueError("class degree must match the neighborhood size")

    @property
    def half(self) -> int:
        """j: how many deleted twins each side of a bisection reabsorbs."""
        return len(self.deleted) // 2


@dataclass(frozen=True)
class ReductionTrace:
    """Ordered twin deletions, ids relative to the graph the trace lifts into."""

    steps: tuple[TraceStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def cut_shift(self) -> int:
        """Total cut gained by reinserting every step: sum of j * degree."""
        return sum(s.half * s.degree for s in self.steps)

    def edge_shift(self) -> int:
        """Total edges removed by the recorded deletions: sum of 2j * degree."""
        return sum(len(s.deleted) * s.degree for s in self.steps)

    def to_json(self) -> str:
        return json.dumps(
            [
                {
                    "neighborhood": list(s.neighborhood),
                    "deleted": list(s.deleted),
                    "degree": s.degree,
                    "n_before": s.n_before,
                }
                for s in self.steps
            ]
        )

    @classmethod
    def from_json(cls, text: str) -> "ReductionTrace":
        records = json.loads(text)
        return cls(
            steps=tuple(
                TraceStep(
                    neighborhood=tuple(r["neighborhood"]),
                    deleted=tuple(r["deleted"]),
                    degree=r["degree"],
                    n_before=r["n_before"],
                )
                for r in records
            )
        )


def reduce_large_twin_class(g: Graph) -> tuple[Graph, ReductionTrace]:
    """Delete surplus twins until no class of identical-neighborhood vertices
    exceeds n/2; ids in the returned trace refer to the input graph.

    A class of size n/2 + j (j > 0) loses its 2j highest-id members: every
    balanced bisection keeps at least j class members on each side, so for
    every k the input has a bisection of size >= ceil(m/2) + k iff the
    output does. Survivors are relabeled to stay dense; the mapping is
    recoverable via surviving_ids().

    Raises:
        ValueError: if n is odd.
    """
    if g.n % 2 != 0:
        raise ValueError(f"twin reduction needs an even vertex count, got n={g.n}")
    cur = g
    cur_to_input = np.arange(g.n, dtype=np.int64)
    steps: list[TraceStep] = []
    while True:
        surplus = None
        for cls in twin_classes(cur):
            if 2 * len(cls) > cur.n:
                surplus = cls
                break
        if surplus is None:
            break
        j = len(surplus) - cur.n // 2
        doomed = np.asarray(surplus[-2 * j:], dtype=np.int64)
        steps.append(
            TraceStep(
                neighborhood=tuple(cur_to_input[cur.neighbors(surplus[0])].tolist()),
                deleted=tuple(cur_to_input[doomed].tolist()),
                degree=cur.degree(surplus[0]),
                n_before=cur.n,
            )
        )
        keep = np.ones(cur.n, dtype=bool)
        keep[doomed] = False
        remap = np.cumsum(keep) - 1
        emask = keep[cur.edges_u] & keep[cur.edges_v]
        cur = new_graph(
            cur.n - 2 * j,
            np.column_stack([remap[cur.edges_u[emask]], remap[cur.edges_v[emask]]]),
        )
        cur_to_input = cur_to_input[keep]
    return cur, ReductionTrace(steps=tuple(steps))


def surviving_ids(n: int, trace: ReductionTrace) -> np.ndarray:
    """Input-graph ids that survive the trace, ascending: index = reduced id."""
    keep = np.ones(n, dtype=bool)
    for step in trace.steps:
        keep[list(step.deleted)] = False
    return np.flatnonzero(keep).astype(np.int64)


# ---------------------------------------------------------------------------
# Full kernelization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EarlyYes:
    """Instance certified YES before reaching a kernel."""

    witness: Bisection  # on the even-normalized input graph
    reason: str  # "big_matching" | "case1"


@dataclass(frozen=True)
class Reduced:
    """Equivalent instance of bounded size plus everything needed to lift."""

    kernel: Graph
    k: int
    trace: ReductionTrace  # steps in input-graph ids
    id_map: dict[int, int] = field(repr=False)  # input id -> kernel id

    @property
    def vertex_bound(self) -> int:
        return 4 * self.k * (self.k + 1)

    @property
    def edge_bound(self) -> int:
        return 4 * self.k * self.kernel.n + 8 * self.k * self.k


KernelOutcome = Union[EarlyYes, Reduced]


def _uniform_remainder_check(g: Graph, matching: Matching) -> None:
    """Vertices outside V(M) and outside every side set must share one open
    neighborhood; anything else means a phase of the pipeline is broken."""
    out: set[int] = set(range(g.n)) - matching.covered
    for x in sorted(matching.covered):
        out -= side_set(g, matching, x).members
    keys = {g.neighbors(v).tobytes() for v in out}
    if len(keys) > 1:
        raise AssertionError(
            "pipeline bug: remainder vertices split across twin classes"
        )


def _kernel_bounds_check(g: Graph, k: int) -> None:
    if g.n > 4 * k * (k + 1):
        raise AssertionError(
            f"kernel bound bug: n'={g.n} exceeds 4k(k+1)={4 * k * (k + 1)}"
        )
    if g.m > 4 * k * g.n + 8 * k * k:
        raise AssertionError(
            f"kernel bound bug: m'={g.m} exceeds 4kn'+8k^2={4 * k * g.n + 8 * k * k}"
        )


def _certified(original: Graph, witness: Bisection, k: int) -> Bisection:
    """Recompute the witness cut on the input graph and gate the bound."""
    actual = cut_size(original, witness)
    if actual != witness.cut:
        raise AssertionError(
            f"witness bookkeeping bug: cached cut {witness.cut}, recomputed {actual}"
        )
    bound = -(original.m // -2) + k
    if actual < bound:
        raise AssertionError(f"witness bug: cut {actual} below promised {bound}")
    return witness


def kernelize(g: Graph, k: int) -> KernelOutcome:
    """Shrink (g, k) to an equivalent instance or certify YES outright.

    Loops matching test -> seed test -> twin reduction until the graph stops
    changing. Early exits return a witness on g (reductions already applied
    are undone by lifting); a Reduced exit carries the kernel, the deletion
    trace and the id relabeling, and has passed the size assertions
    n' <= 4k(k+1) and m' <= 4k*n' + 8k^2.

    Raises:
        ValueError: if k < 1 or n is odd.
    """
    if k < 1:
        raise ValueError(f"kernelization requires k >= 1, got {k}")
    if g.n % 2 != 0:
        raise ValueError("kernelize requires an even-normalized graph")
    cur = g
    cur_to_orig = np.arange(g.n, dtype=np.int64)
    steps: list[TraceStep] = []

    def lift_back(witness: Bisection) -> Bisection:
        if not steps:
            return _certified(g, witness, k)
        id_map = {int(o): i for i, o in enumerate(cur_to_orig.tolist())}
        lifted = lift_witness(witness, ReductionTrace(tuple(steps)), id_map)
        return _certified(g, lifted, k)

    while True:
        m_cur = maximal_matching(cur)
        if len(m_cur) >= 2 * k:
            return EarlyYes(witness=lift_back(greedy_bisection(cur, m_cur)), reason="big_matching")
        z = find_seed_vertex(cur, m_cur, k)
        if z is not None:
            return EarlyYes(witness=lift_back(seeded_witness(cur, m_cur, k, z)), reason="case1")
        reduced, trace = reduce_large_twin_class(cur)
        if not trace.steps:
            _uniform_remainder_check(cur, m_cur)
            _kernel_bounds_check(cur, k)
            return Reduced(
                kernel=cur,
                k=k,
                trace=ReductionTrace(tuple(steps)),
                id_map={int(o): i for i, o in enumerate(cur_to_orig.tolist())},
            )
        for st in trace.steps:
            steps.append(
                TraceStep(
                    neighborhood=tuple(cur_to_orig[list(st.neighborhood)].tolist()),
                    deleted=tuple(cur_to_orig[list(st.deleted)].tolist()),
                    degree=st.degree,
                    n_before=st.n_before,
                )
            )
        cur_to_orig = cur_to_orig[surviving_ids(cur.n, trace)]
        cur = reduced


def lift_witness(b: Bisection, trace: ReductionTrace, id_map: dict[int, int]) -> Bisection:
    """Map a kernel bisection back to the trace's input graph.

    Replays deletions newest-first, reinserting each step's 2j twins j per
    side; twins are interchangeable, so the cut grows by exactly j * degree
    regardless of how the recorded neighborhood is split. The returned cut
    is b.cut + trace.cut_shift().

    Raises:
        ValueError: if the bisection does not match id_map or the trace
            reinserts a vertex that is already present.
    """
    kernel_to_orig = {kern: orig for orig, kern in id_map.items()}
    if len(kernel_to_orig) != len(id_map):
        raise ValueError("id_map is not one-to-one")
    if b.n != len(id_map):
        raise ValueError(
            f"bisection covers {b.n} vertices but id_map relabels {len(id_map)}"
        )
    try:
        xs = {kernel_to_orig[v] for v in b.side_x}
        ys = {kernel_to_orig[v] for v in b.side_y}
    except KeyError as exc:
        raise ValueError(f"bisection names unknown kernel vertex {exc.args[0]}") from None
    present = xs | ys
    cut = b.cut
    for step in reversed(trace.steps):
        back = set(step.deleted)
        if back & present:
            raise ValueError("trace reinserts a vertex that is already present")
        if not set(step.neighborhood) <= present:
            raise ValueError("trace neighborhood refers to absent vertices")
        xs.update(step.deleted[: step.half])
        ys.update(step.deleted[step.half:])
        present |= back
        cut += step.half * step.degree
    return Bisection(side_x=frozenset(xs), side_y=frozenset(ys), cut=cut)
