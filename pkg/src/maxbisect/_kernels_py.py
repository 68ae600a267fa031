"""Pure-Python implementations of the hot kernels.

maxbisect._speedups provides the same four functions compiled with Cython;
maxbisect.backends picks whichever is available. Both backends must agree
bit-for-bit: identical placements, identical tie-breaking, identical PRNG
stream, identical enumeration order.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from maxbisect.rng import GAMMA, mix64

BACKEND_NAME = "python"


def matching_scan(edges_u: np.ndarray, edges_v: np.ndarray, n: int) -> np.ndarray:
    """Greedy maximal matching: take each edge (in the given order) whose
    endpoints are both uncovered. Returns the taken pairs as an (p, 2) array."""
    covered = bytearray(n)
    pu: list[int] = []
    pv: list[int] = []
    for u, v in zip(edges_u.tolist(), edges_v.tolist()):
        if not covered[u] and not covered[v]:
            covered[u] = covered[v] = 1
            pu.append(u)
            pv.append(v)
    out = np.empty((len(pu), 2), dtype=np.int64)
    out[:, 0] = pu
    out[:, 1] = pv
    return out


def greedy_assign(
    indptr: np.ndarray,
    indices: np.ndarray,
    side: np.ndarray,
    pairs_u: np.ndarray,
    pairs_v: np.ndarray,
) -> int:
    """Place each pair on opposite sides by the conditional-expectation rule.

    ``side`` holds -1 for unplaced vertices and 0/1 for vertices already on
    side X/Y (seeds). For pair (u, v), u goes to X and v to Y iff
    |(u,Y)| + |(v,X)| >= |(u,X)| + |(v,Y)| against the sides built so far
    (ties keep u on X); otherwise the opposite. Mutates ``side`` and returns
    the number of cut edges gained by the placements (edges between two
    seeds are not counted here).
    """
    ptr = indptr.tolist()
    idx = indices.tolist()
    lab = side.tolist()
    cut = 0
    for u, v in zip(pairs_u.tolist(), pairs_v.tolist()):
        ux = uy = 0
        adjacent = 0
        for t in idx[ptr[u]:ptr[u + 1]]:
            s = lab[t]
            if s == 0:
                ux += 1
            elif s == 1:
                uy += 1
            if t == v:
                adjacent = 1
        vx = vy = 0
        for t in idx[ptr[v]:ptr[v + 1]]:
            s = lab[t]
            if s == 0:
                vx += 1
            elif s == 1:
                vy += 1
        if uy + vx >= ux + vy:
            lab[u] = 0
            lab[v] = 1
            cut += uy + vx + adjacent
        else:
            lab[u] = 1
            lab[v] = 0
            cut += ux + vy + adjacent
    side[:] = lab
    return cut


def random_assign(
    indptr: np.ndarray,
    indices: np.ndarray,
    side: np.ndarray,
    pairs_u: np.ndarray,
    pairs_v: np.ndarray,
    rng_seed: int,
) -> int:
    """Place each pair on opposite sides by a fair coin.

    Pair i consumes stream value i of SplitMix64(rng_seed); the top bit is
    the coin (0 sends u to X). Mutates ``side`` and returns the cut gained.
    """
    ptr = indptr.tolist()
    idx = indices.tolist()
    lab = side.tolist()
    state = rng_seed & 0xFFFFFFFFFFFFFFFF
    cut = 0
    for u, v in zip(pairs_u.tolist(), pairs_v.tolist()):
        state = (state + GAMMA) & 0xFFFFFFFFFFFFFFFF
        su = mix64(state) >> 63
        sv = 1 - su
        for t in idx[ptr[u]:ptr[u + 1]]:
            if lab[t] == sv:
                cut += 1
        lab[u] = su
        for t in idx[ptr[v]:ptr[v + 1]]:
            if lab[t] == su:
                cut += 1
        lab[v] = sv
    side[:] = lab
    return cut


def best_bisection(masks: np.ndarray, n: int) -> tuple[int, int]:
    """Exhaustive maximum bisection over all X of size n/2 with 0 in X.

    ``masks`` holds one adjacency bitmask per vertex (bit t set iff the
    vertex is adjacent to t); n must be even and at most 64. Candidate sets
    are visited in lexicographic order and the first maximum is kept, so the
    winner is the lexicographically smallest maximizing X. Returns
    (best_cut, best_x_bitmask).
    """
    half = n // 2
    bits = [1 << i for i in range(n)]
    adj = [int(x) for x in masks.tolist()]
    best_cut = -1
    best_mask = 0
    for combo in combinations(range(1, n), half - 1):
        xmask = 1
        for c in combo:
            xmask |= bits[c]
        ymask = ~xmask
        cut = (adj[0] & ymask).bit_count()
        for c in combo:
            cut += (adj[c] & ymask).bit_count()
        if cut > best_cut:
            best_cut = cut
            best_mask = xmask
    return best_cut, best_mask
