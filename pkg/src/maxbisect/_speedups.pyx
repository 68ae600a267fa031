# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels.

Contracts, tie-breaking and the PRNG stream are identical to
maxbisect._kernels_py; the two backends must agree bit-for-bit.
"""

import numpy as np

from libc.stdint cimport int8_t, int64_t, uint64_t

BACKEND_NAME = "cython"

cdef extern from *:
    """
    #if defined(_MSC_VER)
    #include <intrin.h>
    #define MAXBISECT_POPCOUNT(x) ((int)__popcnt64(x))
    #else
    #define MAXBISECT_POPCOUNT(x) __builtin_popcountll(x)
    #endif
    """
    int MAXBISECT_POPCOUNT(unsigned long long) nogil


cdef inline uint64_t _mix64(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9U
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EBU
    return z ^ (z >> 31)


def matching_scan(edges_u, edges_v, n):
    cdef const int64_t[::1] eu = edges_u
    cdef const int64_t[::1] ev = edges_v
    cdef Py_ssize_t m = eu.shape[0]
    covered_arr = np.zeros(n, dtype=np.int8)
    cdef int8_t[::1] covered = covered_arr
    out_arr = np.empty((n // 2, 2), dtype=np.int64)
    cdef int64_t[:, ::1] out = out_arr
    cdef Py_ssize_t e, p = 0
    cdef int64_t u, v
    for e in range(m):
        u = eu[e]
        v = ev[e]
        if covered[u] == 0 and covered[v] == 0:
            covered[u] = 1
            covered[v] = 1
            out[p, 0] = u
            out[p, 1] = v
            p += 1
    return out_arr[:p].copy()


def greedy_assign(indptr, indices, side, pairs_u, pairs_v):
    cdef const int64_t[::1] ptr = indptr
    cdef const int64_t[::1] idx = indices
    cdef int8_t[::1] lab = side
    cdef const int64_t[::1] pu = pairs_u
    cdef const int64_t[::1] pv = pairs_v
    cdef Py_ssize_t i, t
    cdef int64_t u, v, w, ux, uy, vx, vy, adjacent, cut = 0
    cdef int8_t s
    for i in range(pu.shape[0]):
        u = pu[i]
        v = pv[i]
        ux = uy = adjacent = 0
        for t in range(ptr[u], ptr[u + 1]):
            w = idx[t]
            s = lab[w]
            if s == 0:
                ux += 1
            elif s == 1:
                uy += 1
            if w == v:
                adjacent = 1
        vx = vy = 0
        for t in range(ptr[v], ptr[v + 1]):
            s = lab[idx[t]]
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
    return cut


def random_assign(indptr, indices, side, pairs_u, pairs_v, rng_seed):
    cdef const int64_t[::1] ptr = indptr
    cdef const int64_t[::1] idx = indices
    cdef int8_t[::1] lab = side
    cdef const int64_t[::1] pu = pairs_u
    cdef const int64_t[::1] pv = pairs_v
    cdef uint64_t state = <uint64_t>(rng_seed & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t gamma = <uint64_t>0x9E3779B97F4A7C15U
    cdef Py_ssize_t i, t
    cdef int64_t u, v, cut = 0
    cdef int8_t su, sv
    for i in range(pu.shape[0]):
        u = pu[i]
        v = pv[i]
        state = state + gamma
        su = <int8_t>(_mix64(state) >> 63)
        sv = 1 - su
        for t in range(ptr[u], ptr[u + 1]):
            if lab[idx[t]] == sv:
                cut += 1
        lab[u] = su
        for t in range(ptr[v], ptr[v + 1]):
            if lab[idx[t]] == su:
                cut += 1
        lab[v] = sv
    return cut


def best_bisection(masks, int n):
    cdef const uint64_t[::1] adj = masks
    cdef int half = n // 2
    cdef int r = half - 1
    cdef int64_t c[64]
    cdef uint64_t xmask, ny, best_mask = 0
    cdef int64_t best = -1, cut
    cdef int i, j
    for i in range(r):
        c[i] = i + 1
    while True:
        xmask = 1
        for i in range(r):
            xmask |= (<uint64_t>1) << c[i]
        ny = ~xmask
        cut = __builtin_popcountll(adj[0] & ny)
        for i in range(r):
            cut += __builtin_popcountll(adj[c[i]] & ny)
        if cut > best:
            best = cut
            best_mask = xmask
        i = r - 1
        while i >= 0 and c[i] == n - r + i:
            i -= 1
        if i < 0:
            break
        c[i] += 1
        for j in range(i + 1, r):
            c[j] = c[j - 1] + 1
    return int(best), int(best_mask)
