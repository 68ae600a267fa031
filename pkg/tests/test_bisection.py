import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxbisect import (
    EMPTY_MATCHING,
    Matching,
    SeedPartition,
    cut_size,
    gen_gnp,
    gen_path,
    gen_star,
    greedy_bisection,
    maximal_matching,
    new_graph,
    pair_sequence,
    randomized_bisection,
)
from oracles import brute_max_bisection


def pairs_of(ps):
    return list(zip(ps.pairs[:, 0].tolist(), ps.pairs[:, 1].tolist()))


class TestPairSequence:
    def test_p4_no_leftovers(self):
        g = gen_path(4)
        ps = pair_sequence(g, maximal_matching(g))
        assert pairs_of(ps) == [(0, 1), (2, 3)] and ps.matched_prefix_len == 2

    def test_star_ascending_leftovers(self):
        g = gen_star(5)
        ps = pair_sequence(g, maximal_matching(g))
        assert pairs_of(ps) == [(0, 1), (2, 3), (4, 5)]
        assert ps.matched_prefix_len == 1

    def test_edgeless_all_ascending(self):
        g = new_graph(6, [])
        ps = pair_sequence(g, EMPTY_MATCHING)
        assert pairs_of(ps) == [(0, 1), (2, 3), (4, 5)]

    def test_odd_n_rejected(self):
        g = new_graph(3, [(0, 1)])
        with pytest.raises(ValueError, match="even"):
            pair_sequence(g, EMPTY_MATCHING)

    def test_seed_overlap_rejected(self):
        g = gen_star(5)
        m = maximal_matching(g)
        seed = SeedPartition(frozenset({1}), frozenset({2}))
        with pytest.raises(ValueError, match="overlaps"):
            pair_sequence(g, m, seed)

    def test_non_edge_matching_rejected(self):
        g = gen_star(5)
        with pytest.raises(ValueError, match="not an edge"):
            pair_sequence(g, Matching(pairs=np.array([[2, 3]])))

    def test_seed_vertices_excluded(self):
        g = new_graph(6, [])
        seed = SeedPartition(frozenset({2}), frozenset({5}))
        ps = pair_sequence(g, EMPTY_MATCHING, seed)
        assert pairs_of(ps) == [(0, 1), (3, 4)]


class TestSeedPartition:
    def test_unequal_sizes_rejected(self):
        with pytest.raises(ValueError, match="equal size"):
            SeedPartition(frozenset({0, 1}), frozenset({2}))

    def test_overlap_rejected(self):
        with pytest.raises(ValueError, match="overlap"):
            SeedPartition(frozenset({0}), frozenset({0}))


class TestRandomizedBisection:
    def test_matched_pair_always_split(self):
        g = new_graph(2, [(0, 1)])
        m = maximal_matching(g)
        for seed in range(20):
            assert randomized_bisection(g, m, rng_seed=seed).cut == 1

    def test_edgeless_cut_zero(self):
        g = new_graph(4, [])
        b = randomized_bisection(g, EMPTY_MATCHING, rng_seed=3)
        assert b.cut == 0 and len(b.side_x) == 2

    def test_reproducible(self):
        g = gen_gnp(20, 0.4, 8)
        m = maximal_matching(g)
        assert randomized_bisection(g, m, rng_seed=5) == randomized_bisection(g, m, rng_seed=5)

    def test_balanced_and_cut_matches_recount(self):
        g = gen_gnp(18, 0.5, 2)
        m = maximal_matching(g)
        for seed in range(10):
            b = randomized_bisection(g, m, rng_seed=seed)
            assert len(b.side_x) == len(b.side_y) == g.n // 2
            assert cut_size(g, b) == b.cut

    def test_mean_tracks_expectation(self):
        # |M| + (m - |M|)/2 is the expected cut; fixed seeds keep this exact
        g = gen_gnp(20, 0.3, 42)
        m = maximal_matching(g)
        expect = len(m) + (g.m - len(m)) / 2
        cuts = [randomized_bisection(g, m, rng_seed=s).cut for s in range(2000)]
        mean = sum(cuts) / len(cuts)
        stderr = np.std(cuts, ddof=1) / math.sqrt(len(cuts))
        assert abs(mean - expect) <= 3 * stderr


class TestGreedyBisection:
    def test_k2_meets_bound_exactly(self):
        g = new_graph(2, [(0, 1)])
        b = greedy_bisection(g, maximal_matching(g))
        assert b.cut == 1  # ceil(1/2) + floor(1/2)

    def test_c4_beats_bound(self):
        # brute_max_bisection over all C(4,2) sides gives max 4
        from maxbisect import gen_cycle

        g = gen_cycle(4)
        b = greedy_bisection(g, maximal_matching(g))
        assert b.cut >= 3
        assert brute_max_bisection(4, g.edge_list())[0] == 4

    def test_star_reaches_exact_maximum(self):
        g = gen_star(5)
        b = greedy_bisection(g, maximal_matching(g))
        assert b.cut >= 3
        assert brute_max_bisection(6, g.edge_list())[0] == 3

    def test_cut_field_matches_recount(self):
        for seed in range(6):
            g = gen_gnp(26, 0.35, seed)
            b = greedy_bisection(g, maximal_matching(g))
            assert cut_size(g, b) == b.cut

    def test_empty_matching_still_half(self):
        g = gen_gnp(16, 0.5, 4)
        b = greedy_bisection(g, EMPTY_MATCHING)
        assert b.cut >= -(g.m // -2)

    def test_empty_graph(self):
        g = new_graph(0, [])
        b = greedy_bisection(g, EMPTY_MATCHING)
        assert b.cut == 0 and b.n == 0


@given(
    n=st.integers(min_value=1, max_value=30),
    p=st.floats(min_value=0.0, max_value=1.0),
    seed=st.integers(min_value=0, max_value=2**32),
)
@settings(max_examples=80, deadline=None)
def test_greedy_guarantee_property(n, p, seed):
    g = gen_gnp(2 * n, p, seed)
    m = maximal_matching(g)
    b = greedy_bisection(g, m)
    # monotone form: at least the expectation, rounded up
    assert b.cut >= -((g.m + len(m)) // -2)
    assert b.cut >= -(g.m // -2) + len(m) // 2
    assert len(b.side_x) == len(b.side_y)
    # forced prefix splits every matched pair
    for u, v in m.pair_tuples():
        assert (u in b.side_x) != (v in b.side_x)
