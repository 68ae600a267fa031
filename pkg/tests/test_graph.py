import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxbisect import (
    Bisection,
    cut_size,
    gen_complete,
    gen_cycle,
    gen_gnm,
    gen_gnp,
    gen_path,
    gen_star,
    make_bisection,
    new_graph,
    normalize_even,
)
from maxbisect.rng import SplitMix64, stream_uint64, stream_unit

from oracles import cut_by_scan


class TestNewGraph:
    def test_single_edge(self):
        g = new_graph(2, [(0, 1)])
        assert g.n == 2 and g.m == 1
        assert g.edge_list() == [(0, 1)]

    def test_duplicate_unordered_pair_collapses(self):
        g = new_graph(4, [(0, 1), (1, 0)])
        assert g.m == 1

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            new_graph(3, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            new_graph(3, [(0, 3)])
        with pytest.raises(ValueError, match="out of range"):
            new_graph(3, [(-1, 2)])

    def test_canonical_edge_order(self):
        g = new_graph(4, [(3, 2), (1, 0), (0, 2)])
        assert g.edge_list() == [(0, 1), (0, 2), (2, 3)]

    def test_empty_graph(self):
        g = new_graph(0, [])
        assert g.n == 0 and g.m == 0

    def test_adjacency_consistent_with_edges(self):
        g = new_graph(5, [(0, 1), (1, 2), (0, 3), (2, 4)])
        for u, v in g.edge_list():
            assert v in g.neighbor_set(u) and u in g.neighbor_set(v)
        total = sum(g.degree(v) for v in range(g.n))
        assert total == 2 * g.m

    def test_neighbors_sorted(self):
        g = new_graph(6, [(5, 0), (0, 3), (0, 1), (2, 0)])
        assert g.neighbors(0).tolist() == [1, 2, 3, 5]

    def test_arrays_read_only(self):
        g = new_graph(3, [(0, 1)])
        with pytest.raises(ValueError):
            g.edges_u[0] = 2


@st.composite
def edge_lists(draw):
    n = draw(st.integers(min_value=1, max_value=16))
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pool), max_size=40)) if pool else []
    return n, edges


@given(edge_lists())
@settings(max_examples=60, deadline=None)
def test_graph_invariants_hold(case):
    n, edges = case
    g = new_graph(n, edges)
    assert g.m == len({frozenset(e) for e in edges})
    recon = {frozenset(e) for e in g.edge_list()}
    assert recon == {frozenset(e) for e in edges}
    for v in range(n):
        for w in g.neighbors(v).tolist():
            assert g.has_edge(v, w) and g.has_edge(w, v)


class TestNormalizeEven:
    def test_odd_gains_isolated_vertex(self):
        g = gen_star(2)  # K_{1,2}, n=3
        even, added = normalize_even(g)
        assert added and even.n == 4 and even.m == 2
        assert even.degree(3) == 0

    def test_even_unchanged(self):
        g = new_graph(2, [(0, 1)])
        even, added = normalize_even(g)
        assert not added and even is g

    def test_empty_graph_is_even(self):
        g = new_graph(0, [])
        even, added = normalize_even(g)
        assert not added and even.n == 0


class TestCutSize:
    def test_c4_alternating(self):
        # frozen from oracles.cut_by_scan over the 4 cycle edges
        g = gen_cycle(4)
        assert cut_size(g, make_bisection(g, [0, 2], [1, 3])) == 4
        assert cut_by_scan(g.edge_list(), {0, 2}) == 4

    def test_k2(self):
        g = new_graph(2, [(0, 1)])
        assert cut_size(g, make_bisection(g, [0], [1])) == 1

    def test_edgeless(self):
        g = new_graph(4, [])
        assert cut_size(g, make_bisection(g, [0, 1], [2, 3])) == 0

    def test_partition_must_cover(self):
        g = new_graph(4, [(0, 1)])
        with pytest.raises(ValueError, match="covers 2 vertices"):
            cut_size(g, Bisection(frozenset({0}), frozenset({1}), 0))
        with pytest.raises(ValueError, match="outside the graph"):
            cut_size(g, Bisection(frozenset({0, 4}), frozenset({1, 2}), 0))

    def test_overlap_rejected(self):
        with pytest.raises(ValueError, match="overlap"):
            Bisection(frozenset({0, 1}), frozenset({1, 2}), 0)

    def test_unbalanced_rejected(self):
        with pytest.raises(ValueError, match="unbalanced"):
            Bisection(frozenset({0, 1, 2}), frozenset({3}), 0)

    def test_crossing_plus_internal_is_m(self, named_families):
        for g in named_families.values():
            if g.n < 2:
                continue
            half = g.n // 2
            b = make_bisection(g, range(half), range(half, g.n))
            internal = sum(
                1 for u, v in g.edge_list() if (u < half) == (v < half)
            )
            assert b.cut + internal == g.m


class TestGenerators:
    def test_star(self):
        g = gen_star(5)
        assert g.n == 6 and g.m == 5
        assert g.degree(0) == 5 and all(g.degree(v) == 1 for v in range(1, 6))

    def test_star_single_leaf_is_k2(self):
        assert gen_star(1).edge_list() == [(0, 1)]

    def test_star_three(self):
        g = gen_star(3)
        assert g.n == 4 and g.m == 3

    def test_star_rejects_zero(self):
        with pytest.raises(ValueError):
            gen_star(0)

    @pytest.mark.parametrize("n,m", [(4, 6), (1, 0), (6, 15)])
    def test_complete(self, n, m):
        assert gen_complete(n).m == m

    def test_path_cycle(self):
        assert gen_path(4).edge_list() == [(0, 1), (1, 2), (2, 3)]
        assert gen_cycle(3).m == 3

    def test_gnp_extremes(self):
        assert gen_gnp(10, 0.0, 1).m == 0
        assert gen_gnp(10, 1.0, 1).m == 45

    def test_gnp_deterministic(self):
        a = gen_gnp(30, 0.4, 99)
        b = gen_gnp(30, 0.4, 99)
        assert a == b

    def test_gnp_regression_pin(self):
        # pinned once from the generator itself; guards the PRNG contract
        g = gen_gnp(12, 0.3, 42)
        assert g.m == 24
        assert g.edge_list()[:3] == [(0, 2), (0, 3), (0, 5)]

    def test_gnm_exact_count_and_determinism(self):
        a = gen_gnm(50, 100, 7)
        assert a.m == 100 and a == gen_gnm(50, 100, 7)

    def test_gnm_full_density(self):
        assert gen_gnm(10, 45, 3).m == 45

    def test_gnm_rejects_overfull(self):
        with pytest.raises(ValueError):
            gen_gnm(4, 7, 0)


class TestSplitMix64:
    def test_reference_vector_seed_zero(self):
        # published reference outputs for the splitmix64 recurrence, seed 0
        s = SplitMix64(0)
        assert [s.next_uint64() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_vectorized_stream_matches_sequential(self):
        s = SplitMix64(1234567)
        seq = [s.next_uint64() for _ in range(100)]
        assert stream_uint64(1234567, 100).tolist() == seq
        assert stream_uint64(1234567, 40, offset=60).tolist() == seq[60:]

    def test_unit_doubles_in_range(self):
        u = stream_unit(5, 1000)
        assert (u >= 0).all() and (u < 1).all()

    def test_coin_is_top_bit(self):
        s1, s2 = SplitMix64(9), SplitMix64(9)
        coins = [s1.next_coin() for _ in range(64)]
        tops = [s2.next_uint64() >> 63 for _ in range(64)]
        assert coins == tops and set(coins) == {0, 1}
