import pytest

from maxbisect import (
    VertexLimitExceeded,
    cut_size,
    decide_above_guarantee,
    gen_complete,
    gen_cycle,
    gen_gnp,
    gen_star,
    greedy_bisection,
    max_bisection_exact,
    maximal_matching,
    new_graph,
    normalize_even,
    pm_lower_bound,
)
from maxbisect.oracle import PATH_KERNEL, PATH_TRIVIAL, _ceil_half

from oracles import brute_max_bisection


def reduced_instance_with_large_kernel():
    """Five matched pairs (ids 0..9) plus 20 independent vertices, each
    matched vertex missing exactly one of them: no phase fires, so the
    kernel is the 30-vertex graph itself (within the k=3 bound of 48)."""
    edges = [(2 * j, 2 * j + 1) for j in range(5)]
    for x in range(10):
        edges.extend((x, u) for u in range(10, 30) if u != 10 + x)
    return new_graph(30, edges)


class TestMaxBisectionExact:
    def test_odd_star_meets_half_m(self):
        # odd stars are the equality case of the ceil(m/2) guarantee
        size, w = max_bisection_exact(gen_star(5))
        assert size == 3 and w.cut == 3

    def test_k4(self):
        size, _ = max_bisection_exact(gen_complete(4))
        assert size == 4

    def test_edgeless(self):
        size, w = max_bisection_exact(new_graph(6, []))
        assert size == 0 and len(w.side_x) == 3

    def test_empty_graph(self):
        size, w = max_bisection_exact(new_graph(0, []))
        assert size == 0 and w.n == 0

    def test_witness_is_lex_smallest_and_pins_zero(self):
        g = gen_cycle(4)
        size, w = max_bisection_exact(g)
        assert size == 4 and 0 in w.side_x
        assert w.side_x == frozenset({0, 2})

    def test_odd_n_rejected(self):
        with pytest.raises(ValueError, match="even"):
            max_bisection_exact(gen_star(2))

    def test_limit_refusal_names_the_limit(self):
        g = new_graph(26, [])
        with pytest.raises(VertexLimitExceeded, match="26 .*limited to 24"):
            max_bisection_exact(g)

    def test_limit_is_configurable(self):
        g = gen_gnp(14, 0.5, 3)
        with pytest.raises(VertexLimitExceeded):
            max_bisection_exact(g, vertex_limit=10)
        size, _ = max_bisection_exact(g, vertex_limit=14)
        assert size == brute_max_bisection(g.n, g.edge_list())[0]

    def test_pinned_symmetry_agrees_with_full_enumeration(self, small_corpus):
        # one-time cross-check of the vertex-0 pinning trick
        for g in small_corpus.values():
            even, _ = normalize_even(g)
            if even.n > 8:
                continue
            size, w = max_bisection_exact(even)
            assert size == brute_max_bisection(even.n, even.edge_list())[0]
            assert cut_size(even, w) == size

    def test_dominates_greedy(self, small_corpus):
        for g in small_corpus.values():
            even, _ = normalize_even(g)
            m = maximal_matching(even)
            size, _ = max_bisection_exact(even)
            greedy = greedy_bisection(even, m)
            assert size >= greedy.cut >= _ceil_half(even.m) + len(m) // 2


class TestPmLowerBound:
    def test_complete_graph_exact(self):
        # p = 4/6, m = 6 -> ceil(4) = 4, the true maximum of K4
        assert pm_lower_bound(gen_complete(4)) == 4

    def test_star_exact(self):
        # p = 6/10, m = 5 -> 3, the true maximum of the 5-leaf star
        assert pm_lower_bound(gen_star(5)) == 3

    def test_edgeless_zero(self):
        assert pm_lower_bound(new_graph(4, [])) == 0

    def test_tiny_graphs_zero(self):
        assert pm_lower_bound(new_graph(0, [])) == 0
        assert pm_lower_bound(new_graph(1, [])) == 0

    def test_sandwiched_between_half_and_max(self, small_corpus):
        for g in small_corpus.values():
            if normalize_even(g)[0].n < 2:
                continue
            bound = pm_lower_bound(g)
            assert bound >= _ceil_half(g.m)
            even, _ = normalize_even(g)
            assert bound <= max_bisection_exact(even)[0]


class TestDecide:
    def test_star_k1_is_no(self):
        result = decide_above_guarantee(gen_star(5), 1)
        assert result.answer is False and result.witness is None
        assert result.bound_used == 4 and result.path == PATH_KERNEL

    def test_c4_k2_is_yes_with_witness(self):
        result = decide_above_guarantee(gen_cycle(4), 2)
        assert result.answer is True and result.witness.cut == 4
        assert result.bound_used == 4

    def test_k_zero_always_yes(self, small_corpus):
        for g in small_corpus.values():
            result = decide_above_guarantee(g, 0)
            assert result.answer is True and result.path == PATH_TRIVIAL
            assert cut_size(g, result.witness) == result.witness.cut >= result.bound_used

    def test_negative_k_yes(self):
        result = decide_above_guarantee(gen_star(3), -2)
        assert result.answer is True

    def test_odd_n_witness_stripped_and_balanced(self):
        g = gen_star(2)  # n = 3
        result = decide_above_guarantee(g, 0)
        w = result.witness
        assert w.n == 3
        assert len(w.side_x) <= len(w.side_y) <= len(w.side_x) + 1
        assert cut_size(g, w) == w.cut

    def test_matches_package_oracle(self, small_corpus):
        for g in small_corpus.values():
            even, _ = normalize_even(g)
            best, _ = max_bisection_exact(even)
            for k in (1, 2, 3):
                result = decide_above_guarantee(g, k)
                assert result.answer is (best >= _ceil_half(g.m) + k)
                if result.answer:
                    assert cut_size(g, result.witness) >= result.bound_used

    def test_unenumerable_kernel_raises_not_guesses(self):
        g = reduced_instance_with_large_kernel()
        with pytest.raises(VertexLimitExceeded):
            decide_above_guarantee(g, 3)

    def test_large_kernel_structure(self):
        from maxbisect import Reduced, kernelize

        g = reduced_instance_with_large_kernel()
        out = kernelize(g, 3)
        assert isinstance(out, Reduced)
        assert out.kernel.n == 30 <= out.vertex_bound
