import numpy as np
import pytest

import resistweave as rw
from resistweave.graphs import Bisection, WeightedMultigraph


def matching(n, pairs):
    return WeightedMultigraph(n, [(u, v, 1.0) for u, v in pairs])


class TestConstruction:
    def test_zero_weight_edges_dropped(self):
        g = WeightedMultigraph(3, [(0, 1, 0.0), (1, 2, 1.0)])
        assert g.num_edges() == 1

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            WeightedMultigraph(2, [(0, 1, -1.0)])

    def test_canonical_endpoints_merge(self):
        g = WeightedMultigraph(3, [(0, 1, 2.0), (1, 0, 2.0)])
        assert g.num_records == 1
        assert g.num_edges() == 2

    def test_self_loop_degree_counts_twice(self):
        g = WeightedMultigraph(2, [(0, 0, 1.5), (0, 1, 1.0)])
        assert g.weighted_degree(0) == pytest.approx(4.0)
        assert g.weighted_degree(1) == pytest.approx(1.0)


class TestUnionSum:
    def test_union_identity(self):
        g = rw.complete_graph(4)
        assert rw.union(g, WeightedMultigraph(4)) == g

    def test_union_of_disjoint_matchings_is_2_regular(self):
        a = matching(4, [(0, 1), (2, 3)])
        b = matching(4, [(0, 2), (1, 3)])
        u = rw.union(a, b)
        assert np.all(u.weighted_degrees() == 2)

    def test_union_idempotent(self):
        m = matching(4, [(0, 1), (2, 3)])
        assert rw.union(m, m) == m

    def test_sum_doubles_matching(self):
        m = matching(4, [(0, 1), (2, 3)])
        s = rw.graph_sum(m, m)
        assert np.all(s.weighted_degrees() == 2)
        assert all(mult == 2 for _, _, _, mult in s.edges())

    def test_sum_identity(self):
        g = rw.complete_graph(5)
        assert rw.graph_sum(g, WeightedMultigraph(5)) == g

    def test_sum_degrees_add_on_random_graphs(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            n = int(rng.integers(2, 9))
            a = rw.random_connected_weighted(n, rng, p=0.7)
            b = rw.random_connected_weighted(n, rng, p=0.7)
            s = rw.graph_sum(a, b)
            np.testing.assert_allclose(
                s.weighted_degrees(), a.weighted_degrees() + b.weighted_degrees(),
                atol=1e-12)

    def test_union_degrees_add_only_when_disjoint(self):
        rng = np.random.default_rng(1)
        for _ in range(10):
            perm = rng.permutation(6)
            a = matching(6, [(perm[0], perm[1]), (perm[2], perm[3]), (perm[4], perm[5])])
            perm2 = rng.permutation(6)
            b = matching(6, [(perm2[0], perm2[1]), (perm2[2], perm2[3]), (perm2[4], perm2[5])])
            shared = set((u, v) for u, v, _, _ in a.edges()) & set(
                (u, v) for u, v, _, _ in b.edges())
            if not shared:
                u = rw.union(a, b)
                np.testing.assert_array_equal(
                    u.weighted_degrees(), a.weighted_degrees() + b.weighted_degrees())

    def test_mismatched_vertex_counts(self):
        with pytest.raises(ValueError):
            rw.union(WeightedMultigraph(3), WeightedMultigraph(4))
        with pytest.raises(ValueError):
            rw.graph_sum(WeightedMultigraph(3), WeightedMultigraph(4))


class TestCutWeight:
    def test_k4_balanced_cut(self):
        assert rw.cut_weight(rw.complete_graph(4), {0, 1}) == 4.0

    def test_disconnected_triangles(self):
        g = WeightedMultigraph(6, [(0, 1, 1), (1, 2, 1), (0, 2, 1),
                                   (3, 4, 1), (4, 5, 1), (3, 5, 1)])
        assert rw.cut_weight(g, {0, 1, 2}) == 0.0

    def test_single_weighted_edge(self):
        g = WeightedMultigraph(2, [(0, 1, 3.0)])
        assert rw.cut_weight(g, {0}) == 3.0

    def test_symmetry_under_complement(self):
        rng = np.random.default_rng(2)
        g = rw.random_connected_weighted(7, rng)
        s = {0, 2, 5}
        comp = set(range(7)) - s
        assert rw.cut_weight(g, s) == pytest.approx(rw.cut_weight(g, comp))

    def test_self_loops_never_cross(self):
        g = WeightedMultigraph(3, [(0, 0, 5.0), (0, 1, 1.0), (1, 2, 1.0)])
        assert rw.cut_weight(g, {0}) == 1.0

    def test_empty_and_full_rejected(self):
        g = rw.complete_graph(3)
        with pytest.raises(ValueError):
            rw.cut_weight(g, set())
        with pytest.raises(ValueError):
            rw.cut_weight(g, {0, 1, 2})


class TestDoubleCover:
    def test_single_edge_two_disjoint_edges(self):
        g = WeightedMultigraph(2, [(0, 1, 1.0)])
        dc = rw.double_cover(g)
        assert dc.n == 4
        assert sorted((u, v) for u, v, _, _ in dc.edges()) == [(0, 3), (1, 2)]
        assert np.all(dc.weighted_degrees() == 1)

    def test_triangle_becomes_six_cycle(self):
        dc = rw.double_cover(rw.complete_graph(3))
        assert dc.n == 6 and dc.num_edges() == 6
        assert dc.is_connected()
        assert np.all(dc.weighted_degrees() == 2)

    def test_regularity_preserved(self):
        g = rw.petersen_graph()
        dc = rw.double_cover(g)
        assert np.all(dc.weighted_degrees() == 3)

    def test_self_loops_rejected(self):
        g = WeightedMultigraph(2, [(0, 0, 1.0), (0, 1, 1.0)])
        with pytest.raises(ValueError):
            rw.double_cover(g)

    def test_unfold_roundtrip_doubles_weights(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            g = rw.random_connected_weighted(int(rng.integers(3, 9)), rng)
            back = rw.unfold_double_cover(rw.double_cover(g))
            assert back == rw.scale_weights(g, 2.0)

    def test_unfold_weight_rules(self):
        # both lift copies present -> weight 2; one -> weight 1
        h2 = WeightedMultigraph(6, [(0, 4, 1.0), (1, 3, 1.0), (1, 5, 1.0)])
        h = rw.unfold_double_cover(h2)
        weights = {(u, v): w for u, v, w, _ in h.edges()}
        assert weights[(0, 1)] == 2.0
        assert weights[(1, 2)] == 1.0

    def test_unfold_rejects_same_side_edges(self):
        h2 = WeightedMultigraph(4, [(0, 1, 1.0)])
        with pytest.raises(ValueError):
            rw.unfold_double_cover(h2)

    def test_unfold_degree_identity(self):
        rng = np.random.default_rng(4)
        g = rw.random_regular_graph(10, 4, rng)
        dc = rw.double_cover(g)
        md = rw.matching_decomposition(dc)
        h2 = md.union_graph([0, 2])
        h = rw.unfold_double_cover(h2)
        d2 = h2.weighted_degrees()
        np.testing.assert_allclose(h.weighted_degrees(), d2[:10] + d2[10:])


class TestWeaveAndScale:
    def test_matching_is_a_weave(self):
        b = Bisection(4, frozenset({0, 1}))
        m = matching(4, [(0, 2), (1, 3)])
        assert rw.is_weave(m, b)

    def test_empty_graph_is_not_a_weave(self):
        b = Bisection(4, frozenset({0, 1}))
        assert not rw.is_weave(WeightedMultigraph(4), b)

    def test_alternating_hamiltonian_cycle_is_a_weave(self):
        # 0-2-1-3-0 alternates sides of ({0,1},{2,3})
        b = Bisection(4, frozenset({0, 1}))
        cyc = WeightedMultigraph(4, [(0, 2, 1), (2, 1, 1), (1, 3, 1), (3, 0, 1)])
        assert rw.is_weave(cyc, b)

    def test_weave_needs_every_vertex_covered(self):
        b = Bisection(4, frozenset({0, 1}))
        g = matching(4, [(0, 2)])
        assert not rw.is_weave(g, b)

    def test_scale_identity(self):
        g = rw.complete_graph(4)
        assert rw.scale_weights(g, 1.0) == g

    def test_scale_makes_target_degree(self):
        g = rw.complete_graph(5)  # 4-regular
        h = rw.scale_weights(g, 10.0 / 4.0)
        np.testing.assert_allclose(h.weighted_degrees(), 10.0)

    def test_scale_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            rw.scale_weights(rw.complete_graph(3), 0.0)

    def test_lambda2_scale_invariant(self):
        rng = np.random.default_rng(5)
        for _ in range(5):
            g = rw.random_connected_weighted(8, rng)
            assert rw.lambda2(g) == pytest.approx(
                rw.lambda2(rw.scale_weights(g, 7.3)), abs=1e-9)


class TestBisection:
    def test_sizes_enforced(self):
        with pytest.raises(ValueError):
            Bisection(5, frozenset({0, 1, 2}))
        b = Bisection(5, frozenset({0, 1}))
        assert len(b.side_t) == 3

    def test_partition_enforced(self):
        with pytest.raises(ValueError):
            Bisection(4, frozenset({0, 1}), frozenset({1, 2}))


class TestTextFormat:
    def test_roundtrip_bit_exact(self):
        rng = np.random.default_rng(6)
        g = rw.random_connected_weighted(9, rng)
        g = rw.graph_sum(g, WeightedMultigraph(9, [(0, 0, 0.123456789123456789, 3)]))
        assert rw.from_edge_text(rw.to_edge_text(g)) == g

    def test_comments_and_mult(self):
        text = "# little graph\n3 2\n0 1 1.5  # edge\n1 2 2.0 4\n"
        g = rw.from_edge_text(text)
        assert g.num_records == 2
        assert g.num_edges() == 5

    def test_header_must_match(self):
        with pytest.raises(ValueError):
            rw.from_edge_text("2 2\n0 1 1.0\n")

    def test_file_roundtrip(self, tmp_path):
        g = rw.complete_graph(6)
        p = tmp_path / "g.txt"
        rw.write_graph(p, g)
        assert rw.read_graph(p) == g
