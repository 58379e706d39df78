import numpy as np
import pytest

import resistweave as rw
from resistweave.graphs import WeightedMultigraph


class TestLambda2:
    def test_complete_graph_value(self):
        # K_n has normalized spectral gap n/(n-1)
        assert rw.lambda2(rw.complete_graph(5)) == pytest.approx(1.25, abs=1e-9)
        assert rw.lambda2(rw.complete_graph(8)) == pytest.approx(8 / 7, abs=1e-9)

    def test_disconnected_graph_is_zero(self):
        g = WeightedMultigraph(4, [(0, 1, 1.0), (2, 3, 1.0)])
        assert rw.lambda2(g) == pytest.approx(0.0, abs=1e-9)

    def test_isolated_vertex_rejected(self):
        g = WeightedMultigraph(3, [(0, 1, 1.0)])
        with pytest.raises(ValueError):
            rw.lambda2(g)

    def test_cycle_value(self):
        # C_n: 1 - cos(2 pi / n)
        for n in (5, 8, 12):
            assert rw.lambda2(rw.cycle_graph(n)) == pytest.approx(
                1 - np.cos(2 * np.pi / n), abs=1e-9)


class TestResistances:
    def test_single_edge(self):
        g = WeightedMultigraph(2, [(0, 1, 3.0)])
        assert rw.effective_resistance(g, 0, 1) == pytest.approx(1 / 3, abs=1e-12)

    def test_triangle(self):
        g = rw.complete_graph(3)
        for u, v in ((0, 1), (0, 2), (1, 2)):
            assert rw.effective_resistance(g, u, v) == pytest.approx(2 / 3, abs=1e-9)

    def test_complete_graph_two_over_n(self):
        for n in (5, 9):
            g = rw.complete_graph(n)
            assert rw.effective_resistance(g, 0, n - 1) == pytest.approx(2 / n, abs=1e-9)

    def test_same_vertex_zero(self):
        assert rw.effective_resistance(rw.complete_graph(4), 2, 2) == 0.0

    def test_disconnected_rejected(self):
        g = WeightedMultigraph(4, [(0, 1, 1.0), (2, 3, 1.0)])
        with pytest.raises(ValueError):
            rw.effective_resistance(g, 0, 2)

    def test_series_resistors(self):
        g = WeightedMultigraph(3, [(0, 1, 2.0), (1, 2, 4.0)])
        assert rw.effective_resistance(g, 0, 2) == pytest.approx(0.5 + 0.25, abs=1e-12)

    def test_table_matches_pairwise_calls(self):
        rng = np.random.default_rng(7)
        for _ in range(5):
            g = rw.random_connected_weighted(8, rng)
            table = rw.all_resistances(g)
            assert np.allclose(table.values, table.values.T)
            assert np.all(np.diag(table.values) == 0)
            for u in range(8):
                for v in range(u + 1, 8):
                    assert table[u, v] == pytest.approx(
                        rw.effective_resistance(g, u, v), abs=1e-9)

    def test_resistance_is_a_metric(self):
        rng = np.random.default_rng(8)
        for _ in range(10):
            g = rw.random_connected_weighted(7, rng)
            r = rw.all_resistances(g).values
            for u in range(7):
                for v in range(7):
                    for w in range(7):
                        assert r[u, v] <= r[u, w] + r[w, v] + 1e-9

    def test_rayleigh_monotonicity(self):
        # dropping an edge never decreases any resistance
        rng = np.random.default_rng(9)
        for _ in range(10):
            g = rw.random_connected_weighted(7, rng, p=0.8)
            records = list(g.edges())
            drop = records[int(rng.integers(len(records)))]
            rest = [rec for rec in records if rec != drop]
            h = WeightedMultigraph(7, rest)
            if not h.is_connected():
                continue
            r_g = rw.all_resistances(g).values
            r_h = rw.all_resistances(h).values
            assert np.all(r_h >= r_g - 1e-9)


class TestCheeger:
    def test_k4(self):
        phi, witness = rw.cheeger_bruteforce(rw.complete_graph(4))
        assert phi == pytest.approx(2.0)
        assert len(witness) == 2

    def test_two_triangles_with_bridge(self):
        g = WeightedMultigraph(6, [(0, 1, 1), (1, 2, 1), (0, 2, 1),
                                   (3, 4, 1), (4, 5, 1), (3, 5, 1), (2, 3, 1)])
        phi, witness = rw.cheeger_bruteforce(g)
        assert phi == pytest.approx(1 / 3)
        assert witness in ({0, 1, 2}, {3, 4, 5})

    def test_disconnected_zero(self):
        g = WeightedMultigraph(4, [(0, 1, 1.0), (2, 3, 1.0)])
        phi, _ = rw.cheeger_bruteforce(g)
        assert phi == 0.0

    def test_witness_attains_phi(self):
        rng = np.random.default_rng(10)
        for _ in range(5):
            g = rw.random_connected_weighted(8, rng, p=0.6)
            phi, witness = rw.cheeger_bruteforce(g)
            assert rw.cut_weight(g, witness) / min(len(witness), 8 - len(witness)) \
                == pytest.approx(phi)

    def test_size_cap(self):
        with pytest.raises(ValueError):
            rw.cheeger_bruteforce(WeightedMultigraph(23))


class TestCheegerSandwich:
    def test_sandwich_on_corpus(self, corpus):
        # lambda2/2 <= phi/d <= sqrt(2 lambda2) for every regular corpus graph
        for name, g in corpus.items():
            d = g.weighted_degrees()[0]
            phi, _ = rw.cheeger_bruteforce(g)
            lam = rw.lambda2(g)
            h = phi / d
            assert lam / 2 <= h + 1e-9, name
            assert h <= np.sqrt(2 * lam) + 1e-9, name


class TestHittingTimes:
    def test_single_edge_forced_step(self):
        g = WeightedMultigraph(2, [(0, 1, 1.0)])
        h = rw.hitting_times(g)
        assert h.steps[0, 1] == pytest.approx(1.0)
        assert h.steps[1, 0] == pytest.approx(1.0)

    def test_triangle_by_hand(self):
        g = rw.complete_graph(3)
        h = rw.hitting_times(g)
        assert h.steps[0, 1] == pytest.approx(2.0)
        assert h.total_weight == 3.0
        assert h.normalized[0, 1] == pytest.approx(1 / 3)
        assert h.resistance(0, 1) == pytest.approx(2 / 3)

    def test_commute_identity_on_random_graphs(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            n = int(rng.integers(3, 11))
            g = rw.random_connected_weighted(n, rng)
            h = rw.hitting_times(g)
            r = rw.all_resistances(g).values
            for u in range(n):
                for v in range(u + 1, n):
                    assert h.resistance(u, v) == pytest.approx(r[u, v], abs=1e-9)

    def test_lazy_self_loop_chain(self):
        # loop at 0 contributes stay probability 2w/deg
        g = WeightedMultigraph(2, [(0, 0, 1.0), (0, 1, 1.0)])
        h = rw.hitting_times(g)
        # from 0: P(stay)=2/3, P(move)=1/3 -> expected steps 3
        assert h.steps[0, 1] == pytest.approx(3.0)
        assert h.resistance(0, 1) == pytest.approx(
            rw.effective_resistance(g, 0, 1), abs=1e-12)


class TestBipartite:
    def test_detects_odd_cycle(self):
        ok, cyc = rw.is_bipartite(rw.cycle_graph(5))
        assert not ok
        assert len(cyc) % 2 == 1

    def test_two_coloring(self):
        ok, (s0, s1) = rw.is_bipartite(rw.cycle_graph(6))
        assert ok
        assert len(s0) == len(s1) == 3

    def test_bipartite_square_regularity(self):
        rng = np.random.default_rng(12)
        for _ in range(5):
            g = rw.random_regular_bipartite(5, 3, rng, weighted=True)
            d = g.weighted_degrees()[0]
            sq = rw.bipartite_square(g, range(5), d)
            np.testing.assert_allclose(sq.weighted_degrees(), d, atol=1e-9)

    def test_bipartite_square_two_step_probabilities(self):
        # squared double cover of K_3 reproduces the 6-cycle's two-step walk
        g = rw.double_cover(rw.complete_graph(3))
        sq = rw.bipartite_square(g, range(3), 2.0)
        w = rw.walk_matrix(sq)
        two_step = rw.walk_matrix(g)
        p2 = (two_step @ two_step)[np.ix_(range(3), range(3))]
        np.testing.assert_allclose(w, p2, atol=1e-12)

    def test_hitting_time_halving(self):
        rng = np.random.default_rng(13)
        g = rw.random_regular_bipartite(6, 3, rng)
        d = g.weighted_degrees()[0]
        sq = rw.bipartite_square(g, range(6), d)
        hg = rw.hitting_times(g).steps
        hsq = rw.hitting_times(sq).steps
        np.testing.assert_allclose(hsq, 0.5 * hg[np.ix_(range(6), range(6))], atol=1e-8)


class TestResistanceIntervals:
    def test_nonbipartite_formula(self):
        center, radius = rw.resistance_interval(10, 10, 0.5, 1.0, 10)
        assert center == pytest.approx(0.2)
        assert radius == pytest.approx(0.08)

    def test_radius_monotone_in_gap(self):
        radii = [rw.resistance_interval(10, 10, lam, 1.0, 10)[1]
                 for lam in (0.1, 0.5, 1.0, 1.9)]
        assert radii == sorted(radii, reverse=True)

    def test_regular_variant_formula(self):
        center, radius = rw.regular_resistance_interval(10, 0.5, 1.0)
        assert center == pytest.approx(0.2)
        assert radius == pytest.approx(0.48)

    def test_positive_arguments_required(self):
        with pytest.raises(ValueError):
            rw.resistance_interval(0, 1, 1, 1, 1)
        with pytest.raises(ValueError):
            rw.regular_resistance_interval(1, 0, 1)

    def test_containment_on_cycle(self):
        # weak spectral gap, but the interval must still contain the truth
        g = rw.cycle_graph(6)
        center, radius = rw.regular_resistance_interval(2.0, rw.lambda2(g), 1.0)
        r = rw.all_resistances(g).values
        iu = np.triu_indices(6, k=1)
        assert np.all(np.abs(r[iu] - center) <= radius)

    def test_containment_on_complete_graph(self):
        n = 12
        g = rw.complete_graph(n)
        center, radius = rw.regular_resistance_interval(n - 1.0, rw.lambda2(g), 1.0)
        assert abs(2.0 / n - center) <= radius
