import math

import numpy as np
import pytest

import netdistinct as nd
from netdistinct import Graph, Metric, MetricSpec

from conftest import (dense_weights, oracle_beta_neumann, oracle_d1,
                      oracle_d2, oracle_d3, oracle_d4, oracle_d5,
                      random_graph)

LOG10_2 = math.log10(2)
LOG10_4 = math.log10(4)


class TestD1:
    def test_two_node_edge(self):
        g = Graph(2, [0], [1])
        assert nd.d1(g, 1.0).scores == pytest.approx([0.0, 0.0])

    def test_path(self, path3):
        assert nd.d1(path3, 1.0).scores == pytest.approx(
            [0.0, 2 * LOG10_2, 0.0])

    def test_star(self, star4):
        assert nd.d1(star4, 1.0).scores == pytest.approx(
            [4 * LOG10_4, 0, 0, 0, 0])

    def test_requires_two_nodes(self):
        with pytest.raises(ValueError):
            nd.d1(Graph(1, [], []), 1.0)


class TestD2:
    def test_matches_d1_on_unweighted(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            g = random_graph(rng, 20, weighted=False)
            for alpha in (0.5, 1.0, 2.0, 3.0):
                np.testing.assert_allclose(nd.d2(g, alpha).scores,
                                           nd.d1(g, alpha).scores, atol=1e-12)

    def test_negative_contributions_at_high_alpha(self, star4):
        scores = nd.d2(star4, 2.0).scores
        assert scores[1] == pytest.approx(-LOG10_4)

    def test_triangle_zero(self, triangle):
        assert nd.d2(triangle, 1.0).scores == pytest.approx([0, 0, 0])


class TestD3:
    def test_single_unit_edge(self):
        g = Graph(2, [0], [1])
        assert nd.d3(g, 1.0).scores == pytest.approx([0.0, 0.0])

    def test_path(self, path3):
        assert nd.d3(path3, 1.0).scores == pytest.approx(
            [0.0, 2 * LOG10_2, 0.0])

    def test_single_weighted_edge(self):
        g = Graph(2, [0], [1], [4.0])
        assert nd.d3(g, 2.0).scores == pytest.approx([4 * LOG10_4, 4 * LOG10_4])

    def test_requires_an_edge(self):
        with pytest.raises(ValueError, match="edge"):
            nd.d3(Graph(3, [], []), 1.0)


class TestD4:
    def test_single_weighted_edge(self):
        g = Graph(2, [0], [1], [3.0])
        assert nd.d4(g, 1.0).scores == pytest.approx([3.0, 3.0])

    def test_star_weight2(self):
        g = Graph(5, [0] * 4, [1, 2, 3, 4], [2.0] * 4)
        assert nd.d4(g, 1.0).scores == pytest.approx([8.0, 0.5, 0.5, 0.5, 0.5])

    def test_unweighted_equals_d5_alpha1(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            g = random_graph(rng, 15, weighted=False)
            for alpha in (0.5, 1.0, 2.0):
                np.testing.assert_allclose(nd.d4(g, alpha).scores,
                                           nd.d5(g, 1.0).scores, atol=1e-9)


class TestD5:
    def test_path(self, path3):
        assert nd.d5(path3, 1.0).scores == pytest.approx([0.5, 2.0, 0.5])

    def test_star(self, star4):
        assert nd.d5(star4, 1.0).scores == pytest.approx(
            [4.0, 0.25, 0.25, 0.25, 0.25])

    def test_triangle_any_alpha(self, triangle):
        for alpha in (0.5, 1.0, 3.0):
            assert nd.d5(triangle, alpha).scores == pytest.approx(
                [2 / 2 ** alpha] * 3)

    def test_isolates_score_zero(self):
        g = Graph(4, [0], [1])
        assert nd.d5(g, 2.0).scores[2:] == pytest.approx([0.0, 0.0])


class TestGamma:
    def test_gamma_zero_is_strength(self):
        rng = np.random.default_rng(9)
        g = random_graph(rng, 25)
        assert np.array_equal(nd.gamma_centrality(g, 0.0).scores, g.strengths)

    def test_path_gamma_minus1(self, path3):
        np.testing.assert_allclose(nd.gamma_centrality(path3, -1.0).scores,
                                   nd.d5(path3, 1.0).scores)

    def test_star_gamma_one(self, star4):
        assert nd.gamma_centrality(star4, 1.0).scores == pytest.approx(
            [4.0, 4.0, 4.0, 4.0, 4.0])

    def test_d5_identity_on_unweighted(self):
        rng = np.random.default_rng(13)
        for _ in range(10):
            g = random_graph(rng, 30, weighted=False)
            for alpha in (0.5, 1.0, 2.0, 3.0):
                np.testing.assert_allclose(
                    nd.gamma_centrality(g, -alpha).scores,
                    nd.d5(g, alpha).scores, atol=1e-9)


class TestBeta:
    def test_beta_zero_is_strength(self):
        rng = np.random.default_rng(17)
        g = random_graph(rng, 25)
        assert np.array_equal(nd.beta_centrality(g, 0.0).scores, g.strengths)

    def test_edgeless_graph(self):
        g = Graph(4, [], [])
        assert nd.beta_centrality(g, 0.3).scores == pytest.approx([0.0] * 4)

    def test_triangle_symmetry(self, triangle):
        # uniform solution of (I - beta*A)x = A1: x = 2/(1 - 2*beta)
        assert nd.beta_centrality(triangle, 0.25).scores == pytest.approx(
            [4.0, 4.0, 4.0])

    def test_spectral_condition_enforced(self, triangle):
        with pytest.raises(ValueError, match="converge"):
            nd.beta_centrality(triangle, 0.6)  # lambda1 = 2

    def test_dense_cap(self, triangle):
        with pytest.raises(ValueError, match="cap"):
            nd.beta_centrality(triangle, 0.1, dense_cap=2)

    def test_matches_neumann_series(self):
        rng = np.random.default_rng(21)
        for _ in range(10):
            g = random_graph(rng, 20)
            if g.edge_count == 0:
                continue
            lam = nd.dominant_eigenvalue(g)
            beta = float(rng.uniform(-0.5, 0.5)) / lam
            expected = oracle_beta_neumann(dense_weights(g), beta)
            np.testing.assert_allclose(nd.beta_centrality(g, beta).scores,
                                       expected, atol=1e-9, rtol=1e-9)


class TestDominantEigenvalue:
    def test_complete_graphs(self):
        for n in range(2, 6):
            iu, iv = np.triu_indices(n, k=1)
            g = Graph(n, iu, iv)
            lam = nd.dominant_eigenvalue(g)
            assert lam == pytest.approx(n - 1, abs=1e-8)
            # cross-check against a direct dense eigencomputation
            assert lam == pytest.approx(
                np.linalg.eigvalsh(dense_weights(g)).max(), abs=1e-8)

    def test_single_edge(self):
        assert nd.dominant_eigenvalue(Graph(2, [0], [1])) == pytest.approx(
            1.0, abs=1e-8)

    def test_star_is_sqrt_degree(self, star4):
        lam = nd.dominant_eigenvalue(star4)
        assert lam == pytest.approx(2.0, abs=1e-8)
        assert lam == pytest.approx(
            np.linalg.eigvalsh(dense_weights(star4)).max(), abs=1e-8)

    def test_random_graphs_match_dense(self):
        rng = np.random.default_rng(29)
        for _ in range(15):
            g = random_graph(rng, 30)
            if g.edge_count == 0:
                continue
            assert nd.dominant_eigenvalue(g) == pytest.approx(
                np.linalg.eigvalsh(dense_weights(g)).max(), rel=1e-6)

    def test_requires_an_edge(self):
        with pytest.raises(ValueError):
            nd.dominant_eigenvalue(Graph(3, [], []))


class TestHarmonize:
    def test_beta_zero_at_ln2(self):
        gamma, beta = nd.harmonize(math.log(2), 5.0)
        assert beta == pytest.approx(0.0, abs=1e-15)
        assert gamma == pytest.approx(-math.log(2))

    def test_known_values(self):
        gamma, beta = nd.harmonize(1.0, 2.0)
        assert gamma == -1.0
        assert beta == pytest.approx((2 / math.e - 1) / 2)
        _, beta3 = nd.harmonize(3.0, 1.0)
        assert beta3 == pytest.approx(2 / math.e ** 3 - 1)

    def test_keeps_beta_series_convergent(self):
        for alpha in (0.01, 0.5, 1.0, 2.0, 5.0, 20.0):
            for lam in (0.5, 1.0, 7.3):
                _, beta = nd.harmonize(alpha, lam)
                assert abs(beta) * lam < 1.0


class TestOracleEquivalence:
    ORACLES = {"d1": oracle_d1, "d2": oracle_d2, "d3": oracle_d3,
               "d4": oracle_d4, "d5": oracle_d5}

    @pytest.mark.parametrize("name", sorted(ORACLES))
    def test_matches_naive_dense_evaluation(self, name):
        rng = np.random.default_rng(31)
        fn = getattr(nd, name)
        for _ in range(20):
            g = random_graph(rng, int(rng.integers(3, 50)))
            if g.edge_count == 0:
                continue
            W = dense_weights(g)
            for alpha in (0.5, 1.0, 2.0, 3.0):
                np.testing.assert_allclose(fn(g, alpha).scores,
                                           self.ORACLES[name](W, alpha),
                                           atol=1e-9)


class TestProperties:
    def test_d1_affine_in_alpha(self):
        """Finite-difference slope equals -(1/ln 10) * sum_j w_ij ln g_j."""
        rng = np.random.default_rng(37)
        for _ in range(5):
            g = random_graph(rng, 25)
            if g.edge_count == 0:
                continue
            adj = g.adjacency
            lng = np.where(g.degrees > 0, np.log(np.maximum(g.degrees, 1)), 0)
            slope = -np.bincount(
                adj.indices, weights=adj.data * lng[g._row_index],
                minlength=g.node_count) / math.log(10)
            for alpha in (0.6, 1.0, 2.5):
                for h in (0.1, 1.0):
                    fd = (nd.d1(g, alpha + h).scores -
                          nd.d1(g, alpha).scores) / h
                    np.testing.assert_allclose(fd, slope, atol=1e-8)

    def test_d1_monotone_penalty(self):
        # higher-degree neighbors contribute strictly less, for any alpha > 0
        n = 10
        for alpha in (0.1, 0.5, 1.0, 2.0, 5.0):
            for gk in range(2, n):
                for gm in range(1, gk):
                    tk = math.log10((n - 1) / gk ** alpha)
                    tm = math.log10((n - 1) / gm ** alpha)
                    assert tk < tm

    def test_d3_denominator_at_least_one(self):
        rng = np.random.default_rng(41)
        for _ in range(10):
            g = random_graph(rng, 20)
            if g.edge_count == 0:
                continue
            for alpha in (0.5, 1.0, 3.0):
                for u, v, w in zip(*g.edges()):
                    for i, j in ((u, v), (v, u)):
                        d = g.alpha_strength(int(j), alpha) - w ** alpha + 1
                        assert d >= 1 - 1e-12

    def test_permutation_equivariance(self):
        rng = np.random.default_rng(43)
        g = random_graph(rng, 20)
        perm = rng.permutation(20)
        eu, ev, ew = g.edges()
        gp = Graph(20, perm[eu], perm[ev], ew)
        for compute_fn in (lambda h: nd.d1(h, 1.5), lambda h: nd.d3(h, 2.0),
                           lambda h: nd.gamma_centrality(h, -1.0),
                           lambda h: nd.beta_centrality(h, 0.01)):
            base = compute_fn(g).scores
            permuted = compute_fn(gp).scores
            np.testing.assert_allclose(permuted[perm], base, atol=1e-9)


class TestComputeDispatch:
    def test_degree_strength(self, triangle):
        assert nd.compute(triangle, MetricSpec(Metric.DEGREE)).scores \
            == pytest.approx([2, 2, 2])
        assert nd.compute(triangle, MetricSpec(Metric.STRENGTH)).scores \
            == pytest.approx([2, 2, 2])

    def test_d5_and_beta(self, triangle):
        assert nd.compute(triangle, MetricSpec(Metric.D5, 1.0)).scores \
            == pytest.approx([1, 1, 1])
        assert nd.compute(triangle, MetricSpec(Metric.BETA, 0.0)).scores \
            == pytest.approx([2, 2, 2])

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            MetricSpec(Metric.D1, -1.0)
        with pytest.raises(ValueError):
            MetricSpec(Metric.D2)
        with pytest.raises(ValueError):
            MetricSpec(Metric.BETA)

    def test_score_vector_carries_fingerprint(self, triangle):
        sv = nd.d5(triangle, 1.0)
        assert sv.graph_fingerprint == triangle.fingerprint
        assert len(sv) == 3
