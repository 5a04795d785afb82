import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from walkgauge import (
    FamilySpec,
    SpectralConvergenceError,
    adjacency_matrix,
    eigendecompose,
    exp_diagonal,
    generate,
    is_connected,
    partition_function,
    subgraph_centrality,
)

from taylor_oracle import taylor_exp_diagonal
from test_graphs import random_graph_strategy

COSH1 = math.cosh(1.0)
COSH_SQRT2 = math.cosh(math.sqrt(2.0))


class TestEigendecompose:
    def test_k2(self):
        s = eigendecompose(adjacency_matrix(generate(FamilySpec("complete", n=2))))
        assert np.allclose(s.eigenvalues, [1.0, -1.0], atol=1e-12)
        r = 1.0 / math.sqrt(2.0)
        assert np.allclose(np.abs(s.eigenvectors), [[r, r], [r, r]], atol=1e-12)

    def test_p3_spectrum(self):
        s = eigendecompose(adjacency_matrix(generate(FamilySpec("path", n=3))))
        assert np.allclose(
            s.eigenvalues, [math.sqrt(2.0), 0.0, -math.sqrt(2.0)], atol=1e-12
        )
        assert np.allclose(s.perron**2, [0.25, 0.5, 0.25], atol=1e-12)

    def test_c4_spectrum(self):
        s = eigendecompose(adjacency_matrix(generate(FamilySpec("cycle", n=4))))
        assert np.allclose(s.eigenvalues, [2.0, 0.0, 0.0, -2.0], atol=1e-12)

    def test_type_invariants_on_corpus(self, full_corpus):
        for name, (g, _) in full_corpus.items():
            a = adjacency_matrix(g)
            s = eigendecompose(a)
            n = g.n
            q = s.eigenvectors
            assert np.abs(q.T @ q - np.eye(n)).max() <= 1e-10, name
            assert np.abs((q * s.eigenvalues) @ q.T - a).max() <= 1e-8, name
            assert abs(s.eigenvalues.sum()) <= 1e-8, name
            assert np.all(np.diff(s.eigenvalues) <= 1e-12), name
            if is_connected(g):
                assert np.all(s.perron >= 0.0), name
                assert abs(np.linalg.norm(s.perron) - 1.0) <= 1e-12, name

    def test_matches_lapack_eigenvalues(self, full_corpus):
        for name, (g, _) in full_corpus.items():
            a = adjacency_matrix(g)
            mine = eigendecompose(a).eigenvalues
            ref = np.sort(np.linalg.eigvalsh(a))[::-1]
            assert np.abs(mine - ref).max() <= 1e-10, name

    def test_deterministic(self):
        a = adjacency_matrix(generate(FamilySpec("petersen")))
        s1 = eigendecompose(a)
        s2 = eigendecompose(a)
        assert np.array_equal(s1.eigenvalues, s2.eigenvalues)
        assert np.array_equal(s1.eigenvectors, s2.eigenvectors)

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            eigendecompose(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_convergence_failure_reported(self):
        a = adjacency_matrix(generate(FamilySpec("cycle", n=5)))
        with pytest.raises(SpectralConvergenceError, match="residual"):
            eigendecompose(a, max_sweeps=0)

    def test_edgeless_identity(self):
        s = eigendecompose(np.zeros((3, 3)))
        assert np.array_equal(s.eigenvalues, np.zeros(3))
        assert np.array_equal(s.eigenvectors, np.eye(3))

    @settings(max_examples=60, deadline=None)
    @given(random_graph_strategy(max_n=10))
    def test_random_invariants(self, g):
        a = adjacency_matrix(g)
        s = eigendecompose(a)
        q = s.eigenvectors
        assert np.abs(q.T @ q - np.eye(g.n)).max() <= 1e-10
        assert np.abs((q * s.eigenvalues) @ q.T - a).max() <= 1e-8

    def test_top_eigenspace_queries(self, c3c4):
        s = eigendecompose(adjacency_matrix(c3c4))
        assert s.top_multiplicity() == 2
        # 2-regular: the constant vector is a top eigenvector
        assert s.uniform_in_top_eigenspace()
        d = s.top_projector_diagonal()
        assert np.allclose(d[:3], 1.0 / 3.0, atol=1e-10)
        assert np.allclose(d[3:], 0.25, atol=1e-10)


class TestExpDiagonal:
    def test_k2_closed_form(self):
        s = eigendecompose(adjacency_matrix(generate(FamilySpec("complete", n=2))))
        ed = exp_diagonal(s, 1.0)
        assert np.allclose(ed.y, [COSH1, COSH1], rtol=1e-12)

    def test_p3_closed_form(self):
        s = eigendecompose(adjacency_matrix(generate(FamilySpec("path", n=3))))
        ed = exp_diagonal(s, 1.0)
        expected = [(COSH_SQRT2 + 1) / 2, COSH_SQRT2, (COSH_SQRT2 + 1) / 2]
        assert np.allclose(ed.y, expected, rtol=1e-12)

    def test_tiny_beta_is_identity(self, corpus):
        for name, (g, _) in corpus.items():
            s = eigendecompose(adjacency_matrix(g))
            assert np.abs(exp_diagonal(s, 1e-12).y - 1.0).max() <= 1e-10, name

    def test_beta_zero_exact_ones(self):
        s = eigendecompose(adjacency_matrix(generate(FamilySpec("cycle", n=5))))
        assert np.allclose(exp_diagonal(s, 0.0).y, 1.0, atol=1e-14)

    def test_negative_beta_rejected(self):
        s = eigendecompose(adjacency_matrix(generate(FamilySpec("complete", n=2))))
        with pytest.raises(ValueError, match="beta"):
            exp_diagonal(s, -0.5)

    def test_log_scale_recovers_huge_beta(self):
        g = generate(FamilySpec("complete", n=8))
        s = eigendecompose(adjacency_matrix(g))
        ed = exp_diagonal(s, 200.0)
        # true y overflows floats; z = beta*lam1 + ln(1/8) + o(1) stays finite
        assert ed.log_scale == pytest.approx(200.0 * 7.0)
        assert np.all(np.isfinite(ed.z))
        assert ed.z[0] == pytest.approx(1400.0 + math.log(1.0 / 8.0), abs=1e-6)

    def test_oracle_equivalence_sample(self):
        for spec in (
            FamilySpec("petersen"),
            FamilySpec("twin_k4e"),
            FamilySpec("star", n=5),
            FamilySpec("cycle", n=12),
        ):
            g = generate(spec)
            s = eigendecompose(adjacency_matrix(g))
            for b in (Fraction(1, 2), Fraction(1), Fraction(2)):
                oracle = np.array(taylor_exp_diagonal(g, b))
                lib = exp_diagonal(s, float(b)).y
                scale = np.maximum(1.0, np.abs(oracle))
                assert np.max(np.abs(lib - oracle) / scale) <= 1e-9, (spec, b)

    def test_shift_invariance_of_p(self, corpus):
        # p computed with and without the lam_1 shift agree where both are finite
        for name, (g, _) in corpus.items():
            s = eigendecompose(adjacency_matrix(g))
            for beta in (0.5, 2.0, 5.0):
                shifted = exp_diagonal(s, beta).scaled_y
                p_shifted = shifted / shifted.sum()
                raw = (s.eigenvectors**2) @ np.exp(beta * s.eigenvalues)
                p_raw = raw / raw.sum()
                assert np.abs(p_shifted - p_raw).max() <= 1e-12, (name, beta)

    def test_perron_asymptotics(self, corpus):
        beta = 40.0
        for name, (g, _) in corpus.items():
            if not is_connected(g):
                continue
            s = eigendecompose(adjacency_matrix(g))
            gap = s.eigenvalues[0] - s.eigenvalues[1]
            if gap < 0.1:
                continue
            ysh = exp_diagonal(s, beta).scaled_y
            bound = math.exp(-beta * gap / 2.0) + 1e-6
            assert np.abs(ysh - s.perron**2).max() <= bound, name


class TestPartitionFunction:
    def test_k2(self):
        s = eigendecompose(adjacency_matrix(generate(FamilySpec("complete", n=2))))
        assert partition_function(s, 1.0).value == pytest.approx(
            math.e + 1.0 / math.e, rel=1e-12
        )

    def test_p3(self):
        s = eigendecompose(adjacency_matrix(generate(FamilySpec("path", n=3))))
        expected = math.exp(math.sqrt(2)) + 1.0 + math.exp(-math.sqrt(2))
        assert partition_function(s, 1.0).value == pytest.approx(expected, rel=1e-12)

    def test_edgeless_is_n_exactly(self):
        # exact in the log representation; .value pays one ulp for exp(log n)
        s = eigendecompose(adjacency_matrix(generate(FamilySpec("edgeless", n=7))))
        for beta in (0.0, 0.5, 3.0, 100.0):
            z = partition_function(s, beta)
            assert z.log == math.log(7.0)
            assert z.value == pytest.approx(7.0, rel=1e-15)

    def test_trace_consistency(self, corpus):
        # sum_i y_i equals Z within 1e-9 relative at every evaluation
        for name, (g, _) in corpus.items():
            s = eigendecompose(adjacency_matrix(g))
            for beta in (0.1, 1.0, 7.0, 40.0):
                ed = exp_diagonal(s, beta)
                log_sum_y = ed.log_scale + math.log(math.fsum(ed.scaled_y))
                log_z = partition_function(s, beta).log
                assert abs(log_sum_y - log_z) <= 1e-9, (name, beta)

    def test_negative_beta_rejected(self):
        s = eigendecompose(adjacency_matrix(generate(FamilySpec("complete", n=2))))
        with pytest.raises(ValueError):
            partition_function(s, -1.0)


class TestSubgraphCentrality:
    def test_k2(self):
        s = eigendecompose(adjacency_matrix(generate(FamilySpec("complete", n=2))))
        assert np.allclose(subgraph_centrality(s), [COSH1, COSH1], rtol=1e-12)

    def test_p3(self):
        s = eigendecompose(adjacency_matrix(generate(FamilySpec("path", n=3))))
        expected = [(COSH_SQRT2 + 1) / 2, COSH_SQRT2, (COSH_SQRT2 + 1) / 2]
        assert np.allclose(subgraph_centrality(s), expected, rtol=1e-12)

    def test_star_center_strictly_largest(self):
        g = generate(FamilySpec("star", n=4))
        sc = subgraph_centrality(eigendecompose(adjacency_matrix(g)))
        assert sc[0] > sc[1:].max()

    def test_ranking_matches_oracle(self, corpus):
        # subgraph-centrality ranking equals the oracle's (ties by index)
        for name, (g, _) in corpus.items():
            if g.n > 12:
                continue
            s = eigendecompose(adjacency_matrix(g))
            lib = subgraph_centrality(s)
            oracle = taylor_exp_diagonal(g, Fraction(1))
            lib_rank = sorted(range(g.n), key=lambda i: (-lib[i], i))
            oracle_rank = sorted(range(g.n), key=lambda i: (-oracle[i], i))
            # ranking comparison only meaningful away from float ties:
            # treat oracle values equal within 1e-12 as tied groups
            def groups(vals, order):
                out, cur = [], [order[0]]
                for a, b in zip(order, order[1:]):
                    if abs(vals[a] - vals[b]) <= 1e-12 * max(1.0, abs(vals[a])):
                        cur.append(b)
                    else:
                        out.append(sorted(cur))
                        cur = [b]
                out.append(sorted(cur))
                return out

            assert groups(oracle, lib_rank) == groups(oracle, oracle_rank), name
