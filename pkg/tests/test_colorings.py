"""Tests for perfect colorings, coverings, product colorings, orthogonality,
and the exhaustive census."""

from fractions import Fraction
from itertools import product as iproduct

import numpy as np
import pytest

from perfstruct import (
    Coloring,
    FractionalColoring,
    Matrix,
    canonical_colors,
    census,
    check_covering,
    complete_graph_parameters,
    from_edges,
    make_family,
    orthogonality_check,
    product_coloring,
    verify_coloring,
    verify_fractional,
)
from perfstruct.errors import DimensionError, HypothesisNotMetError

from helpers import enumerate_perfect_colorings

RNG = np.random.default_rng(20200419)


class TestColoring:
    def test_indicator(self):
        c = Coloring.from_colors([1, 2, 1, 2])
        assert c.k == 2
        assert c.class_sizes == (2, 2)
        assert c.indicator == Matrix.exact([[1, 0], [0, 1], [1, 0], [0, 1]])

    def test_non_contiguous_rejected(self):
        with pytest.raises(DimensionError):
            Coloring.from_colors([1, 3, 1])


class TestVerifyColoring:
    def test_alternating_on_even_cycle(self):
        g = make_family("cycle", 6)
        s = verify_coloring(g, Coloring.from_colors([1, 2, 1, 2, 1, 2]))
        assert s == Matrix.exact([[0, 2], [2, 0]])

    def test_imperfect_coloring(self):
        g = make_family("path", 4)
        assert verify_coloring(g, Coloring.from_colors([1, 1, 2, 2])) is None

    def test_trivial_coloring_of_regular_graph(self):
        g = make_family("cycle", 5)
        s = verify_coloring(g, Coloring.from_colors([1] * 5))
        assert s == Matrix.exact([[2]])

    def test_complete_graph_any_coloring(self):
        # every coloring of K_n is perfect with S = J diag(sizes) - I
        g = make_family("complete", 5)
        for colors in ([1, 1, 2, 2, 3], [1, 2, 3, 4, 5], [1, 1, 1, 1, 2]):
            c = Coloring.from_colors(colors)
            s = verify_coloring(g, c)
            assert s == complete_graph_parameters(c.class_sizes)


class TestCovering:
    def test_six_cycle_covers_triangle(self):
        g = make_family("cycle", 6)
        h = make_family("cycle", 3)
        assert check_covering(g, h, [1, 2, 3, 1, 2, 3])

    def test_four_cycle_does_not_cover_single_edge(self):
        g = make_family("cycle", 4)
        h = make_family("complete", 2)
        assert not check_covering(g, h, [1, 2, 1, 2])

    def test_identity_covering(self):
        g = make_family("cycle", 5)
        assert check_covering(g, g, [1, 2, 3, 4, 5])


class TestFractional:
    def test_convex_combination_stays_fractional(self):
        g = make_family("cycle", 4)
        w1 = Coloring.from_colors([1, 2, 1, 2]).indicator
        half = Fraction(1, 2)
        mix = w1.scale(half) + Matrix.ones(4, 2).scale(Fraction(1, 4))
        fc = FractionalColoring(mix)
        s = verify_fractional(g, fc)
        assert s is not None
        assert (g.adjacency @ mix - mix @ s).is_zero()

    def test_row_sum_validation(self):
        with pytest.raises(DimensionError):
            FractionalColoring(Matrix.exact([[1, 1]]))
        with pytest.raises(DimensionError):
            FractionalColoring(Matrix.exact([[2, -1]]))

    def test_rank_deficient_returns_none(self):
        g = make_family("cycle", 4)
        w = Matrix.ones(4, 2).scale(Fraction(1, 2))
        assert verify_fractional(g, FractionalColoring(w)) is None


class TestProductColorings:
    FACTOR_CASES = [("cycle", 3), ("cycle", 4), ("complete", 2), ("complete", 3)]

    @pytest.mark.parametrize("kind",
                             ["tensor", "cartesian", "normal", "lexicographic"])
    @pytest.mark.parametrize("lfam", FACTOR_CASES)
    @pytest.mark.parametrize("rfam", FACTOR_CASES)
    def test_closure(self, kind, lfam, rfam):
        """Perfect factor colorings give a perfect product coloring with the
        predicted parameter matrix; re-verified inside product_coloring."""
        g1 = make_family(*lfam)
        g2 = make_family(*rfam)
        c1 = _some_perfect_coloring(g1)
        c2 = _some_perfect_coloring(g2)
        graph, coloring, params = product_coloring(kind, (g1, c1), (g2, c2))
        assert coloring.k == c1.k * c2.k
        assert verify_coloring(graph, coloring) == params

    def test_imperfect_factor_rejected(self):
        g = make_family("path", 4)
        bad = Coloring.from_colors([1, 1, 2, 2])
        c4 = make_family("cycle", 4)
        good = Coloring.from_colors([1, 2, 1, 2])
        with pytest.raises(HypothesisNotMetError):
            product_coloring("cartesian", (g, bad), (c4, good))


def _some_perfect_coloring(g):
    name = g.family[0]
    n = g.n
    if name == "complete":
        return Coloring.from_colors(list(range(1, n + 1)))
    if n % 2 == 0:
        return Coloring.from_colors([1 + i % 2 for i in range(n)])
    return Coloring.from_colors([1] * n)


class TestOrthogonality:
    def test_four_cycle_alternating_and_sided(self):
        g = make_family("cycle", 4)
        p = Coloring.from_colors([1, 2, 1, 2])
        r = Coloring.from_colors([1, 1, 2, 2])
        assert orthogonality_check(g, p, r)

    def test_hamming_two_two(self):
        g = make_family("hamming", 2, 2)
        # bipartition against one side of the square
        p = Coloring.from_colors([1, 2, 2, 1])
        r = Coloring.from_colors([1, 1, 2, 2])
        assert orthogonality_check(g, p, r)

    def test_shared_nondegree_eigenvalue_rejected(self):
        g = make_family("cycle", 4)
        p = Coloring.from_colors([1, 2, 1, 2])
        with pytest.raises(HypothesisNotMetError):
            orthogonality_check(g, p, p)

    def test_irregular_rejected(self):
        g = make_family("path", 3)
        c = Coloring.from_colors([1, 2, 1])
        with pytest.raises(HypothesisNotMetError):
            orthogonality_check(g, c, c)


class TestDensityCorollary:
    def test_class_density_from_orthogonality(self):
        """With the trivial 1-coloring as one side, orthogonality forces each
        class of the other coloring to have size l_i = <P_i, 1>."""
        g = make_family("hamming", 2, 2)
        p = Coloring.from_colors([1, 1, 2, 2])
        r = Coloring.from_colors([1] * 4)
        assert orthogonality_check(g, p, r)
        for i in range(p.k):
            dot = sum(p.indicator.col(i))
            assert dot == Fraction(p.class_sizes[i] * 4, 4)


class TestCensus:
    CASES = [
        (("cycle", 4), 2),
        (("cycle", 5), 2),
        (("cycle", 6), 3),
        (("path", 4), 2),
        (("path", 5), 3),
        (("complete", 4), 2),
        (("complete", 5), 3),
        (("prism", 3), 2),
        (("prism", 4), 3),
        (("hamming", 3, 2), 2),
        (("hamming", 3, 2), 3),
    ]

    @pytest.mark.parametrize("fam,k", CASES)
    def test_against_brute_force(self, fam, k):
        g = make_family(*fam)
        res = census(g, k)
        assert res.complete
        got = {c.colors for c, _ in res.results}
        assert got == enumerate_perfect_colorings(g, k)

    def test_results_carry_correct_parameters(self):
        g = make_family("cycle", 6)
        for coloring, s in census(g, 2).results:
            assert verify_coloring(g, coloring) == s

    def test_four_cycle_two_colors_parameter_matrices(self):
        res = census(make_family("cycle", 4), 2)
        params = {tuple(map(tuple, s.data)) for _, s in res.results}
        expect = {((0, 2), (2, 0)), ((1, 1), (1, 1))}
        assert {tuple(tuple(int(x) for x in row) for row in p)
                for p in params} == expect

    def test_budget_abort(self):
        g = make_family("hamming", 3, 2)
        res = census(g, 3, budget=10)
        assert not res.complete

    def test_out_of_range_k(self):
        g = make_family("cycle", 4)
        assert census(g, 0).results == ()
        assert census(g, 5).results == ()

    def test_canonical_colors(self):
        assert canonical_colors([3, 1, 3, 2]) == (1, 2, 1, 3)


class TestCensusOracleAgreementRandom:
    def test_random_small_graphs(self):
        """Census and the brute-force enumerator agree on random graphs."""
        for _ in range(10):
            n = int(RNG.integers(3, 7))
            edges = [(u + 1, v + 1) for u in range(n) for v in range(u + 1, n)
                     if RNG.random() < 0.5]
            if not edges:
                edges = [(1, 2)]
            g = from_edges(n, edges)
            for k in (1, 2, 3):
                if k > n:
                    continue
                got = {c.colors for c, _ in census(g, k).results}
                assert got == enumerate_perfect_colorings(g, k)
