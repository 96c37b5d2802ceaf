"""Numerics: Kronecker products, rank, eigendecomposition, polynomials."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perfstruct import (
    Matrix,
    eig,
    eigenvalues,
    is_diagonalizable,
    kron,
    multiset_discrepancy,
    poly_eval,
    rank,
)
from perfstruct.errors import DefectiveMatrixError, DomainMismatchError

RNG = np.random.default_rng(20200419)

small_fraction = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def exact_mats(n):
    return st.lists(
        st.lists(small_fraction, min_size=n, max_size=n), min_size=n, max_size=n,
    ).map(Matrix.exact)


class TestKron:
    def test_identity_case(self):
        assert kron(Matrix.identity(2), Matrix.identity(2)) == Matrix.identity(4)

    def test_single_edge_square(self):
        # hand expansion of the block formula: ones exactly at the anti-diagonal
        e = Matrix.exact([[0, 1], [1, 0]])
        got = kron(e, e)
        expected = Matrix.exact([
            [0, 0, 0, 1],
            [0, 0, 1, 0],
            [0, 1, 0, 0],
            [1, 0, 0, 0],
        ])
        assert got == expected

    def test_domain_mismatch(self):
        with pytest.raises(DomainMismatchError):
            kron(Matrix.identity(2), Matrix.complex([[1, 0], [0, 1]]))

    @settings(max_examples=40, deadline=None)
    @given(exact_mats(2), exact_mats(2), exact_mats(2), exact_mats(2))
    def test_mixed_product(self, a, b, c, d):
        assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)

    @settings(max_examples=25, deadline=None)
    @given(exact_mats(2), exact_mats(3), exact_mats(2))
    def test_associativity(self, a, b, c):
        assert kron(kron(a, b), c) == kron(a, kron(b, c))

    @settings(max_examples=25, deadline=None)
    @given(exact_mats(2), exact_mats(2), exact_mats(2), small_fraction)
    def test_bilinearity(self, a, b, c, alpha):
        assert kron(a, b + c) == kron(a, b) + kron(a, c)
        assert kron(a, b).scale(alpha) == kron(a.scale(alpha), b)


class TestRank:
    def test_zero_matrix(self):
        assert rank(Matrix.zeros(3, 2)) == 0

    def test_identity(self):
        assert rank(Matrix.identity(4)) == 4

    def test_dependent_rows(self):
        assert rank(Matrix.exact([[1, 2], [2, 4]])) == 1

    def test_complex_domain(self):
        assert rank(Matrix.complex([[1, 2], [2, 4]])) == 1
        assert rank(Matrix.complex([[1, 2], [2, 4.001]])) == 2

    @settings(max_examples=25, deadline=None)
    @given(exact_mats(3))
    def test_invariance(self, m):
        perm = Matrix.exact([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        assert rank(m) == rank(m.T)
        assert rank(m) == rank(perm @ m)
        assert rank(m) == rank(m @ perm)


class TestEig:
    def test_single_edge(self):
        es = eig(Matrix.complex([[0, 1], [1, 0]]))
        assert np.allclose(es.values, [-1, 1])

    def test_all_ones_3(self):
        es = eig(Matrix.ones(3, 3).to_complex())
        assert np.allclose(es.values, [0, 0, 3], atol=1e-9)

    def test_scalar(self):
        es = eig(Matrix.complex([[5]]))
        assert np.allclose(es.values, [5])
        assert np.allclose(es.vectors.data, [[1]])

    def test_residual_round_trip(self):
        m = Matrix.complex(RNG.normal(size=(12, 12)) + 1j * RNG.normal(size=(12, 12)))
        es = eig(m, tol=1e-8)
        a = m.data
        for i in range(12):
            v = es.vectors.col(i)
            assert np.max(np.abs(a @ v - es.values[i] * v)) <= 1e-8

    def test_deterministic_ordering(self):
        m = Matrix.complex(RNG.normal(size=(6, 6)))
        v1 = eig(m).values
        v2 = eig(m).values
        assert np.array_equal(v1, v2)
        assert all(
            (v1[i].real, v1[i].imag) <= (v1[i + 1].real, v1[i + 1].imag)
            for i in range(5))

    def test_hermitian_path_orthonormal(self):
        a = RNG.normal(size=(8, 8))
        es = eig(Matrix.complex(a + a.T))
        assert np.max(np.abs(es.values.imag)) == 0
        gram = es.vectors.conj_transpose() @ es.vectors
        assert np.allclose(gram.data, np.eye(8), atol=1e-9)

    def test_defective_input_detected(self):
        with pytest.raises(DefectiveMatrixError):
            eig(Matrix.complex([[0, 1], [0, 0]]))

    def test_against_characteristic_polynomial(self):
        # roots of the exactly-expanded characteristic polynomial, n <= 4
        import sympy

        for n in (2, 3, 4):
            for _ in range(5):
                m = Matrix.exact(RNG.integers(-3, 4, size=(n, n)).tolist())
                sym = sympy.Matrix(n, n, lambda i, j: sympy.Rational(m.data[i, j]))
                coeffs = sym.charpoly().all_coeffs()
                roots = np.roots([float(c) for c in coeffs])
                vals = eigenvalues(m.to_complex())
                assert multiset_discrepancy(vals, roots) <= 1e-8


class TestDiagonalizable:
    def test_symmetric(self):
        a = RNG.normal(size=(7, 7))
        assert is_diagonalizable(Matrix.complex(a + a.T))

    def test_nilpotent_jordan_block(self):
        assert not is_diagonalizable(Matrix.complex([[0, 1], [0, 0]]))

    def test_identity(self):
        assert is_diagonalizable(Matrix.identity(5).to_complex())

    def test_distinct_eigenvalues_nonsymmetric(self):
        assert is_diagonalizable(Matrix.complex([[1, 5], [0, 2]]))


class TestPolyEval:
    def test_square_of_single_edge(self):
        m = Matrix.exact([[0, 1], [1, 0]])
        assert poly_eval([0, 0, 1], m) == Matrix.identity(2)

    def test_constant(self):
        m = Matrix.exact([[3, 1], [2, 5]])
        assert poly_eval([1], m) == Matrix.identity(2)

    def test_linear_shift(self):
        m = Matrix.exact([[3, 1], [2, 5]])
        alpha = Fraction(7, 2)
        assert poly_eval([alpha, 1], m) == m + Matrix.identity(2).scale(alpha)
