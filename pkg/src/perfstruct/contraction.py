"""Contraction of product-graph eigenfunctions back to a factor.

A vector h on a two-term product N = M1 kron L1 + M2 kron L2 reshapes to the
m x n matrix H (left index major, matching the Kronecker block layout), and
contracting against a right-factor eigenvector g gives f = H g.  When f is
itself an eigenvector of M1, it is an eigenvector of M2 as well, with
mu'' = (nu - lambda' * mu') / lambda''.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    ExcludedEigenvalueError,
    HypothesisNotMetError,
    ZeroContractionError,
)
from .graphs import Graph, is_regular
from .matrix import DEFAULT_TOL, Matrix


@dataclass(frozen=True)
class ContractionInput:
    product_matrix: Matrix      # N = M1 kron L1 + M2 kron L2, order m*n
    h: np.ndarray               # eigenvector of N, length m*n
    nu: complex                 # its eigenvalue
    g: np.ndarray               # shared eigenvector of L1 and L2, length n
    lambda_prime: complex       # L1 g = lambda' g
    lambda_dblprime: complex    # L2 g = lambda'' g
    factor_orders: tuple        # (m, n)

    def __post_init__(self):
        m, n = self.factor_orders
        h = np.asarray(self.h, dtype=np.complex128)
        g = np.asarray(self.g, dtype=np.complex128)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "g", g)
        if h.shape != (m * n,):
            raise DimensionError(f"h must have length m*n = {m * n}, got {h.shape}")
        if g.shape != (n,):
            raise DimensionError(f"g must have length n = {n}, got {g.shape}")
        if self.product_matrix.shape != (m * n, m * n):
            raise DimensionError("product matrix order must be m*n")

    def reshaped(self) -> np.ndarray:
        m, n = self.factor_orders
        return self.h.reshape(m, n)


def contract(inp: ContractionInput) -> np.ndarray:
    """f = H·g; a zero result is a value, not an error."""
    return inp.reshaped() @ inp.g


def verify_contraction_theorem(inp: ContractionInput, m1: Matrix, m2: Matrix,
                               tol: float = DEFAULT_TOL) -> tuple[complex, complex]:
    """Certify mu' and mu'' = (nu - lambda'·mu')/lambda'' for f = H·g.

    Raises ExcludedEigenvalueError when lambda'' = 0, ZeroContractionError when
    f vanishes, and HypothesisNotMetError when f is not an eigenvector of M1
    (as opposed to a numerical failure of the certified identity).
    """
    if abs(complex(inp.lambda_dblprime)) <= tol:
        raise ExcludedEigenvalueError("lambda'' must be nonzero")
    nmat = inp.product_matrix.to_complex().data
    scale = max(1.0, float(np.max(np.abs(nmat))))
    if np.max(np.abs(nmat @ inp.h - complex(inp.nu) * inp.h)) > tol * scale * 10:
        raise HypothesisNotMetError("h is not an eigenvector of the product matrix")
    f = contract(inp)
    fnorm = float(np.linalg.norm(f))
    if fnorm <= tol:
        raise ZeroContractionError("the contraction H·g is the zero vector")
    a1 = m1.to_complex().data
    a2 = m2.to_complex().data
    mu_prime = complex(np.vdot(f, a1 @ f) / np.vdot(f, f))
    if np.max(np.abs(a1 @ f - mu_prime * f)) > tol * max(1.0, fnorm) * 10:
        raise HypothesisNotMetError("H·g is not an eigenvector of M1")
    mu_dblprime = (complex(inp.nu) - complex(inp.lambda_prime) * mu_prime) \
        / complex(inp.lambda_dblprime)
    resid = float(np.max(np.abs(a2 @ f - mu_dblprime * f)))
    if resid > tol * max(1.0, fnorm) * 10:
        raise ArithmeticError(
            f"certified identity M2·f = mu''·f fails numerically (residual {resid:.3e})")
    return mu_prime, mu_dblprime


#: per-product eigenvalue maps (nu, lambda, right data) -> mu
NAMED_KINDS = ("tensor", "cartesian", "normal", "lexicographic")


def contract_named(product: str, product_eigfn, right_eigfn, right_graph: Graph,
                   tol: float = DEFAULT_TOL,
                   left_matrix: Matrix | None = None) -> tuple[np.ndarray, complex]:
    """Contract a product eigenfunction through one of the named products.

    ``product_eigfn`` is (h, nu), ``right_eigfn`` is (g, lambda).  Returns
    (f, mu) with f possibly zero (callers may retry with another g).  When
    ``left_matrix`` is supplied and f is nonzero, the eigen identity
    M·f = mu·f is checked at the given tolerance.
    """
    if product not in NAMED_KINDS:
        raise ValueError(f"unknown product kind {product!r}")
    h, nu = product_eigfn
    g, lam = right_eigfn
    h = np.asarray(h, dtype=np.complex128)
    g = np.asarray(g, dtype=np.complex128)
    nu = complex(nu)
    lam = complex(lam)
    n = right_graph.n
    if h.size % n != 0:
        raise DimensionError("h length is not a multiple of the right factor order")
    m = h.size // n

    if product == "tensor":
        if abs(lam) <= tol:
            raise ExcludedEigenvalueError("tensor contraction is undefined at lambda = 0")
        mu = nu / lam
    elif product == "cartesian":
        mu = nu - lam
    elif product == "normal":
        if abs(lam + 1) <= tol:
            raise ExcludedEigenvalueError("normal contraction is undefined at lambda = -1")
        mu = (nu - lam) / (1 + lam)
    else:  # lexicographic
        r = is_regular(right_graph)
        if r is None:
            raise HypothesisNotMetError(
                "lexicographic contraction needs a regular right factor")
        ones = np.ones(n, dtype=np.complex128)
        if np.max(np.abs(g - ones)) > tol * 10:
            raise HypothesisNotMetError(
                "lexicographic contraction uses the all-ones eigenvector of the "
                "right factor")
        if abs(lam - r) > tol * 10:
            raise HypothesisNotMetError(
                "lexicographic contraction is stated only at lambda = degree")
        mu = (nu - r) / n

    f = h.reshape(m, n) @ g
    if left_matrix is not None and np.linalg.norm(f) > tol:
        a = left_matrix.to_complex().data
        resid = float(np.max(np.abs(a @ f - mu * f)))
        if resid > tol * max(1.0, float(np.linalg.norm(f))) * 10:
            raise HypothesisNotMetError(
                f"contracted vector is not an eigenvector of the left factor "
                f"(residual {resid:.3e})")
    return f, mu
