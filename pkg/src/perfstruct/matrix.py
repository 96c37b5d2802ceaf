"""Dense matrices over an exact rational or complex floating scalar domain.

The exact domain stores ``fractions.Fraction`` entries in a numpy object
array and makes every arithmetic identity bit-exact; the complex domain is
plain ``complex128`` and feeds the eigensolver.  The two domains never mix
silently: converting is always an explicit ``to_complex()`` call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import (
    DefectiveMatrixError,
    DimensionError,
    DomainMismatchError,
    NonConvergenceError,
    SingularMatrixError,
)

EXACT = "exact"
COMPLEX = "complex"

#: default absolute tolerance on eigen residuals
DEFAULT_TOL = 1e-9
#: radius used when clustering eigenvalues into multiplicity classes
CLUSTER_RADIUS = 1e-6


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational scalar")


class Matrix:
    """Immutable dense matrix tagged with its scalar domain."""

    __slots__ = ("data", "domain")

    def __init__(self, data: np.ndarray, domain: str):
        if domain not in (EXACT, COMPLEX):
            raise ValueError(f"unknown domain {domain!r}")
        if data.ndim != 2:
            raise DimensionError(f"matrix data must be 2-dimensional, got shape {data.shape}")
        data = data.copy()
        data.setflags(write=False)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "domain", domain)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def exact(rows) -> "Matrix":
        """Build an exact-rational matrix from nested sequences of rationals."""
        arr = np.array([[_as_fraction(x) for x in row] for row in rows], dtype=object)
        if arr.ndim == 1:  # empty rows
            raise DimensionError("matrix needs at least one row and one column")
        return Matrix(arr, EXACT)

    @staticmethod
    def complex(rows) -> "Matrix":
        arr = np.array(rows, dtype=np.complex128)
        return Matrix(arr, COMPLEX)

    @staticmethod
    def identity(n: int, domain: str = EXACT) -> "Matrix":
        if domain == EXACT:
            arr = np.empty((n, n), dtype=object)
            arr[:] = Fraction(0)
            for i in range(n):
                arr[i, i] = Fraction(1)
            return Matrix(arr, EXACT)
        return Matrix(np.eye(n, dtype=np.complex128), COMPLEX)

    @staticmethod
    def zeros(rows: int, cols: int, domain: str = EXACT) -> "Matrix":
        if domain == EXACT:
            arr = np.empty((rows, cols), dtype=object)
            arr[:] = Fraction(0)
            return Matrix(arr, EXACT)
        return Matrix(np.zeros((rows, cols), dtype=np.complex128), COMPLEX)

    @staticmethod
    def ones(rows: int, cols: int | None = None, domain: str = EXACT) -> "Matrix":
        """The all-ones matrix J (square when ``cols`` is omitted)."""
        if cols is None:
            cols = rows
        if domain == EXACT:
            arr = np.empty((rows, cols), dtype=object)
            arr[:] = Fraction(1)
            return Matrix(arr, EXACT)
        return Matrix(np.ones((rows, cols), dtype=np.complex128), COMPLEX)

    @staticmethod
    def diag(values, domain: str = EXACT) -> "Matrix":
        values = list(values)
        n = len(values)
        m = Matrix.zeros(n, n, domain)
        arr = m.data.copy()
        for i, v in enumerate(values):
            arr[i, i] = _as_fraction(v) if domain == EXACT else complex(v)
        return Matrix(arr, domain)

    @staticmethod
    def column(values, domain: str = EXACT) -> "Matrix":
        return Matrix.exact([[v] for v in values]) if domain == EXACT \
            else Matrix.complex([[v] for v in values])

    # -- basic queries ------------------------------------------------

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        return self.data[idx]

    def __iter__(self):
        return iter(self.data)

    def __repr__(self):
        return f"Matrix({self.data.tolist()!r}, domain={self.domain!r})"

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.domain != other.domain or self.shape != other.shape:
            return False
        return bool(np.all(self.data == other.data))

    def __hash__(self):
        return hash((self.domain, self.shape, tuple(self.data.flat)))

    def col(self, j: int) -> np.ndarray:
        return self.data[:, j]

    # -- arithmetic ---------------------------------------------------

    def _check_domain(self, other: "Matrix"):
        if self.domain != other.domain:
            raise DomainMismatchError(
                f"cannot mix {self.domain} and {other.domain} matrices")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_domain(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.data + other.data, self.domain)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_domain(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(self.data - other.data, self.domain)

    def __neg__(self) -> "Matrix":
        return Matrix(-self.data, self.domain)

    def scale(self, alpha) -> "Matrix":
        alpha = _as_fraction(alpha) if self.domain == EXACT else complex(alpha)
        return Matrix(self.data * alpha, self.domain)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_domain(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        # np.matmul rejects object arrays; np.dot handles both domains
        return Matrix(np.dot(self.data, other.data), self.domain)

    def matvec(self, v: np.ndarray) -> np.ndarray:
        return np.dot(self.data, v)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.data.T, self.domain)

    def conj_transpose(self) -> "Matrix":
        if self.domain == EXACT:
            return self.T
        return Matrix(self.data.conj().T, COMPLEX)

    def is_zero(self) -> bool:
        return bool(np.all(self.data == 0))

    def max_abs(self) -> float:
        if self.data.size == 0:
            return 0.0
        return float(np.max(np.abs(self.data.astype(np.complex128))))

    def to_complex(self) -> "Matrix":
        """Explicit crossing from the exact domain into complex floats."""
        if self.domain == COMPLEX:
            return self
        return Matrix(self.data.astype(np.complex128), COMPLEX)

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionError("only square matrices have inverses")
        if self.domain == COMPLEX:
            try:
                return Matrix(np.linalg.inv(self.data), COMPLEX)
            except np.linalg.LinAlgError as exc:
                raise SingularMatrixError(str(exc)) from exc
        inv = _exact_inverse(self.data)
        if inv is None:
            raise SingularMatrixError("exact matrix is singular")
        return Matrix(inv, EXACT)


# -- exact elimination ------------------------------------------------

def _exact_rref(arr: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over the rationals; returns (rref, pivot columns)."""
    m = [list(row) for row in arr]
    n_rows, n_cols = arr.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    out = np.empty((n_rows, n_cols), dtype=object)
    out[:] = m
    return out, pivots


def _exact_inverse(arr: np.ndarray) -> np.ndarray | None:
    n = arr.shape[0]
    aug = np.empty((n, 2 * n), dtype=object)
    aug[:, :n] = arr
    aug[:, n:] = Matrix.identity(n).data
    rref, pivots = _exact_rref(aug)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        return None
    return rref[:, n:]


def exact_nullspace(arr: np.ndarray) -> list[np.ndarray]:
    """Basis of the rational nullspace of ``arr``, as object-dtype vectors."""
    n_cols = arr.shape[1]
    rref, pivots = _exact_rref(arr)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = np.empty(n_cols, dtype=object)
        v[:] = Fraction(0)
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r, fc]
        basis.append(v)
    return basis


def exact_solve(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """Solve ``a x = b`` exactly for each column of ``b``; None if inconsistent."""
    n_rows, n_cols = a.shape
    k = b.shape[1]
    aug = np.empty((n_rows, n_cols + k), dtype=object)
    aug[:, :n_cols] = a
    aug[:, n_cols:] = b
    rref, pivots = _exact_rref(aug)
    if any(p >= n_cols for p in pivots):
        return None  # inconsistent system
    x = np.empty((n_cols, k), dtype=object)
    x[:] = Fraction(0)
    for r, pc in enumerate(pivots):
        x[pc, :] = rref[r, n_cols:]
    return x


# -- module operations ------------------------------------------------

def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, block layout (a_11*B ... a_1n*B; ...)."""
    if a.domain != b.domain:
        raise DomainMismatchError("kron requires both factors in one domain")
    return Matrix(np.kron(a.data, b.data), a.domain)


def kron_vec(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    return np.kron(np.asarray(f), np.asarray(g))


def rank(a: Matrix, tol: float = DEFAULT_TOL) -> int:
    if a.domain == EXACT:
        _, pivots = _exact_rref(a.data)
        return len(pivots)
    if a.max_abs() == 0.0:
        return 0
    s = np.linalg.svd(a.data, compute_uv=False)
    return int(np.sum(s > max(tol, s[0] * max(a.shape) * np.finfo(float).eps)))


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues sorted by (Re, Im) with matching unit eigenvector columns."""

    values: np.ndarray        # complex, length n
    vectors: Matrix           # complex n x n, column i pairs with values[i]
    residual: float           # max_i || M v_i - lambda_i v_i ||_inf

    @property
    def n(self) -> int:
        return len(self.values)


def _sort_and_normalize(values: np.ndarray, vectors: np.ndarray):
    order = np.lexsort((values.imag, values.real))
    values = values[order]
    vectors = vectors[:, order]
    for j in range(vectors.shape[1]):
        v = vectors[:, j]
        nrm = np.linalg.norm(v)
        if nrm > 0:
            v = v / nrm
        idx = np.argmax(np.abs(v) > 1e-12)
        pivot = v[idx]
        if abs(pivot) > 1e-12:
            # rotate phase so the leading entry is real and nonnegative
            v = v * (pivot.conjugate() / abs(pivot))
        vectors[:, j] = v
    return values, vectors


def eig(m: Matrix, tol: float = DEFAULT_TOL) -> EigenSystem:
    """Full eigendecomposition with deterministic ordering and normalization.

    Hermitian inputs go through the symmetric solver, guaranteeing real
    eigenvalues and an orthonormal eigenbasis.  Raises on non-convergence or
    when the eigenvector matrix is numerically rank deficient (defective
    input).
    """
    if not m.is_square():
        raise DimensionError("eig needs a square matrix")
    a = m.to_complex().data.copy()
    hermitian = np.allclose(a, a.conj().T, atol=tol)
    try:
        if hermitian:
            values, vectors = np.linalg.eigh(a)
            values = values.astype(np.complex128)
        else:
            values, vectors = np.linalg.eig(a)
    except np.linalg.LinAlgError as exc:
        raise NonConvergenceError(str(exc)) from exc
    values, vectors = _sort_and_normalize(values, vectors)
    if not hermitian and len(values) > 1:
        s = np.linalg.svd(vectors, compute_uv=False)
        if s[-1] < 1e-8 * s[0]:
            raise DefectiveMatrixError("eigenvector matrix is rank deficient")
    resid = float(np.max(np.abs(a @ vectors - vectors * values))) if len(values) else 0.0
    if resid > max(tol, 1e3 * np.finfo(float).eps * max(1.0, np.max(np.abs(a)))):
        raise NonConvergenceError(f"eigen residual {resid:.3e} exceeds tolerance {tol:.3e}")
    return EigenSystem(values=values, vectors=Matrix(vectors, COMPLEX), residual=resid)


def eigenvalues(m: Matrix, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Eigenvalues only, same deterministic ordering, no diagonalizability gate."""
    a = m.to_complex().data
    if np.allclose(a, a.conj().T, atol=tol):
        vals = np.linalg.eigvalsh(a).astype(np.complex128)
    else:
        vals = np.linalg.eigvals(a)
    order = np.lexsort((vals.imag.round(12), vals.real.round(12)))
    return vals[order]


def cluster_values(values, radius: float = CLUSTER_RADIUS) -> list[tuple[complex, int]]:
    """Greedy clustering of eigenvalues into (representative, multiplicity) pairs."""
    vals = sorted((complex(v) for v in values), key=lambda z: (z.real, z.imag))
    clusters: list[tuple[complex, int]] = []
    for v in vals:
        if clusters and abs(v - clusters[-1][0]) <= radius:
            rep, mult = clusters[-1]
            clusters[-1] = (rep, mult + 1)
        else:
            clusters.append((v, 1))
    return clusters


def multiset_leq(sub, full, radius: float = CLUSTER_RADIUS) -> bool:
    """Is ``sub`` included in ``full`` as a multiset, up to clustering radius?"""
    remaining = [complex(v) for v in full]
    for v in sub:
        v = complex(v)
        best = None
        for i, w in enumerate(remaining):
            if abs(v - w) <= radius and (best is None or abs(v - w) < abs(v - remaining[best])):
                best = i
        if best is None:
            return False
        remaining.pop(best)
    return True


def multiset_equal(a, b, radius: float = CLUSTER_RADIUS) -> bool:
    a = list(a)
    b = list(b)
    return len(a) == len(b) and multiset_leq(a, b, radius)


def multiset_discrepancy(a, b) -> float:
    """Max pair distance under greedy closest-pair matching; inf if sizes differ.

    Sorting both lists and zipping is unstable when nearly equal real parts
    differ by floating point noise (conjugate pairs can swap), so instead
    repeatedly match the globally closest remaining pair.
    """
    a = np.array([complex(v) for v in a], dtype=np.complex128)
    b = np.array([complex(v) for v in b], dtype=np.complex128)
    if a.size != b.size:
        return float("inf")
    if a.size == 0:
        return 0.0
    dist = np.abs(a[:, None] - b[None, :])
    worst = 0.0
    for _ in range(a.size):
        i, j = np.unravel_index(np.argmin(dist), dist.shape)
        worst = max(worst, float(dist[i, j]))
        dist[i, :] = np.inf
        dist[:, j] = np.inf
    return worst


def is_diagonalizable(m: Matrix, tol: float = DEFAULT_TOL,
                      cluster_radius: float = CLUSTER_RADIUS) -> bool:
    """Geometric multiplicity equals algebraic multiplicity for every eigenvalue."""
    if not m.is_square():
        raise DimensionError("is_diagonalizable needs a square matrix")
    a = m.to_complex().data
    if np.allclose(a, a.conj().T, atol=tol):
        return True
    n = a.shape[0]
    if n <= 1:
        return True
    vals = np.linalg.eigvals(a)
    scale = max(1.0, float(np.max(np.abs(a))))
    for rep, mult in cluster_values(vals, cluster_radius):
        s = np.linalg.svd(a - rep * np.eye(n), compute_uv=False)
        nullity = int(np.sum(s <= max(cluster_radius, 10 * tol) * scale))
        if nullity != mult:
            return False
    return True


def poly_eval(coeffs, m: Matrix) -> Matrix:
    """Evaluate p(M) by Horner's scheme; ``coeffs[i]`` multiplies x**i."""
    if not m.is_square():
        raise DimensionError("poly_eval needs a square matrix")
    coeffs = list(coeffs)
    if not coeffs:
        return Matrix.zeros(m.rows, m.rows, m.domain)
    n = m.rows
    ident = Matrix.identity(n, m.domain)
    acc = ident.scale(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc @ m + ident.scale(c)
    return acc
