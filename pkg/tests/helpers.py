"""Shared generators for randomized exact-domain test instances."""

from fractions import Fraction

import numpy as np

from perfstruct import Matrix, PerfectStructure, rank


def random_invertible(rng, n, lo=-3, hi=3):
    """Random exact integer matrix with nonzero determinant."""
    while True:
        m = Matrix.exact(rng.integers(lo, hi + 1, size=(n, n)).tolist())
        if rank(m) == n:
            return m


def random_diagonalizable(rng, n, spectrum_pool=(0, 1, 2)):
    """Exact M = Q·diag(d)·Q^-1 with eigenvalues drawn (with repeats) from the
    pool; returns (M, Q, d)."""
    q = random_invertible(rng, n)
    d = [int(x) for x in rng.choice(spectrum_pool, size=n)]
    m = q @ Matrix.diag(d) @ q.inverse()
    return m, q, d


def random_structure(rng, n, k, spectrum_pool=(0, 1, 2)):
    """Random verified nonsingular exact structure (M, P, S).

    P = R·B where the columns of R are k eigenvectors of M and B is a random
    invertible k x k matrix, so MP = PS holds bit-exact with
    S = B^-1·diag(selected eigenvalues)·B.
    """
    m, q, d = random_diagonalizable(rng, n, spectrum_pool)
    idx = sorted(rng.choice(n, size=k, replace=False).tolist())
    r = Matrix(q.data[:, idx], "exact")
    b = random_invertible(rng, k)
    p = r @ b
    s = b.inverse() @ Matrix.diag([d[i] for i in idx]) @ b
    return PerfectStructure(m, p, s)


def random_structure_collection(rng, n, k, count, spectrum_pool=(-2, -1, 0, 1, 2)):
    """Verified structures (M_i, P, S_i) sharing one structure matrix P.

    All M_i share the eigenvector matrix Q but carry independent eigenvalue
    diagonals, so the same column selection works for each of them.
    """
    q = random_invertible(rng, n)
    q_inv = q.inverse()
    idx = sorted(rng.choice(n, size=k, replace=False).tolist())
    r = Matrix(q.data[:, idx], "exact")
    b = random_invertible(rng, k)
    p = r @ b
    b_inv = b.inverse()
    out = []
    for _ in range(count):
        d = [int(x) for x in rng.choice(spectrum_pool, size=n)]
        m = q @ Matrix.diag(d) @ q_inv
        s = b_inv @ Matrix.diag([d[i] for i in idx]) @ b
        out.append(PerfectStructure(m, p, s))
    return out


def random_unity_structure(rng, n, k):
    """Random verified nonsingular structure over J_n.

    Eigenvectors of J: the all-ones vector (eigenvalue n) and differences
    e_1 - e_j (eigenvalue 0).  A random subset of size k plus a random basis
    change yields every shape the all-ones classification must handle.
    """
    j = Matrix.ones(n, n)
    # k zero-eigenvectors only exist for k <= n - 1
    include_ones = bool(rng.integers(0, 2)) or k > n - 1
    cols = []
    vals = []
    if include_ones:
        cols.append([Fraction(1)] * n)
        vals.append(n)
    zero_needed = k - len(cols)
    picks = sorted(rng.choice(range(1, n), size=zero_needed, replace=False).tolist())
    for jj in picks:
        col = [Fraction(0)] * n
        col[0] = Fraction(1)
        col[jj] = Fraction(-1)
        cols.append(col)
        vals.append(0)
    r = Matrix.exact([[cols[c][i] for c in range(k)] for i in range(n)])
    b = random_invertible(rng, k)
    p = r @ b
    s = b.inverse() @ Matrix.diag(vals) @ b
    return PerfectStructure(j, p, s)


def brute_force_structure_space_dim(m: Matrix, s: Matrix) -> int:
    """Independent oracle: nullity of the linear map P -> MP - PS on vec(P),
    via a self-contained exact Gaussian elimination (no package code)."""
    n = m.rows
    k = s.rows
    rows = []
    for i in range(n):
        for j in range(k):
            row = [Fraction(0)] * (n * k)
            for a in range(n):
                row[a * k + j] += Fraction(m.data[i, a])
            for b in range(k):
                row[i * k + b] -= Fraction(s.data[b, j])
            rows.append(row)
    # plain row reduction over the rationals
    r = 0
    n_rows, n_cols = len(rows), n * k
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == n_rows:
            break
    return n_cols - r


def enumerate_perfect_colorings(g, k):
    """Independent census oracle: try all surjective color strings and keep the
    ones satisfying the combinatorial definition, deduplicated by renaming."""
    from itertools import product as iproduct

    n = g.n
    data = g.adjacency.data
    found = set()
    for assignment in iproduct(range(1, k + 1), repeat=n):
        if len(set(assignment)) != k:
            continue
        by_color = {}
        ok = True
        for v in range(n):
            counts = tuple(
                sum(data[v][w] for w in range(n)
                    if data[v][w] != 0 and assignment[w] == c)
                for c in range(1, k + 1))
            ref = by_color.setdefault(assignment[v], counts)
            if ref != counts:
                ok = False
                break
        if ok:
            mapping = {}
            canon = []
            for c in assignment:
                mapping.setdefault(c, len(mapping) + 1)
                canon.append(mapping[c])
            found.add(tuple(canon))
    return found
