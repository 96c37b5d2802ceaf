"""Perfect colorings (equitable partitions) and the exhaustive census.

A perfect coloring is a surjective vertex coloring where same-colored
vertices see identical color multisets in their neighborhoods; equivalently
a 0/1-indicator perfect structure.  The census enumerates all perfect
k-colorings of a graph up to color renaming by a pruned backtracking search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimensionError, HypothesisNotMetError
from .graphs import Graph, is_connected, is_regular
from .matrix import (
    CLUSTER_RADIUS,
    DEFAULT_TOL,
    EXACT,
    Matrix,
    eigenvalues,
    kron,
    rank,
)
from .structures import parameters_from_structure
from .errors import NoParameterMatrixError


@dataclass(frozen=True)
class Coloring:
    """Surjective map vertex -> color, colors 1..k, with indicator matrix P."""

    colors: tuple               # length n, values 1..k
    k: int
    indicator: Matrix           # n x k exact 0/1
    class_sizes: tuple          # column sums of the indicator

    @staticmethod
    def from_colors(colors) -> "Coloring":
        colors = tuple(int(c) for c in colors)
        k = max(colors)
        if sorted(set(colors)) != list(range(1, k + 1)):
            raise DimensionError("colors must form a contiguous surjective range 1..k")
        n = len(colors)
        p = [[Fraction(1) if colors[v] == j + 1 else Fraction(0) for j in range(k)]
             for v in range(n)]
        sizes = tuple(colors.count(j + 1) for j in range(k))
        return Coloring(colors=colors, k=k, indicator=Matrix.exact(p),
                        class_sizes=sizes)

    @property
    def n(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class FractionalColoring:
    """Nonnegative structure matrix with unit row sums."""

    weights: Matrix             # n x k

    def __post_init__(self):
        w = self.weights
        for i in range(w.rows):
            row = w.data[i]
            if any((x < 0 if w.domain == EXACT else x.real < -1e-12) for x in row):
                raise DimensionError("fractional weights must be nonnegative")
            s = sum(row)
            ok = (s == 1) if w.domain == EXACT else abs(s - 1) <= 1e-9
            if not ok:
                raise DimensionError(f"row {i + 1} of the weights does not sum to 1")


def _neighbor_counts(g: Graph, colors, k: int, v: int):
    """Color-count vector over the neighborhood of vertex v (entries weight
    multi-edges)."""
    data = g.adjacency.data
    counts = [Fraction(0)] * k
    for w in range(g.n):
        if data[v][w] != 0:
            counts[colors[w] - 1] += data[v][w]
    return counts


def verify_coloring(g: Graph, c: Coloring) -> Matrix | None:
    """Parameter matrix S of a perfect coloring, or None when not perfect.

    Checked combinatorially (all color-i vertices share one neighbor count
    vector), then cross-asserted as M·P = P·S bit-exact.
    """
    if c.n != g.n:
        raise DimensionError("coloring length must equal the number of vertices")
    reference: list[list | None] = [None] * c.k
    for v in range(g.n):
        counts = _neighbor_counts(g, c.colors, c.k, v)
        i = c.colors[v] - 1
        if reference[i] is None:
            reference[i] = counts
        elif reference[i] != counts:
            return None
    s = Matrix.exact([ref for ref in reference])
    assert (g.adjacency @ c.indicator - c.indicator @ s).is_zero(), \
        "combinatorial and algebraic verifiers disagree"
    return s


def complete_graph_parameters(class_sizes) -> Matrix:
    """Parameters of any coloring of K_n with the given class sizes:
    J·diag(n_1..n_k) - I."""
    sizes = [int(s) for s in class_sizes]
    if any(s < 1 for s in sizes):
        raise DimensionError("class sizes must be positive")
    k = len(sizes)
    j = Matrix.ones(k, k)
    return j @ Matrix.diag(sizes) - Matrix.identity(k)


def check_covering(g: Graph, h: Graph, phi) -> bool:
    """Does phi: V(G) -> V(H) exhibit G as a cover of H?  True iff the induced
    coloring is perfect with parameter matrix exactly the adjacency of H."""
    phi = [int(x) for x in phi]
    if sorted(set(phi)) != list(range(1, h.n + 1)):
        raise DimensionError("phi must be surjective onto the vertices of H")
    c = Coloring.from_colors(phi)
    s = verify_coloring(g, c)
    return s is not None and s == h.adjacency


def verify_fractional(g: Graph, w: FractionalColoring,
                      tol: float = DEFAULT_TOL) -> Matrix | None:
    """Parameter matrix of a fractional perfect coloring, or None."""
    weights = w.weights
    if weights.rows != g.n:
        raise DimensionError("weight rows must equal the number of vertices")
    if rank(weights, tol) < weights.cols:
        return None
    m = g.adjacency if weights.domain == EXACT else g.adjacency.to_complex()
    try:
        return parameters_from_structure(m, weights, tol)
    except NoParameterMatrixError:
        return None


# -- product colorings (tensor / Cartesian / normal / lexicographic) --

def product_coloring(product: str, left, right):
    """Perfect coloring of a named product from perfect factor colorings.

    ``left`` and ``right`` are (Graph, Coloring) pairs.  Returns the product
    graph, the k1*k2-coloring with indicator P kron R, and its parameter
    matrix; the result is re-verified combinatorially before returning.
    """
    from .products import NAMED_SPECS, build_product

    if product not in NAMED_SPECS:
        raise ValueError(f"unknown product kind {product!r}")
    g1, c1 = left
    g2, c2 = right
    s = verify_coloring(g1, c1)
    t = verify_coloring(g2, c2)
    if s is None or t is None:
        raise HypothesisNotMetError("both factor colorings must be perfect")
    k1, k2 = c1.k, c2.k
    ident1 = Matrix.identity(k1)
    if product == "tensor":
        params = kron(s, t)
    elif product == "cartesian":
        params = kron(ident1, t) + kron(s, Matrix.identity(k2))
    elif product == "normal":
        params = kron(s, Matrix.identity(k2)) + kron(ident1, t) + kron(s, t)
    else:  # lexicographic: T' = J·diag(l_1..l_k2) per the complete-graph law
        t_prime = Matrix.ones(k2, k2) @ Matrix.diag(c2.class_sizes)
        params = kron(s, t_prime) + kron(ident1, t)

    spec = NAMED_SPECS[product](g1.adjacency, g2.adjacency)
    prod_graph = Graph(build_product(spec))
    colors = [(c1.colors[v] - 1) * k2 + c2.colors[u]
              for v in range(g1.n) for u in range(g2.n)]
    prod_coloring = Coloring.from_colors(colors)
    check = verify_coloring(prod_graph, prod_coloring)
    assert check is not None and check == params, \
        "product coloring failed re-verification"
    return prod_graph, prod_coloring, params


def orthogonality_check(g: Graph, p: Coloring, r: Coloring,
                        tol: float = DEFAULT_TOL,
                        radius: float = CLUSTER_RADIUS) -> bool:
    """<P_i, R_j> = l_i * m_j / n for all columns, checked in exact rationals.

    Hypotheses: g connected and regular, both colorings perfect, and the
    parameter spectra share only the degree; otherwise HypothesisNotMetError.
    """
    deg = is_regular(g)
    if deg is None or not is_connected(g):
        raise HypothesisNotMetError("orthogonality needs a connected regular graph")
    sp = verify_coloring(g, p)
    sr = verify_coloring(g, r)
    if sp is None or sr is None:
        raise HypothesisNotMetError("both colorings must be perfect")
    vp = eigenvalues(sp, tol)
    vr = eigenvalues(sr, tol)
    shared = [complex(a) for a in vp if any(abs(a - b) <= radius for b in vr)]
    if not (len(shared) >= 1 and all(abs(a - deg) <= radius for a in shared)):
        raise HypothesisNotMetError(
            "parameter spectra share an eigenvalue other than the degree")
    n = g.n
    for i in range(p.k):
        for j in range(r.k):
            dot = sum(x * y for x, y in zip(p.indicator.col(i), r.indicator.col(j)))
            if Fraction(dot) != Fraction(p.class_sizes[i] * r.class_sizes[j], n):
                return False
    return True


# -- exhaustive census ------------------------------------------------

@dataclass(frozen=True)
class CensusResult:
    results: tuple           # ((Coloring, Matrix), ...) in deterministic order
    complete: bool           # False when the budget was exhausted
    evaluated: int           # number of search nodes expanded


def canonical_colors(colors) -> tuple:
    """Lexicographically minimal color string over all color renamings: colors
    relabeled in order of first appearance."""
    mapping: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in mapping:
            mapping[c] = len(mapping) + 1
        out.append(mapping[c])
    return tuple(out)


def census(g: Graph, k: int, budget: int = 10 ** 8) -> CensusResult:
    """All perfect k-colorings of g up to color renaming, with parameters.

    Backtracking over vertices in index order; a branch dies as soon as some
    fully-colored vertex disagrees with an established same-colored vertex.
    Canonical representatives use colors in order of first appearance, which
    also breaks the renaming symmetry during the search.
    """
    n = g.n
    if k < 1 or k > n:
        return CensusResult((), True, 0)
    data = g.adjacency.data
    neighbors = [[w for w in range(n) if data[v][w] != 0] for v in range(n)]
    # a vertex's neighbor counts are final once it and all its neighbors are colored
    final_step = [max([v] + neighbors[v]) for v in range(n)]
    finalized_at = [[v for v in range(n) if final_step[v] == i] for i in range(n)]

    colors = [0] * n
    found: list[tuple] = []
    evaluated = 0
    aborted = False

    def counts_of(v):
        cnt = [Fraction(0)] * k
        for w in neighbors[v]:
            cnt[colors[w] - 1] += data[v][w]
        return cnt

    def finalized_consistent(i) -> bool:
        for v in finalized_at[i]:
            cnt = counts_of(v)
            for w in range(n):
                if w != v and colors[v] == colors[w] and final_step[w] <= i:
                    if counts_of(w) != cnt:
                        return False
        return True

    def extend(i, used):
        nonlocal evaluated, aborted
        if aborted:
            return
        if i == n:
            if used == k:
                found.append(tuple(colors))
            return
        if k - used > n - i:
            return  # not enough vertices left to reach surjectivity
        for c in range(1, min(used + 1, k) + 1):
            evaluated += 1
            if evaluated > budget:
                aborted = True
                return
            colors[i] = c
            if finalized_consistent(i):
                extend(i + 1, max(used, c))
            colors[i] = 0

    extend(0, 0)

    results = []
    for cols in sorted(set(canonical_colors(c) for c in found)):
        coloring = Coloring.from_colors(cols)
        s = verify_coloring(g, coloring)
        assert s is not None
        results.append((coloring, s))
    return CensusResult(tuple(results), not aborted, evaluated)
