"""Graphs, named families, and the closed-form spectra of the classic ones.

Family-tagged graphs regenerate their adjacency bit-exact from the tag, and
product-defined families (Hamming, grid, torus, prism, ladder, doubles) are
assembled through the generalized product machinery so that the inductive
spectrum arguments hold literally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimensionError, HypothesisNotMetError
from .matrix import (
    CLUSTER_RADIUS,
    DEFAULT_TOL,
    EXACT,
    Matrix,
    cluster_values,
    eigenvalues,
)


@dataclass(frozen=True)
class Spectrum:
    """Multiset of eigenvalues as (value, multiplicity) pairs.

    ``labels``, when present, records the generating indices of each raw
    value (e.g. the (i, j) of a torus eigenvalue) for reproducibility.
    """

    entries: tuple          # ((complex, int), ...) distinct under clustering
    labels: tuple = ()      # ((complex, label), ...) raw generator list

    @staticmethod
    def from_values(values, radius: float = CLUSTER_RADIUS,
                    labels=()) -> "Spectrum":
        return Spectrum(entries=tuple(cluster_values(values, radius)),
                        labels=tuple(labels))

    def values(self) -> list[complex]:
        """The full multiset, expanded with multiplicities."""
        out = []
        for value, mult in self.entries:
            out.extend([complex(value)] * mult)
        return out

    @property
    def size(self) -> int:
        return sum(mult for _, mult in self.entries)


@dataclass(frozen=True)
class Graph:
    adjacency: Matrix
    family: tuple | None = None   # e.g. ("cycle", 5) or ("double", ("cycle", 5))
    directed: bool = False

    @property
    def n(self) -> int:
        return self.adjacency.rows

    def __post_init__(self):
        if not self.adjacency.is_square():
            raise DimensionError("adjacency matrix must be square")


def from_edges(n: int, edges, directed: bool = False) -> Graph:
    m = [[Fraction(0)] * n for _ in range(n)]
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise DimensionError(f"bad edge ({u}, {v}) for {n} vertices")
        m[u - 1][v - 1] += 1
        if not directed:
            m[v - 1][u - 1] += 1
    return Graph(Matrix.exact(m), directed=directed)


# -- family constructors ----------------------------------------------

def _complete_adjacency(n: int) -> Matrix:
    return Matrix.ones(n, n) - Matrix.identity(n)


def _path_adjacency(n: int) -> Matrix:
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1):
        m[i][i + 1] = m[i + 1][i] = Fraction(1)
    return Matrix.exact(m)


def _cycle_adjacency(n: int) -> Matrix:
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        j = (i + 1) % n
        m[i][j] += 1
        m[j][i] += 1
    return Matrix.exact(m)


def _cartesian(a: Matrix, b: Matrix) -> Matrix:
    from .products import build_product, cartesian_spec
    return build_product(cartesian_spec(a, b))


def _tensor(a: Matrix, b: Matrix) -> Matrix:
    from .products import build_product, tensor_spec
    return build_product(tensor_spec(a, b))


_ARITY = {
    "complete": 1, "matching": 1, "complete_bipartite": 1,
    "complete_multipartite": 2, "hamming": 2, "path": 1, "cycle": 1,
    "grid": 2, "torus": 2, "prism": 1, "ladder": 1,
    "double": 1, "bipartite_double": 1,
}


def make_family(name: str, *params) -> Graph:
    """Construct a named family member; the tag regenerates it bit-exact."""
    if name not in _ARITY:
        raise ValueError(f"unknown graph family {name!r}")
    if name in ("double", "bipartite_double"):
        (base,) = params
        base_graph = base if isinstance(base, Graph) else make_family(*base)
        return double_graph(base_graph) if name == "double" else bipartite_double(base_graph)

    params = tuple(int(p) for p in params)
    if len(params) != _ARITY[name] or any(p < 1 for p in params):
        raise ValueError(f"invalid parameters {params} for family {name!r}")

    if name == "complete":
        (n,) = params
        adj = _complete_adjacency(n)
    elif name == "matching":
        (n,) = params  # n disjoint edges, 2n vertices
        adj = _tensor(Matrix.identity(n), _complete_adjacency(2))
    elif name == "complete_bipartite":
        (n,) = params  # K_{n,n}: tensor of the single edge with the J-graph
        adj = _tensor(_complete_adjacency(2), Matrix.ones(n, n))
    elif name == "complete_multipartite":
        k, n = params
        adj = _tensor(_complete_adjacency(k), Matrix.ones(n, n))
    elif name == "hamming":
        n, q = params
        adj = _complete_adjacency(q)
        for _ in range(n - 1):
            adj = _cartesian(_complete_adjacency(q), adj)
    elif name == "path":
        (n,) = params
        adj = _path_adjacency(n)
    elif name == "cycle":
        (n,) = params
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        adj = _cycle_adjacency(n)
    elif name == "grid":
        m, n = params
        adj = _cartesian(_path_adjacency(m), _path_adjacency(n))
    elif name == "torus":
        m, n = params
        if m < 3 or n < 3:
            raise ValueError("a torus needs cycles of length >= 3")
        adj = _cartesian(_cycle_adjacency(m), _cycle_adjacency(n))
    elif name == "prism":
        (n,) = params
        if n < 3:
            raise ValueError("a prism needs a cycle of length >= 3")
        adj = _cartesian(_cycle_adjacency(n), _complete_adjacency(2))
    elif name == "ladder":
        (n,) = params
        adj = _cartesian(_path_adjacency(n), _complete_adjacency(2))
    else:  # pragma: no cover
        raise AssertionError(name)
    return Graph(adj, family=(name, *params))


def double_graph(g: Graph) -> Graph:
    """Two copies of G plus all cross edges along edges of G: G x J_2."""
    adj = _tensor(g.adjacency, Matrix.ones(2, 2))
    tag = ("double", g.family) if g.family else None
    return Graph(adj, family=tag)


def bipartite_double(g: Graph) -> Graph:
    """Tensor product of G with the single-edge graph."""
    adj = _tensor(g.adjacency, _complete_adjacency(2))
    tag = ("bipartite_double", g.family) if g.family else None
    return Graph(adj, family=tag)


# -- closed-form spectra ----------------------------------------------

def closed_form_spectrum(g: Graph) -> Spectrum:
    """Closed-form spectrum for family-tagged graphs; exact where rational."""
    if g.family is None:
        raise ValueError("graph carries no family tag; use a numeric spectrum")
    name, *params = g.family

    if name == "complete":
        (n,) = params
        entries = [(-1 + 0j, n - 1), (n - 1 + 0j, 1)] if n > 1 else [(0j, 1)]
        return Spectrum(tuple(entries))
    if name == "matching":
        (n,) = params
        return Spectrum((((-1 + 0j), n), ((1 + 0j), n)))
    if name == "complete_bipartite":
        (n,) = params
        entries = [(complex(-n), 1)]
        if n > 1:
            entries.append((0j, 2 * n - 2))
        entries.append((complex(n), 1))
        return Spectrum(tuple(entries))
    if name == "complete_multipartite":
        k, n = params
        raw = [complex(-n)] * (k - 1) + [0j] * (k * (n - 1)) + [complex(n * (k - 1))]
        return Spectrum.from_values(raw)
    if name == "hamming":
        n, q = params
        entries = [(complex(n * (q - 1) - q * i), math.comb(n, i) * (q - 1) ** i)
                   for i in range(n, -1, -1)]
        return Spectrum(tuple(entries))
    if name == "path":
        (n,) = params
        raw = [(2 * math.cos(math.pi * i / (n + 1)), i) for i in range(1, n + 1)]
        return Spectrum.from_values([v for v, _ in raw],
                                    labels=[(complex(v), i) for v, i in raw])
    if name == "cycle":
        (n,) = params
        raw = [(2 * math.cos(2 * math.pi * i / n), i) for i in range(1, n + 1)]
        return Spectrum.from_values([v for v, _ in raw],
                                    labels=[(complex(v), i) for v, i in raw])
    if name == "grid":
        m, n = params
        raw = [(2 * math.cos(math.pi * i / (m + 1)) + 2 * math.cos(math.pi * j / (n + 1)),
                (i, j)) for i in range(1, m + 1) for j in range(1, n + 1)]
        return Spectrum.from_values([v for v, _ in raw],
                                    labels=[(complex(v), ij) for v, ij in raw])
    if name == "torus":
        m, n = params
        raw = [(2 * math.cos(2 * math.pi * i / m) + 2 * math.cos(2 * math.pi * j / n),
                (i, j)) for i in range(1, m + 1) for j in range(1, n + 1)]
        return Spectrum.from_values([v for v, _ in raw],
                                    labels=[(complex(v), ij) for v, ij in raw])
    if name == "prism":
        (n,) = params
        raw = [(2 * math.cos(2 * math.pi * i / n) + s, (i, s))
               for i in range(1, n + 1) for s in (-1, 1)]
        return Spectrum.from_values([v for v, _ in raw],
                                    labels=[(complex(v), lab) for v, lab in raw])
    if name == "ladder":
        (n,) = params
        raw = [(2 * math.cos(math.pi * i / (n + 1)) + s, (i, s))
               for i in range(1, n + 1) for s in (-1, 1)]
        return Spectrum.from_values([v for v, _ in raw],
                                    labels=[(complex(v), lab) for v, lab in raw])
    if name == "double":
        base = _base_spectrum(params[0])
        raw = [0j] * (sum(m for _, m in base.entries)) + \
              [2 * v for v in base.values()]
        return Spectrum.from_values(raw)
    if name == "bipartite_double":
        base = _base_spectrum(params[0])
        vals = base.values()
        return Spectrum.from_values(vals + [-v for v in vals])
    raise ValueError(f"no closed-form spectrum known for family {name!r}")


def _base_spectrum(tag) -> Spectrum:
    return closed_form_spectrum(make_family(*tag))


# -- structural predicates --------------------------------------------

def is_regular(g: Graph) -> int | None:
    """Degree of a regular graph (symmetric, equal row sums), else None."""
    a = g.adjacency
    if a.T != a:
        return None
    sums = a.data.sum(axis=1)
    if np.all(sums == sums[0]):
        deg = sums[0]
        return int(deg) if a.domain == EXACT else deg
    return None


def is_connected(g: Graph) -> bool:
    n = g.n
    seen = [False] * n
    stack = [0]
    seen[0] = True
    data = g.adjacency.data
    while stack:
        v = stack.pop()
        for w in range(n):
            if not seen[w] and (data[v][w] != 0 or data[w][v] != 0):
                seen[w] = True
                stack.append(w)
    return all(seen)


def complement_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    """sp(J - M - I) from sp(G) for a connected regular graph:
    one copy of the degree r becomes n - r - 1, all others map to -λ - 1."""
    r = is_regular(g)
    if r is None:
        raise HypothesisNotMetError("complement spectrum needs a regular graph")
    if not is_connected(g):
        raise HypothesisNotMetError("complement spectrum needs a connected graph")
    if g.family is not None:
        vals = closed_form_spectrum(g).values()
    else:
        vals = list(eigenvalues(g.adjacency, tol))
    # drop the single copy of the degree eigenvalue
    idx = min(range(len(vals)), key=lambda i: abs(vals[i] - r))
    vals.pop(idx)
    out = [-v - 1 for v in vals] + [complex(g.n - r - 1)]
    return Spectrum.from_values(out)


def numeric_spectrum(g: Graph, tol: float = DEFAULT_TOL,
                     radius: float = CLUSTER_RADIUS) -> Spectrum:
    return Spectrum.from_values(eigenvalues(g.adjacency, tol), radius)
