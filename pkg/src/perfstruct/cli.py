"""Command-line front end.

Exit codes are a stable contract: 0 success, 1 negative mathematical answer,
2 input error, 3 resource limit.  ``PERFSTRUCT_TOL`` overrides the default
tolerance.  ``--json`` output is stable-key-ordered.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import files
from .colorings import Coloring, FractionalColoring, census, verify_coloring, verify_fractional
from .contraction import contract_named
from .errors import (
    ExcludedEigenvalueError,
    HypothesisNotMetError,
    PerfstructError,
)
from .graphs import (
    Graph,
    closed_form_spectrum,
    is_regular,
    make_family,
    numeric_spectrum,
)
from .matrix import DEFAULT_TOL, Matrix, eig, eigenvalues, multiset_discrepancy, rank
from .products import (
    NAMED_SPECS,
    ProductSpec,
    build_product,
    identity_eigensystem,
    product_spectrum,
    unity_eigensystem,
)
from .structures import PerfectStructure, verify

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

_FAMILY_ARITY = {
    "complete": 1, "matching": 1, "complete_bipartite": 1,
    "complete_multipartite": 2, "hamming": 2, "path": 1, "cycle": 1,
    "grid": 2, "torus": 2, "prism": 1, "ladder": 1,
}
_SHORTHAND = {"k": "complete", "c": "cycle", "p": "path", "m": "matching"}


def _tol() -> float:
    env = os.environ.get("PERFSTRUCT_TOL")
    return float(env) if env else DEFAULT_TOL


def resolve_graph_tokens(tokens: list[str]) -> tuple[Graph, int]:
    """Resolve tokens to a graph.  Accepts inline families ('hamming 3 2',
    'cycle 6'), shorthand ('k4', 'c6', 'p5', 'm3'), or a file path.  Returns
    the graph and the number of tokens consumed."""
    head = tokens[0]
    if head in _FAMILY_ARITY:
        arity = _FAMILY_ARITY[head]
        params = [int(t) for t in tokens[1:1 + arity]]
        if len(params) != arity:
            raise files.ParseError(f"family {head!r} needs {arity} parameter(s)")
        return make_family(head, *params), 1 + arity
    if len(head) >= 2 and head[0] in _SHORTHAND and head[1:].isdigit():
        return make_family(_SHORTHAND[head[0]], int(head[1:])), 1
    if os.path.exists(head):
        return files.load_graph(head), 1
    raise files.ParseError(f"not a family name or readable file: {head!r}")


def _matrix_json(m: Matrix):
    return [[files.format_scalar(x) for x in row] for row in m.data]


def _spectrum_pairs(spec):
    return [(complex(v), int(mult)) for v, mult in spec.entries]


def _format_value(z: complex) -> str:
    z = complex(z)
    if abs(z.imag) < 1e-12:
        r = z.real
        return str(int(round(r))) if abs(r - round(r)) < 1e-9 else f"{r:.9g}"
    return f"{z.real:.9g}{z.imag:+.9g}i"


def _print_spectrum(pairs):
    for v, mult in pairs:
        print(f"  {_format_value(v)}  multiplicity {mult}")


# -- subcommands ------------------------------------------------------

def cmd_verify(args) -> int:
    tol = _tol()
    graph, _ = resolve_graph_tokens([args.graph])
    obj = files.load_coloring(args.coloring)
    if isinstance(obj, Coloring):
        if obj.n != graph.n:
            raise files.ParseError("coloring length does not match the graph order")
        s = verify_coloring(graph, obj)
        nonsingular = True
    else:
        s = verify_fractional(graph, obj, tol)
        nonsingular = s is not None and rank(obj.weights, tol) == obj.weights.cols
    if s is None:
        report = {"verified": False}
        if args.json:
            print(json.dumps(report, sort_keys=True))
        else:
            print("not a perfect coloring")
        return EXIT_NEGATIVE
    canon = sorted(eigenvalues(s, tol), key=lambda z: (z.real, z.imag))
    report = {
        "verified": True,
        "nonsingular": nonsingular,
        "parameters": _matrix_json(s),
        "canonical_eigenvalues": [_format_value(v) for v in canon],
    }
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print("verified: perfect coloring")
        print(f"nonsingular: {'yes' if nonsingular else 'no'}")
        print("parameter matrix:")
        for row in report["parameters"]:
            print("  " + " ".join(row))
        print("canonical eigenvalues: " + ", ".join(report["canonical_eigenvalues"]))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    tol = _tol()
    graph, used = resolve_graph_tokens(args.graph)
    if used != len(args.graph):
        raise files.ParseError(f"unused trailing arguments: {args.graph[used:]}")
    mode = args.mode
    closed = numeric = None
    if mode in ("closed-form", "both"):
        if graph.family is None:
            raise files.ParseError("no closed form known for this input")
        closed = closed_form_spectrum(graph)
    if mode in ("numeric", "both"):
        numeric = numeric_spectrum(graph, tol)
    report = {}
    if closed is not None:
        report["closed_form"] = [[_format_value(v), m] for v, m in _spectrum_pairs(closed)]
    if numeric is not None:
        report["numeric"] = [[_format_value(v), m] for v, m in _spectrum_pairs(numeric)]
    if closed is not None and numeric is not None:
        report["discrepancy"] = multiset_discrepancy(closed.values(), numeric.values())
    if args.json:
        print(json.dumps(report, sort_keys=True, default=str))
    else:
        if closed is not None:
            print("closed-form spectrum:")
            _print_spectrum(_spectrum_pairs(closed))
        if numeric is not None:
            print("numeric spectrum:")
            _print_spectrum(_spectrum_pairs(numeric))
        if "discrepancy" in report:
            print(f"max multiset discrepancy: {report['discrepancy']:.3e}")
    return EXIT_OK


def _consolidated_spectrum(kind: str, spec: ProductSpec, left: Matrix,
                           right: Matrix, tol: float):
    el = eig(left, tol)
    er = eig(right, tol)
    if kind == "tensor":
        return product_spectrum(spec, [el], [er], tol)
    if kind == "cartesian":
        return product_spectrum(spec, [el, identity_eigensystem(el)],
                                [identity_eigensystem(er), er], tol)
    if kind == "normal":
        return product_spectrum(spec, [el, identity_eigensystem(el)],
                                [identity_eigensystem(er), er], tol)
    if kind == "lexicographic":
        return product_spectrum(spec, [el, identity_eigensystem(el)],
                                [unity_eigensystem(er, tol), er], tol)
    return None


def cmd_product(args) -> int:
    tol = _tol()
    tokens = list(args.factors)
    left, used = resolve_graph_tokens(tokens)
    right, used2 = resolve_graph_tokens(tokens[used:])
    if used + used2 != len(tokens):
        raise files.ParseError(f"unused trailing arguments: {tokens[used + used2:]}")
    kind = {"lex": "lexicographic"}.get(args.kind, args.kind)
    if kind == "general":
        if not args.coeffs:
            raise files.ParseError("the general product needs --coeffs FILE")
        with open(args.coeffs, encoding="utf-8") as fh:
            grid = files.parse_coefficients_text(fh.read())
        if len(grid) != 1 or len(grid[0]) != 1:
            raise files.ParseError(
                "general products over two plain graphs take a 1x1 grid; build "
                "multi-factor specs through the library API")
        spec = ProductSpec((left.adjacency,), (right.adjacency,), grid)
    else:
        spec = NAMED_SPECS[kind](left.adjacency, right.adjacency)
    product = Graph(build_product(spec))

    out_path = args.output or "product.graph"
    files.save_graph(product, out_path)
    print(f"wrote product graph ({product.n} vertices) to {out_path}")

    code = EXIT_OK
    if args.left_coloring or args.right_coloring:
        if not (args.left_coloring and args.right_coloring):
            raise files.ParseError("both factor colorings are required")
        from .colorings import product_coloring
        cl = files.load_coloring(args.left_coloring)
        cr = files.load_coloring(args.right_coloring)
        if not isinstance(cl, Coloring) or not isinstance(cr, Coloring):
            raise files.ParseError("product colorings must be integer colorings")
        if kind == "general":
            raise files.ParseError("colorings are supported for named products only")
        _, pc, params = product_coloring(kind, (left, cl), (right, cr))
        cpath = out_path + ".coloring"
        with open(cpath, "w", encoding="utf-8") as fh:
            fh.write(files.dump_coloring(pc))
        print(f"wrote product coloring to {cpath}")
        print("parameter matrix:")
        for row in _matrix_json(params):
            print("  " + " ".join(row))
    try:
        spectrum = _consolidated_spectrum(kind, spec, left.adjacency,
                                          right.adjacency, tol)
    except HypothesisNotMetError:
        spectrum = None
    if spectrum is not None:
        print("product spectrum:")
        _print_spectrum(_spectrum_pairs(spectrum))
    return code


def cmd_contract(args) -> int:
    tol = _tol()
    product_graph, _ = resolve_graph_tokens([args.product_graph])
    right, _ = resolve_graph_tokens([args.right])
    h = np.array(files.load_vector(args.h), dtype=np.complex128)
    g = np.array(files.load_vector(args.g), dtype=np.complex128)
    kind = {"lex": "lexicographic"}.get(args.kind, args.kind)

    nmat = product_graph.adjacency.to_complex().data
    nh = nmat @ h
    denom = np.vdot(h, h)
    if abs(denom) == 0:
        raise files.ParseError("h must be nonzero")
    nu = complex(np.vdot(h, nh) / denom)
    if np.max(np.abs(nh - nu * h)) > max(tol, 1e-8) * max(1.0, float(np.max(np.abs(nmat)))):
        raise files.ParseError("h is not an eigenvector of the product graph")
    lmat = right.adjacency.to_complex().data
    lg = lmat @ g
    lam = complex(np.vdot(g, lg) / np.vdot(g, g))
    if np.max(np.abs(lg - lam * g)) > max(tol, 1e-8) * max(1.0, float(np.max(np.abs(lmat)))):
        raise files.ParseError("g is not an eigenvector of the right factor")

    left_matrix = None
    if args.left:
        left_graph, _ = resolve_graph_tokens([args.left])
        left_matrix = left_graph.adjacency

    f, mu = contract_named(kind, (h, nu), (g, lam), right, tol,
                           left_matrix=left_matrix)
    if float(np.linalg.norm(f)) <= tol:
        print("status: zero contraction")
        return EXIT_OK
    print("f = " + " ".join(_format_value(x) for x in f))
    print(f"mu = {_format_value(mu)}")
    if left_matrix is not None:
        a = left_matrix.to_complex().data
        resid = float(np.max(np.abs(a @ f - mu * f)))
        print(f"eigen-residual of f: {resid:.3e}")
    else:
        print("eigen-residual of f: unavailable (no --left factor given)")
    return EXIT_OK


def cmd_census(args) -> int:
    tokens = list(args.graph)
    graph, used = resolve_graph_tokens(tokens)
    rest = tokens[used:]
    if len(rest) != 1:
        raise files.ParseError("census needs exactly one trailing color count k")
    k = int(rest[0])
    result = census(graph, k, budget=args.budget)
    # group coloring classes by parameter matrix
    groups: dict[tuple, dict] = {}
    for c, s in result.results:
        key = tuple(tuple(row) for row in _matrix_json(s))
        entry = groups.setdefault(key, {"parameters": _matrix_json(s),
                                        "representative": list(c.colors),
                                        "count": 0})
        entry["count"] += 1
    report = {
        "complete": result.complete,
        "coloring_classes": len(result.results),
        "parameter_matrices": list(groups.values()),
    }
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"{len(groups)} parameter matrix(es), "
              f"{len(result.results)} perfect {k}-coloring class(es)")
        for entry in groups.values():
            print("parameters:")
            for row in entry["parameters"]:
                print("  " + " ".join(row))
            print("  representative coloring: "
                  + " ".join(str(x) for x in entry["representative"])
                  + f"  ({entry['count']} class(es))")
    if not result.complete:
        print("warning: search budget exceeded; results are partial", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perfstruct",
        description="Perfect structures: verification, spectra, products, "
                    "contraction, and coloring census.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a (fractional) coloring of a graph")
    p.add_argument("graph", help="graph file or inline family (k4, cycle 6 as 'c6')")
    p.add_argument("coloring", help="coloring or fractional-coloring file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", help="closed-form and/or numeric spectrum")
    p.add_argument("graph", nargs="+", help="family with parameters, or a file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--closed-form", dest="mode", action="store_const",
                       const="closed-form")
    group.add_argument("--numeric", dest="mode", action="store_const",
                       const="numeric")
    group.add_argument("--both", dest="mode", action="store_const", const="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spectrum, mode="both")

    p = sub.add_parser("product", help="build a graph product (and coloring)")
    p.add_argument("kind", choices=["tensor", "cartesian", "normal", "lex",
                                    "lexicographic", "general"])
    p.add_argument("factors", nargs="+", help="two graphs (files or families)")
    p.add_argument("--left-coloring")
    p.add_argument("--right-coloring")
    p.add_argument("--coeffs", help="coefficient grid file for 'general'")
    p.add_argument("-o", "--output", help="output graph file (default product.graph)")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("contract", help="contract a product eigenfunction")
    p.add_argument("product_graph", help="product graph file or family")
    p.add_argument("h", help="eigenvector file on the product")
    p.add_argument("g", help="eigenvector file on the right factor")
    p.add_argument("kind", choices=["tensor", "cartesian", "normal", "lex",
                                    "lexicographic"])
    p.add_argument("--right", required=True, help="right factor graph")
    p.add_argument("--left", help="left factor graph (enables the residual check)")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("census", help="enumerate all perfect k-colorings")
    p.add_argument("graph", nargs="+", help="graph (file or family) followed by k")
    p.add_argument("--budget", type=int, default=10 ** 8)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (files.ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ExcludedEigenvalueError as exc:
        print(f"error: excluded eigenvalue: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PerfstructError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
