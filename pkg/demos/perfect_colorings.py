"""Perfect colorings from the ground up.

Verifies a coloring of the 6-cycle, exhibits a covering of the triangle,
runs the exhaustive census on a few small graphs, and checks the exact
orthogonality of two colorings of the square.
"""

from perfstruct import (
    Coloring,
    census,
    check_covering,
    make_family,
    orthogonality_check,
    verify_coloring,
)


def print_matrix(title, m):
    print(f"{title}:")
    for row in m.data:
        print("    " + "  ".join(str(x) for x in row))


def main():
    c6 = make_family("cycle", 6)
    alternating = Coloring.from_colors([1, 2, 1, 2, 1, 2])
    s = verify_coloring(c6, alternating)
    print("alternating coloring of C_6 is perfect")
    print_matrix("parameter matrix", s)
    print()

    print("C_6 covers the triangle via vertex labels 1 2 3 1 2 3:",
          check_covering(c6, make_family("cycle", 3), [1, 2, 3, 1, 2, 3]))
    print()

    for fam, k in [(("cycle", 4), 2), (("prism", 3), 2), (("hamming", 3, 2), 2)]:
        g = make_family(*fam)
        res = census(g, k)
        label = " ".join(str(x) for x in fam)
        print(f"census of {label} with {k} colors: "
              f"{len(res.results)} coloring class(es)")
        seen = set()
        for coloring, params in res.results:
            key = tuple(map(tuple, params.data))
            if key in seen:
                continue
            seen.add(key)
            print("  representative " + "".join(str(c) for c in coloring.colors))
            print_matrix("  parameters", params)
        print()

    c4 = make_family("cycle", 4)
    p = Coloring.from_colors([1, 2, 1, 2])
    r = Coloring.from_colors([1, 1, 2, 2])
    print("alternating and sided colorings of C_4 are orthogonal:",
          orthogonality_check(c4, p, r))


if __name__ == "__main__":
    main()
