#!/usr/bin/env python3
"""Print the node/weight table for the three reference knot families.

For each N (internal knots) the Chebyshev, Legendre, and geometric (q=2)
sequences on [0, 1] are built and the first half of the symmetric rule is
printed at six decimals, matching the reference layout.
"""

import argparse

import splinequad as sq
from splinequad.rule import compute_rule


def half(rule):
    count = (len(rule.nodes) + 1) // 2
    return [(rule.nodes[i], rule.weights[i]) for i in range(count)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, nargs="+", default=[5, 6, 7, 8, 9],
                    help="internal knot counts to tabulate")
    ap.add_argument("--q", type=float, default=2.0,
                    help="stretching ratio for the geometric column")
    args = ap.parse_args()

    for N in args.N:
        columns = {
            "Chebyshev": half(compute_rule(sq.gen_chebyshev(N, 0.0, 1.0))),
            "Legendre": half(compute_rule(sq.gen_legendre(N, 0.0, 1.0))),
            f"Geometric q={args.q:g}": half(
                compute_rule(sq.gen_geometric(N, args.q, 0.0, 1.0))),
        }
        print(f"\nN = {N}")
        header = "  i " + "".join(f"{name:>22}" for name in columns)
        print(header)
        print("    " + "".join(f"{'tau':>11}{'omega':>11}" for _ in columns))
        rows = max(len(v) for v in columns.values())
        for i in range(rows):
            cells = []
            for pairs in columns.values():
                if i < len(pairs):
                    tau, omega = pairs[i]
                    cells.append(f"{tau:11.6f}{omega:11.6f}")
                else:
                    cells.append(" " * 22)
            print(f"{i + 1:3d} " + "".join(cells))


if __name__ == "__main__":
    main()
