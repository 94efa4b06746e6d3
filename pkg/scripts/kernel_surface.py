#!/usr/bin/env python3
"""Emit Peano-kernel data over a sweep of geometric stretching ratios.

Writes one kernel CSV per ratio plus a summary CSV of the remainder
constants, suitable for plotting a (q, t, K) surface.
"""

import argparse
from pathlib import Path

import splinequad as sq
from splinequad import peano
from splinequad.rule import compute_rule


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=5, help="internal knots")
    ap.add_argument("--q-min", type=float, default=1.0)
    ap.add_argument("--q-max", type=float, default=3.0)
    ap.add_argument("--steps", type=int, default=21)
    ap.add_argument("--grid", type=int, default=500,
                    help="kernel samples per ratio")
    ap.add_argument("--outdir", default="kernel_surface")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    summary = ["q,constant_numeric"]
    for i in range(args.steps):
        q = args.q_min + (args.q_max - args.q_min) * i / max(1, args.steps - 1)
        rule = compute_rule(sq.gen_geometric(args.N, q, 0.0, 1.0))
        (outdir / f"kernel_q{q:.3f}.csv").write_text(
            peano.kernel_csv(rule, args.grid))
        summary.append(f"{q:.3f},{peano.constant_numeric(rule):.17g}")
    (outdir / "constants.csv").write_text("\n".join(summary) + "\n")
    print(f"wrote {args.steps} kernel files and constants.csv to {outdir}/")


if __name__ == "__main__":
    main()
