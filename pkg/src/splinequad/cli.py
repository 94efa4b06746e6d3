"""Command-line surface: knot generation, rule construction, verification,
and Peano-kernel data emission.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 domain/validation error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import knots as knotmod
from . import peano
from . import rule as rulemod
from .knots import KnotError, KnotSequence, InvalidRatio, validate
from .oracle import random_spline, reference_integral
from .rule import QuadratureRule, apply, compute_rule

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INVALID = 3

DEFAULT_SEED = 20140901


class UsageError(Exception):
    pass


def _add_knot_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True,
                   choices=["uniform", "geometric", "chebyshev", "legendre", "file"])
    p.add_argument("--N", type=int, help="number of internal knots")
    p.add_argument("--n", type=int, help="number of intervals (uniform)")
    p.add_argument("--q", type=float, help="geometric stretching ratio")
    p.add_argument("--domain", type=float, nargs=2, default=[0.0, 1.0],
                   metavar=("A", "B"))
    p.add_argument("--knots-file", help="knot file for --family file; '-' for stdin")


def _read_knot_file(path: str) -> KnotSequence:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        obj = json.loads(text)
        if isinstance(obj, dict):
            return validate(obj["knots"], obj["a"], obj["b"])
        values = [float(v) for v in obj]
    except (json.JSONDecodeError, KeyError, TypeError):
        values = [float(v) for v in text.replace(",", " ").split()]
    if len(values) < 2:
        raise KnotError("knot file holds fewer than two values")
    return validate(values, values[0], values[-1])


def _build_knots(args) -> KnotSequence:
    a, b = args.domain
    fam = args.family
    if fam == "file":
        if not args.knots_file:
            raise UsageError("--family file requires --knots-file")
        return _read_knot_file(args.knots_file)
    if fam == "uniform":
        n = args.n if args.n is not None else (args.N + 1 if args.N is not None else None)
        if n is None:
            raise UsageError("uniform family needs --n or --N")
        return knotmod.gen_uniform(n, a, b)
    if args.N is None:
        raise UsageError(f"{fam} family needs --N")
    if fam == "geometric":
        if args.q is None:
            raise UsageError("geometric family needs --q")
        return knotmod.gen_geometric(args.N, args.q, a, b)
    if fam == "chebyshev":
        return knotmod.gen_chebyshev(args.N, a, b)
    return knotmod.gen_legendre(args.N, a, b)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _normalized(rule: QuadratureRule) -> QuadratureRule:
    a, b = rule.a, rule.b
    width = b - a
    ks = validate([(x - a) / width for x in rule.knots.knots], 0.0, 1.0)
    return QuadratureRule(
        knots=ks,
        nodes=tuple((t - a) / width for t in rule.nodes),
        weights=tuple(w / width for w in rule.weights),
    )


def _cmd_gen_knots(args) -> int:
    ks = _build_knots(args)
    if args.format == "json":
        _emit(ks.to_json(), args.output)
    elif args.format == "csv":
        rows = ["k,x"] + [f"{k},{x:.17g}" for k, x in enumerate(ks.knots)]
        _emit("\n".join(rows) + "\n", args.output)
    else:
        _emit(" ".join(f"{x:.17g}" for x in ks.knots), args.output)
    return EXIT_OK


def _cmd_rule(args) -> int:
    ks = _build_knots(args)
    r = compute_rule(ks)
    if args.normalize:
        r = _normalized(r)
    if args.format == "json":
        _emit(r.to_json(), args.output)
    elif args.format == "csv":
        _emit(r.to_csv(), args.output)
    else:
        half = (len(r.nodes) + 1) // 2
        rows = ["i tau omega"]
        rows += [f"{i + 1} {r.nodes[i]:.6f} {r.weights[i]:.6f}" for i in range(half)]
        _emit("\n".join(rows) + "\n", args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    ks = _build_knots(args)
    r = compute_rule(ks)
    if args.perturb:
        weights = (r.weights[0] + args.perturb,) + r.weights[1:]
        r = QuadratureRule(knots=ks, nodes=r.nodes, weights=weights)
    checks: dict[str, bool] = {}
    details: dict[str, object] = {}

    worst = 0.0
    from .basis import exact_integral
    for trial in range(args.trials):
        s = random_spline(ks, args.seed + trial)
        exact = exact_integral(s)
        got = apply(r, s)
        resid = abs(got - exact) / (1.0 + abs(exact))
        worst = max(worst, resid)
    checks["exactness"] = worst <= 1e-12
    details["exactness_worst_residual"] = worst

    loc = rulemod.node_location_report(r)
    checks["node_locations"] = bool(loc["matches"])
    details["node_locations"] = loc

    checks["weight_positivity"] = min(r.weights) > 0.0

    scan = peano.kernel_sign_scan(r, samples_per_segment=max(8, args.grid // max(1, 2 * ks.n)))
    checks["kernel_sign"] = scan.nonnegative and scan.zeros_at_knots_only
    details["kernel_min"] = scan.min_value

    const = peano.constant_closed_form(r)
    diff = abs(const.numeric - const.quartic_oracle)
    # Both routes cancel O(width^5) terms, so a rule with a tiny constant
    # bottoms out at an absolute rounding floor independent of the constant.
    width = ks.b - ks.a
    tol = max(1e-12 * abs(const.quartic_oracle), 5e-17 * width ** 5)
    checks["error_constant"] = diff <= tol and const.numeric > 0.0
    details["error_constant"] = {
        "numeric": const.numeric,
        "quartic_oracle": const.quartic_oracle,
        "closed_form": const.closed_form,
        "closed_form_all_intervals": const.closed_form_all_intervals,
        "closed_form_matching": const.matching,
    }

    details["weight_monotonicity"] = rulemod.weight_monotonicity_report(r)

    passed = all(checks.values())
    report = {"passed": passed, "checks": checks, "details": details,
              "failures": [k for k, ok in checks.items() if not ok]}
    _emit(json.dumps(report, indent=2), args.output)
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def _parse_sweep(spec: str) -> list[float]:
    try:
        lo, hi, st = (float(v) for v in spec.split(":"))
    except ValueError:
        raise UsageError(f"bad sweep spec {spec!r}; expected start:stop:step")
    if st <= 0 or hi < lo:
        raise UsageError(f"bad sweep spec {spec!r}")
    count = int(math.floor((hi - lo) / st + 1e-9)) + 1
    return [lo + i * st for i in range(count)]


def _cmd_kernel(args) -> int:
    if args.grid < 2:
        raise UsageError("need --grid >= 2")
    if args.q_sweep:
        if args.family != "geometric":
            raise UsageError("--q-sweep needs --family geometric")
        outdir = Path(args.output) if args.output else Path(".")
        outdir.mkdir(parents=True, exist_ok=True)
        summary = ["q,constant_numeric"]
        for q in _parse_sweep(args.q_sweep):
            ks = knotmod.gen_geometric(args.N, q, *args.domain)
            r = compute_rule(ks)
            (outdir / f"kernel_q{q:g}.csv").write_text(peano.kernel_csv(r, args.grid))
            summary.append(f"{q:g},{peano.constant_numeric(r):.17g}")
        sys.stdout.write("\n".join(summary) + "\n")
        return EXIT_OK
    ks = _build_knots(args)
    r = compute_rule(ks)
    _emit(peano.kernel_csv(r, args.grid), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="splinequad",
        description="Gaussian quadrature rules for C1 cubic splines over "
                    "symmetrically stretched knot sequences.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-knots", help="generate and print a knot sequence")
    _add_knot_source(p)
    p.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
    p.add_argument("--output")

    p = sub.add_parser("rule", help="construct the quadrature rule")
    _add_knot_source(p)
    p.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
    p.add_argument("--normalize", action="store_true",
                   help="map nodes/weights to the unit interval in output")
    p.add_argument("--output")

    p = sub.add_parser("verify", help="run exactness and structure checks")
    _add_knot_source(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--perturb", type=float, default=0.0,
                   help="add this to the first weight before checking")
    p.add_argument("--grid", type=int, default=2048)
    p.add_argument("--output")

    p = sub.add_parser("kernel", help="emit Peano kernel samples as CSV")
    _add_knot_source(p)
    p.add_argument("--grid", type=int, default=1000)
    p.add_argument("--q-sweep", help="start:stop:step sweep over geometric q")
    p.add_argument("--output")

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    env_seed = os.environ.get("SPLINE_GAUSS_SEED")
    if env_seed is not None and hasattr(args, "seed"):
        args.seed = int(env_seed)
    try:
        if args.command == "gen-knots":
            return _cmd_gen_knots(args)
        if args.command == "rule":
            return _cmd_rule(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_kernel(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (KnotError, InvalidRatio, knotmod.ConvergenceFailure,
            rulemod.DomainTooSmall, rulemod.RecursionBreakdown) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
