"""Command-line entry point.

Machine output goes to stdout as JSON (or CSV where requested); human
diagnostics go to stderr.  Exit codes: 0 success, 1 domain error,
2 usage error.  Coefficients are given highest degree first; put ``--``
before them when the first one is a negative fraction such as ``-1/2``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import specfun
from .exact_poly import Polynomial, discriminant
from .quadrature import QuadratureError, gaussian_check, integrate_power, predicted_cubic
from .real_roots import isolation_details, refine
from .symbolic_disc import DEFAULT_MAX_DEGREE, sym_discriminant
from .verify import SweepConfig, records_to_csv, run_cubic_sweep, run_exploration, to_jsonl


class DomainError(Exception):
    pass


def _poly(tokens: list[str]) -> Polynomial:
    try:
        coeffs = [Fraction(t) for t in tokens]
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad coefficient: {exc}") from exc
    try:
        return Polynomial(coeffs)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def cmd_disc(args) -> int:
    f = _poly(args.coeffs)
    if f.degree < 2:
        raise DomainError(f"discriminant needs degree >= 2, got {f.degree}")
    D = discriminant(f)
    _emit({"D": str(D), "sign": _sign(D)})
    return 0


def cmd_symdisc(args) -> int:
    try:
        p = sym_discriminant(args.n, max_degree=args.max_degree)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    if args.format == "json":
        sys.stdout.write(p.to_json() + "\n")
    else:
        sys.stdout.write(str(p) + "\n")
    print(f"{len(p)} monomials", file=sys.stderr)
    return 0


def cmd_roots(args) -> int:
    f = _poly(args.coeffs)
    if f.degree < 1:
        raise DomainError("roots needs degree >= 1")
    details = isolation_details(f)
    roots = []
    for iv, mult, factor in details:
        roots.append({
            "lo": str(iv.lo),
            "hi": str(iv.hi),
            "approx": refine(factor, iv, args.eps),
            "multiplicity": mult,
        })
    # repeated roots of any kind, matching isolate().multiplicity_flag
    flag = f.degree >= 2 and discriminant(f) == 0
    _emit({"roots": roots, "multiplicity_flag": flag})
    return 0


def cmd_integrate(args) -> int:
    f = _poly(args.coeffs)
    n = args.n if args.n is not None else f.degree
    if n != f.degree:
        raise DomainError(f"--n {n} does not match the polynomial degree {f.degree}")
    try:
        res = integrate_power(f, n, args.tol)
    except (QuadratureError, ValueError) as exc:
        raise DomainError(str(exc)) from exc
    D = discriminant(f)
    out = {
        "value": res.value,
        "error_estimate": res.abs_error_estimate,
        "pieces": res.pieces,
        "levels_used": res.levels_used,
        "discriminant": str(D),
    }
    if n == 3 and D != 0:
        out["predicted"] = predicted_cubic(D)
    _emit(out)
    return 0


def cmd_gaussian(args) -> int:
    try:
        numeric, closed = gaussian_check(args.a, args.b, args.c)
    except (QuadratureError, ValueError) as exc:
        raise DomainError(str(exc)) from exc
    _emit({"numeric": numeric, "closed_form": closed, "rel_error": abs(numeric - closed) / closed})
    return 0


def cmd_identity(args) -> int:
    cm, cp = specfun.constant_C_minus(), specfun.constant_C_plus()
    lhs = math.sqrt(3) * specfun.beta(1 / 3, 1 / 3)
    rhs = 2 ** (1 / 3) * specfun.beta(0.5, 1 / 6)
    b = specfun.beta(0.5, 0.5)
    _emit({
        "C_minus": cm,
        "C_plus": cp,
        "ratio": cp / cm,
        "beta_identity_residual": abs(lhs - rhs) / cm,
        "beta_half_half": b,
        "pi_rel_error": abs(b - math.pi) / math.pi,
    })
    return 0


def _config(args, n: int) -> SweepConfig:
    try:
        return SweepConfig(count=args.count, seed=args.seed, coeff_range=args.range, n=n, tol=args.tol)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def cmd_verify_cubic(args) -> int:
    records, summary = run_cubic_sweep(_config(args, 3))
    if args.format == "csv":
        sys.stdout.write(records_to_csv(records))
    else:
        sys.stdout.write(to_jsonl([r.to_dict() for r in records] + [summary]))
    worst = max((s["max"] for s in (summary["negative_D"], summary["positive_D"]) if s["max"] is not None), default=None)
    print(f"{summary['count']} trials, worst rel_error {worst}", file=sys.stderr)
    return 0


def cmd_explore(args) -> int:
    if args.n not in (4, 5):
        raise DomainError("explore runs for --n 4 or --n 5")
    records, orbits, summary = run_exploration(_config(args, args.n))
    if args.format == "csv":
        sys.stdout.write(records_to_csv(records))
    else:
        rows = [r.to_dict() for r in records] + [o.to_dict() for o in orbits] + [summary]
        sys.stdout.write(to_jsonl(rows))
    if not summary["orbits_passed"]:
        print("orbit invariance check failed", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="disq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("disc", help="exact discriminant of a polynomial")
    p.add_argument("coeffs", nargs="+")
    p.set_defaults(func=cmd_disc)

    p = sub.add_parser("symdisc", help="symbolic discriminant of the generic degree-n polynomial")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p.set_defaults(func=cmd_symdisc)

    p = sub.add_parser("roots", help="isolate and refine real roots")
    p.add_argument("coeffs", nargs="+")
    p.add_argument("--eps", type=float, default=1e-12)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("integrate", help="integral of |f|^(-2/n) over the real line")
    p.add_argument("coeffs", nargs="+")
    p.add_argument("--n", type=int)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("gaussian-check", help="integral of 1/(ax^2+bx+c) vs 2pi/sqrt(-D)")
    p.add_argument("a", type=float)
    p.add_argument("b", type=float)
    p.add_argument("c", type=float)
    p.set_defaults(func=cmd_gaussian)

    p = sub.add_parser("identity-check", help="cubic constants and the Beta identity")
    p.set_defaults(func=cmd_identity)

    for name, func, n_default in (("verify-cubic", cmd_verify_cubic, 3), ("explore", cmd_explore, 4)):
        p = sub.add_parser(name)
        p.add_argument("--count", type=int, default=200 if name == "verify-cubic" else 50)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--range", type=int, default=9)
        p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        if name == "explore":
            p.add_argument("--n", type=int, default=n_default)
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
