"""``trirec`` command line.

Every command writes one JSON object to stdout. Exit status is 0 on success,
1 on a computation error (the object then carries ``"error"``), 2 on a usage
error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .apps import cf_convergents, ode_solve
from .canonical import solve_general
from .convolve import DEFAULT_MAX_GRID
from .core import (GeneralRecurrence, div, ParseError, TrirecError, load_coefficient_spec,
                   parse_rational, render_rational, to_mode)
from .engines import ENGINES, bench, compare, evaluate
from .oracle import symbolic_solve

METHOD_ALIASES = {"iter": "iterative", "iterative": "iterative", "rsum": "rsum", "flat": "flat",
                  "closed": "closed"}


def _scalar_arg(text: str):
    try:
        return parse_rational(text)
    except ParseError:
        pass
    try:
        return Fraction(text)  # exact decimals such as "0.125"
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trirec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, coeffs=True, method=False):
        if coeffs:
            p.add_argument("--coeffs", required=True, help="coefficient spec JSON file for d")
        if method:
            p.add_argument("--method", default="iter", choices=sorted(METHOD_ALIASES))
        p.add_argument("--scalar", default="rational", choices=["rational", "float64"])
        p.add_argument("--max-grid", type=_positive_int, default=DEFAULT_MAX_GRID)

    p = sub.add_parser("eval", help="a(n+1) of the canonical recurrence by one method")
    common(p, method=True)
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--a0", type=_scalar_arg)
    p.add_argument("--a1", type=_scalar_arg)

    p = sub.add_parser("compare", help="all four methods for n = 0..n-max")
    common(p)
    p.add_argument("--n-max", type=_nonneg_int, required=True)

    p = sub.add_parser("expand", help="symbolic expansion of a(n+1) in d1..dn")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("bench", help="timings and cost counters per (n, method)")
    common(p)
    p.add_argument("--n-max", type=_positive_int, required=True)
    p.add_argument("--repeat", type=_positive_int, default=3)

    p = sub.add_parser("cf", help="continued-fraction convergents")
    p.add_argument("--b0", type=_scalar_arg, required=True)
    p.add_argument("--num", required=True, help="partial numerators (coefficient spec)")
    p.add_argument("--den", required=True, help="partial denominators (coefficient spec)")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--scalar", default="rational", choices=["rational", "float64"])

    p = sub.add_parser("ode", help="f'' = U f on a uniform grid")
    p.add_argument("--potential", required=True, help="U per node n = 1..steps (coefficient spec)")
    for name in ("x0", "h", "f0", "f1"):
        p.add_argument(f"--{name}", type=_scalar_arg, required=True)
    p.add_argument("--steps", type=_positive_int, required=True)
    common(p, coeffs=False, method=True)

    p = sub.add_parser("general", help="W(n) of the general recurrence")
    p.add_argument("--a", required=True, help="A coefficients (coefficient spec)")
    p.add_argument("--b", required=True, help="B coefficients (coefficient spec)")
    p.add_argument("--c0", type=_scalar_arg, required=True)
    p.add_argument("--c1", type=_scalar_arg, required=True)
    p.add_argument("--n", type=_nonneg_int, required=True)
    common(p, coeffs=False, method=True)
    return parser


def _engine(args):
    method = METHOD_ALIASES[args.method]
    if method in ("flat", "closed"):
        base = ENGINES[method]
        return lambda seq, n: base(seq, n, args.max_grid)
    return ENGINES[method]


def _cmd_eval(args) -> dict:
    seq = load_coefficient_spec(args.coeffs, args.scalar)
    rep = evaluate(seq, args.n, METHOD_ALIASES[args.method], a0=args.a0, a1=args.a1,
                   max_grid=args.max_grid)
    return {"command": "eval", "scalar": args.scalar, **rep.to_dict()}


def _cmd_compare(args) -> dict:
    seq = load_coefficient_spec(args.coeffs, args.scalar)
    return {**compare(seq, args.n_max, max_grid=args.max_grid), "scalar": args.scalar}


def _cmd_expand(args):
    poly = symbolic_solve(args.n)
    if args.format == "text":
        return poly.render()
    return {"command": "expand", "n": args.n, "terms": len(poly), "expansion": poly.render()}


def _cmd_bench(args) -> dict:
    seq = load_coefficient_spec(args.coeffs, args.scalar)
    return bench(seq, args.n_max, args.repeat, max_grid=args.max_grid)


def _cmd_cf(args) -> dict:
    num = load_coefficient_spec(args.num, args.scalar)
    den = load_coefficient_spec(args.den, args.scalar)
    pairs = cf_convergents(args.b0, num, den, args.k)
    return {"command": "cf", "k": args.k, "scalar": args.scalar,
            "convergents": [{"i": i, "numerator": render_rational(h), "denominator": render_rational(q),
                             "value": render_rational(div(h, q)) if q != 0 else None}
                            for i, (h, q) in enumerate(pairs)]}


def _cmd_ode(args) -> dict:
    U = load_coefficient_spec(args.potential, args.scalar)
    x0, h, f0, f1 = (to_mode(v, args.scalar) for v in (args.x0, args.h, args.f0, args.f1))
    values = ode_solve(U, x0, h, f0, f1, args.steps, _engine(args))
    return {"command": "ode", "steps": args.steps, "scalar": args.scalar,
            "method": METHOD_ALIASES[args.method],
            "x": [render_rational(x0 + i * h) for i in range(len(values))],
            "f": [render_rational(v) for v in values]}


def _cmd_general(args) -> dict:
    A = load_coefficient_spec(args.a, args.scalar)
    B = load_coefficient_spec(args.b, args.scalar)
    gen = GeneralRecurrence(A, B, to_mode(args.c0, args.scalar), to_mode(args.c1, args.scalar))
    value = solve_general(gen, args.n, _engine(args))
    return {"command": "general", "n": args.n, "scalar": args.scalar,
            "method": METHOD_ALIASES[args.method], "value": render_rational(value)}


COMMANDS = {"eval": _cmd_eval, "compare": _cmd_compare, "expand": _cmd_expand, "bench": _cmd_bench,
            "cf": _cmd_cf, "ode": _cmd_ode, "general": _cmd_general}


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        result = COMMANDS[args.command](args)
        code = 0
    except TrirecError as exc:
        result, code = {"command": args.command, **exc.to_dict()}, 1
    except OSError as exc:
        result, code = {"command": args.command, "error": "io_error", "message": str(exc)}, 1
    except RecursionError:
        result, code = {"command": args.command, "error": "too_large",
                        "message": "problem too large for recursive evaluation"}, 1
    text = result if isinstance(result, str) else json.dumps(result, indent=2)
    out.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
