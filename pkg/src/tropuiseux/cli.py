"""Command-line front end: ``tropuiseux {roots,formula,eval,cells,verify,compose}``.

JSON is the stable output format; ``--format text`` is for humans. Exit
status is 0 on success, 1 when a verification fails and 2 on usage or
input errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .arith import RationalParseError, format_vector, parse_vector, rat_format
from .kernels import BACKEND
from .newton import DEFAULT_CELL_CAP, CellCapError, enumerate_cells
from .polynomial import TropicalPolynomial, is_tropical_zero, oracle_roots
from .puiseux import (
    DEFAULT_TERM_CAP,
    Affine,
    ExpressionError,
    Max,
    Min,
    Neg,
    Sum,
    TermCapError,
    build_g_expr,
    build_g_expr_dual,
    eval_expr,
    expr_from_json,
    expr_to_json,
    quotient_from_json,
    quotient_to_json,
    substitute,
    to_quotient_form,
)
from .roots import RootIndexError, all_roots
from .sampling import random_coeffs
from .verify import run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _load_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from None


def _load_expr(path: str):
    return expr_from_json(_load_json(path))


def _format_affine(coeffs, const) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c:
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{rat_format(abs(c))}*"
            parts.append(f"{sign} {mag}X_{i}")
    if const or not parts:
        parts.append(f"{'-' if const < 0 else '+'} {rat_format(abs(const))}")
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _format_expr(e) -> str:
    if isinstance(e, Affine):
        return _format_affine(e.coeffs, e.const)
    if isinstance(e, (Min, Max, Sum)):
        return f"{type(e).__name__.lower()}(" + ", ".join(_format_expr(a) for a in e.args) + ")"
    if isinstance(e, Neg):
        return f"-({_format_expr(e.child)})"
    return f"{rat_format(e.factor)}*({_format_expr(e.child)})"


# -- subcommands -----------------------------------------------------------

def cmd_roots(args) -> tuple[int, str]:
    f = TropicalPolynomial.parse(args.coeffs)
    roots = all_roots(f.coeffs)
    ms = oracle_roots(f)
    report = {
        "roots": format_vector(roots),
        "multiset": [{"value": rat_format(v), "mult": m} for v, m in ms],
    }
    if args.format == "text":
        lines = [f"g_{k} = {rat_format(v)}" for k, v in enumerate(roots, 1)]
        lines.append("multiset: " + ", ".join(f"{rat_format(v)} x{m}" for v, m in ms))
        return EXIT_OK, "\n".join(lines)
    return EXIT_OK, _dump(report)


def cmd_formula(args) -> tuple[int, str]:
    if args.form == "dual":
        e = build_g_expr_dual(args.n, args.k)
    else:
        e = build_g_expr(args.n, args.k)
    if args.form == "quotient":
        q = to_quotient_form(e, cap=args.cap_terms)
        doc = quotient_to_json(q)
        if args.format == "text":
            num = " ; ".join(_format_affine(a.coeffs, a.const) for a in q.num)
            den = " ; ".join(_format_affine(a.coeffs, a.const) for a in q.den)
            return EXIT_OK, f"min[{num}]\n- min[{den}]"
        return EXIT_OK, _dump(doc)
    doc = expr_to_json(e)
    if args.format == "text":
        return EXIT_OK, _format_expr(e)
    return EXIT_OK, _dump(doc)


def cmd_eval(args) -> tuple[int, str]:
    doc = _load_json(args.expr)
    point = parse_vector(args.point)
    if isinstance(doc, dict) and "num" in doc:
        value = quotient_from_json(doc).evaluate(point)
    else:
        value = eval_expr(expr_from_json(doc), point)
    if args.format == "text":
        return EXIT_OK, rat_format(value)
    return EXIT_OK, _dump({"value": rat_format(value)})


def cmd_cells(args) -> tuple[int, str]:
    cells = enumerate_cells(args.n, cap=args.cap_cells)
    if args.format == "text":
        lines = [f"{len(cells)} cells for n={args.n}"]
        lines += [f"S={{{','.join(map(str, c.S))}}}  witness=({','.join(format_vector(w))})" for c, w in cells]
        return EXIT_OK, "\n".join(lines)
    doc = {"n": args.n, "cells": [{"S": list(c.S), "witness": format_vector(w)} for c, w in cells]}
    return EXIT_OK, _dump(doc)


def cmd_verify(args) -> tuple[int, str]:
    if args.n < 1:
        raise UsageError("verify needs n >= 1")
    results = run_checks(args.n, args.trials, args.seed)
    ok = all(r.ok for r in results)
    if args.format == "text":
        lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.passed}/{args.trials}" for r in results]
        lines.append("all checks passed" if ok else "verification FAILED")
        out = "\n".join(lines)
    else:
        out = _dump({
            "n": args.n,
            "trials": args.trials,
            "seed": args.seed,
            "checks": [
                {"name": r.name, "passed": r.passed, "failed": len(r.failures),
                 "first_failure": format_vector(r.failures[0]) if r.failures else None}
                for r in results
            ],
            "status": "all checks passed" if ok else "failed",
        })
    return (EXIT_OK if ok else EXIT_FAIL), out


def cmd_compose(args) -> tuple[int, str]:
    subs = [_load_expr(p) for p in args.coeff_files]
    if len(subs) != args.n + 1:
        raise UsageError(f"degree {args.n} needs {args.n + 1} coefficient files, got {len(subs)}")
    composed = substitute(build_g_expr(args.n, args.k), subs)
    rng = random.Random(args.seed)
    nvars = composed.nvars
    failures = []
    for _ in range(args.trials):
        z = random_coeffs(rng, nvars - 1)
        cs = [eval_expr(s, z) for s in subs]
        if not is_tropical_zero(cs, eval_expr(composed, z)):
            failures.append(format_vector(z))
    ok = not failures
    if args.format == "text":
        out = f"{_format_expr(composed)}\nspot-check: {args.trials - len(failures)}/{args.trials} tropical zeroes"
    else:
        out = _dump({
            "expression": expr_to_json(composed),
            "check": {"points": args.trials, "passed": args.trials - len(failures),
                      "failures": failures[:5]},
        })
    return (EXIT_OK if ok else EXIT_FAIL), out


# -- argument parsing ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(
        prog="tropuiseux",
        description="Parametric zeroes of min-plus polynomials f = min_k (x_k + k*Y).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="all n zeroes of one polynomial")
    p.add_argument("coeffs", help='comma-separated rationals x_0..x_n, e.g. "0,0,2,1"')
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("formula", parents=[common], help="symbolic expression for g_k")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--form", choices=("primal", "dual", "quotient"), default="primal")
    p.add_argument("--cap-terms", type=int, default=DEFAULT_TERM_CAP)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression file at a point")
    p.add_argument("expr", help="expression or quotient-form JSON file ('-' for stdin)")
    p.add_argument("point", help="comma-separated rationals")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("cells", parents=[common], help="all cells P_S for degree n with witnesses")
    p.add_argument("n", type=int)
    p.add_argument("--cap-cells", type=int, default=DEFAULT_CELL_CAP)
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("verify", parents=[common], help="randomized cross-checks of the root routines")
    p.add_argument("n", type=int, nargs="?", default=6, help="maximum degree (default 6)")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compose", parents=[common], help="substitute expressions into g_k and spot-check")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("coeff_files", nargs="+", metavar="FILE", help="n+1 coefficient expression files")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_compose)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, out = args.func(args)
    except (UsageError, RationalParseError, ExpressionError, RootIndexError,
            CellCapError, TermCapError, ValueError) as exc:
        print(f"tropuiseux {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
