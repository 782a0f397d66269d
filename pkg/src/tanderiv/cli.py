"""Command-line interface: ``tanderiv {triangle,deriv,eval,verify,report}``.

Exit status: 0 success, 1 verification failure or evaluation error,
2 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
import time
from fractions import Fraction

from . import render, verify
from .arc_derivatives import ArcFunc, arc_deriv_eval
from .errors import DomainError, PoleError
from .oracles import resolve_func
from .polycore import hp, is_exact
from .tangent_triangle import TanFunc, eval_tan_family_deriv, triangle_rows

FUNC_NAMES = [f.value for f in TanFunc] + [f.value for f in ArcFunc]

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$")


def parse_x(text: str):
    """'p/q' or an integer -> Fraction; anything else numeric -> hp float."""
    if _RATIONAL.match(text):
        return Fraction(text.replace(" ", ""))
    try:
        return hp.mpf(text.strip())
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse x = {text!r}") from exc


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


# --------------------------------------------------------------------------


def cmd_triangle(args) -> str:
    rows = triangle_rows(args.nmax)
    width = args.nmax + 2
    padded = [list(r) + [0] * (width - len(r)) for r in rows]
    if args.format == "json":
        return render.dumps({
            "nmax": args.nmax,
            "rows": [[render.json_int(v) for v in r] for r in padded],
        }, indent=None)
    if args.format == "csv":
        header = ["n"] + [f"k{k}" for k in range(width)]
        return render.to_csv(header, [[n] + r for n, r in enumerate(padded)])
    return render.triangle_latex(rows)


def cmd_deriv(args) -> str:
    func = resolve_func(args.func)
    formula = render.derivative_formula(func, args.n)
    if args.format == "json":
        return render.dumps(render.formula_record(formula))
    if args.format == "latex":
        return render.latex_formula(formula) + "\n"
    if isinstance(func, TanFunc):
        rows = [[func.value, args.n, p, c] for p, c in formula.terms.items()]
        return render.to_csv(["func", "n", "power", "coeff"], rows)
    rows = [
        [func.value, args.n, formula.scalar, formula.base_sign, formula.denom_power, p, c]
        for p, c in enumerate(formula.numerator.coeffs)
    ]
    return render.to_csv(
        ["func", "n", "scalar", "base_sign", "denom_power", "power", "coeff"], rows)


def evaluate(func, n: int, x):
    func = resolve_func(func)
    if isinstance(func, TanFunc):
        return eval_tan_family_deriv(func, n, x)
    return arc_deriv_eval(func, n, x)


def _fmt_value(v) -> str:
    if is_exact(v):
        v = Fraction(v)
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    text = hp.nstr(v, 30)
    return text[:-2] if text.endswith(".0") else text


def cmd_eval(args) -> str:
    value = evaluate(args.func, args.n, args.x)
    x_text = _fmt_value(args.x) if is_exact(args.x) else hp.nstr(args.x, 30)
    exact = is_exact(value)
    if args.format == "json":
        rec = {
            "func": resolve_func(args.func).value,
            "n": args.n,
            "x": x_text,
            "value": render.json_number(Fraction(value)) if exact else _fmt_value(value),
            "exact": exact,
            "method": "closed_form",
        }
        return render.dumps(rec)
    if args.format == "csv":
        return render.to_csv(["func", "n", "x", "value", "method"],
                             [[args.func, args.n, x_text, _fmt_value(value), "closed_form"]])
    return f"{_fmt_value(value)}\n"


def cmd_verify(args, out) -> int:
    start = time.perf_counter()
    checks = verify.run(args.suite, nmax=args.nmax, seed=args.seed)
    for c in checks:
        print(c.line(), file=out)
    failed = [c for c in checks if not c.ok]
    cases = sum(c.total for c in checks)
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed "
          f"({cases} cases, {time.perf_counter() - start:.1f}s)", file=out)
    return 1 if failed else 0


def cmd_report(args) -> str:
    return render.report_json() if args.format == "json" else render.report_latex()


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tanderiv",
        description="Higher derivatives of the tangent and inverse-tangent families.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default="json"):
        sp.add_argument("--format", choices=("json", "csv", "latex"), default=default)

    t = sub.add_parser("triangle", help="rows 0..nmax of the T(n,k) triangle")
    t.add_argument("--nmax", type=_nonneg_int, required=True)
    fmt(t)

    d = sub.add_parser("deriv", help="closed-form nth derivative")
    d.add_argument("func", choices=FUNC_NAMES)
    d.add_argument("--n", type=_nonneg_int, required=True)
    fmt(d)

    e = sub.add_parser("eval", help="evaluate the nth derivative at x")
    e.add_argument("func", choices=FUNC_NAMES)
    e.add_argument("--n", type=_nonneg_int, required=True)
    e.add_argument("--x", type=parse_x, required=True,
                   help="integer or p/q for exact evaluation, decimal for float")
    fmt(e)

    v = sub.add_parser("verify", help="run invariant suites")
    v.add_argument("suite", nargs="?", default="all", choices=verify.SUITES + ("all",))
    v.add_argument("--nmax", type=_nonneg_int, default=None)
    v.add_argument("--seed", type=int, default=42)

    r = sub.add_parser("report", help="regenerate the worked-example corpus")
    r.add_argument("--format", choices=("latex", "json"), default="latex")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        handler = {
            "triangle": cmd_triangle,
            "deriv": cmd_deriv,
            "eval": cmd_eval,
            "report": cmd_report,
        }[args.command]
        out.write(handler(args))
    except (DomainError, PoleError) as exc:
        print(f"tanderiv: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
