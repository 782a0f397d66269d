"""Formula records and their JSON / CSV / LaTeX renderings."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .arc_derivatives import ArcDerivForm, ArcFunc, arc_deriv
from .oracles import resolve_func
from .polycore import IntPoly
from .tangent_triangle import TanDerivExpansion, TanFunc, tan_family_deriv

_SAFE_INT = 2**53

# order of the worked-example corpus
CORPUS_FUNCS = (
    TanFunc.TAN, TanFunc.COT, TanFunc.TANH, TanFunc.COTH,
    ArcFunc.ARCTAN, ArcFunc.ARCCOT, ArcFunc.ARCTANH, ArcFunc.ARCCOTH,
)
CORPUS_MAX_ORDER = 6


def json_int(v: int):
    """Ints beyond double precision become decimal strings."""
    return v if -_SAFE_INT <= v <= _SAFE_INT else str(v)


def json_number(v):
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return json_int(v.numerator)
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, int):
        return json_int(v)
    return str(v)


# --------------------------------------------------------------------------
# records


def formula_record(formula) -> dict:
    if isinstance(formula, TanDerivExpansion):
        return {
            "func": formula.func.value,
            "n": formula.n,
            "kind": "tan_expansion",
            "terms": [{"power": p, "coeff": json_int(c)} for p, c in formula.terms.items()],
        }
    return {
        "func": formula.func.value,
        "n": formula.n,
        "kind": "arc_rational",
        "scalar": str(formula.scalar),
        "base_sign": formula.base_sign,
        "numerator": [json_int(c) for c in formula.numerator.coeffs],
        "denom_power": formula.denom_power,
    }


def formula_from_record(rec: dict):
    """Inverse of :func:`formula_record`."""
    if rec["kind"] == "tan_expansion":
        terms = {int(t["power"]): int(t["coeff"]) for t in rec["terms"]}
        return TanDerivExpansion(TanFunc(rec["func"]), int(rec["n"]), terms)
    if rec["kind"] == "arc_rational":
        return ArcDerivForm(
            ArcFunc(rec["func"]),
            int(rec["n"]),
            int(rec["scalar"]),
            int(rec["base_sign"]),
            IntPoly(int(c) for c in rec["numerator"]),
            int(rec["denom_power"]),
        )
    raise ValueError(f"unknown record kind {rec['kind']!r}")


def derivative_formula(func, n: int):
    func = resolve_func(func)
    if isinstance(func, TanFunc):
        return tan_family_deriv(func, n)
    return arc_deriv(func, n)


# --------------------------------------------------------------------------
# LaTeX


def _sup(p: int) -> str:
    return f"^{p}" if p < 10 else f"^{{{p}}}"


def _lhs(func, n: int) -> str:
    d = "D_x" if n == 1 else f"D_x{_sup(n)}"
    return f"{d} \\{func.value}(x)"


def _signed_join(parts) -> str:
    """parts: (negative, body) pairs -> 'a + b - c'."""
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def latex_poly(p: IntPoly, var: str = "x") -> str:
    parts = []
    for power, c in enumerate(p.coeffs):
        if not c:
            continue
        mono = "" if power == 0 else (var if power == 1 else f"{var}{_sup(power)}")
        body = mono if mono and abs(c) == 1 else f"{abs(c)}{mono}"
        parts.append((c < 0, body))
    return _signed_join(parts) if parts else "0"


def latex_tan_expansion(exp: TanDerivExpansion) -> str:
    f = f"\\{exp.func.value}"
    parts = []
    for p, c in exp.terms.items():
        if not c:
            continue
        if p == 0:
            body = str(abs(c))
        else:
            fp = f"{f}(x)" if p == 1 else f"{f}{_sup(p)}(x)"
            body = fp if abs(c) == 1 else f"{abs(c)} {fp}"
        parts.append((c < 0, body))
    return _signed_join(parts)


def latex_arc_form(form: ArcDerivForm) -> str:
    """Factor out content and powers of x, e.g. -2 ( 1 - 3x^2 ) / (1+x^2)^3."""
    num = form.numerator
    content = num.content()
    low = num.lowest_power()
    reduced = IntPoly(c // content for c in num.coeffs[low:])
    s = form.scalar * content
    if reduced[0] < 0:
        reduced, s = -reduced, -s
    xpart = "" if low == 0 else ("x" if low == 1 else f"x{_sup(low)}")
    if reduced == IntPoly([1]):
        if xpart:
            top = ("-" if s < 0 else "") + (xpart if abs(s) == 1 else f"{abs(s)}{xpart}")
        else:
            top = str(s)
    else:
        lead = "-" if s == -1 else ("" if s == 1 else str(s))
        top = f"{lead} {xpart} ( {latex_poly(reduced)} )" if xpart else f"{lead} ( {latex_poly(reduced)} )"
        top = top.strip()
    base = "1+x^2" if form.base_sign == 1 else "1-x^2"
    bottom = base if form.denom_power == 1 else f"({base}){_sup(form.denom_power)}"
    return f"\\frac{{{top}}}{{{bottom}}}"


def latex_formula(formula) -> str:
    if isinstance(formula, TanDerivExpansion):
        rhs = latex_tan_expansion(formula)
    else:
        rhs = latex_arc_form(formula)
    return f"{_lhs(formula.func, formula.n)} = {rhs}"


# --------------------------------------------------------------------------
# documents


def corpus():
    return [derivative_formula(f, n) for f in CORPUS_FUNCS for n in range(1, CORPUS_MAX_ORDER + 1)]


def report_latex() -> str:
    lines = []
    for formula in corpus():
        lines += ["\\begin{equation}", f" {latex_formula(formula)}", "\\end{equation}"]
    return "\n".join(lines) + "\n"


def report_json() -> str:
    entries = []
    for formula in corpus():
        rec = formula_record(formula)
        rec["latex"] = latex_formula(formula)
        entries.append(rec)
    return dumps({"count": len(entries), "formulas": entries})


def dumps(obj, indent=2) -> str:
    return json.dumps(obj, indent=indent) + "\n"


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def triangle_latex(rows) -> str:
    width = len(rows[-1])
    out = [
        "\\begin{tabular}{r|" + "r" * width + "}",
        "$n$ & " + " & ".join(f"$k={k}$" for k in range(width)) + " \\\\",
        "\\hline",
    ]
    for n, row in enumerate(rows):
        cells = [str(v) for v in row] + [""] * (width - len(row))
        out.append(f"{n} & " + " & ".join(cells) + " \\\\")
    out.append("\\end{tabular}")
    return "\n".join(out) + "\n"
