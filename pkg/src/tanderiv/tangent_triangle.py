"""The T(n, k) triangle and higher derivatives of tan, cot, tanh and coth.

D^n tan(x) is a polynomial in tan(x) whose coefficients T(n, k) obey

    T(n, k) = (k - 1) T(n-1, k-1) + (k + 1) T(n-1, k+1),   T(0, k) = [k == 1].

The same coefficients, with sign patterns, give the derivatives of cot,
tanh and coth as polynomials in the respective function.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass, field

from .errors import PoleError
from .polycore import IntPoly, hp, to_hp

__all__ = [
    "TanFunc",
    "TanDerivExpansion",
    "triangle_row",
    "triangle_rows",
    "triangle_coeff",
    "tangent_number",
    "tan_family_deriv",
    "eval_tan_family_deriv",
]


class TanFunc(enum.Enum):
    TAN = "tan"
    COT = "cot"
    TANH = "tanh"
    COTH = "coth"


# Row n is a tuple of length n + 2 holding T(n, 0..n+1).  Rows are only ever
# appended, under the lock, so readers never see a partially built row.
_rows: list = [(0, 1)]
_lock = threading.Lock()


def _next_row(prev: tuple) -> tuple:
    m = len(prev)  # prev is row n-1 with n+1 entries; row n gets n+2
    row = []
    for k in range(m + 1):
        left = (k - 1) * prev[k - 1] if 1 <= k <= m else 0
        right = (k + 1) * prev[k + 1] if k + 1 < m else 0
        row.append(left + right)
    return tuple(row)


def triangle_row(n: int) -> tuple:
    """Row n of the triangle: (T(n, 0), ..., T(n, n+1))."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    rows = _rows
    if n < len(rows):
        return rows[n]
    with _lock:
        while len(_rows) <= n:
            _rows.append(_next_row(_rows[-1]))
        return _rows[n]


def triangle_rows(nmax: int) -> list:
    triangle_row(nmax)
    return [triangle_row(n) for n in range(nmax + 1)]


def triangle_coeff(n: int, k: int) -> int:
    """T(n, k); zero for k outside 0..n+1."""
    if k < 0 or k > n + 1:
        if n < 0:
            raise ValueError("n must be nonnegative")
        return 0
    return triangle_row(n)[k]


def tangent_number(m: int) -> int:
    """The m-th tangent number T(2m+1, 0): 1, 2, 16, 272, 7936, ..."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return triangle_coeff(2 * m + 1, 0)


@dataclass(frozen=True)
class TanDerivExpansion:
    """D^n f(x) written as sum(terms[p] * f(x)**p)."""

    func: TanFunc
    n: int
    terms: dict = field(hash=False)

    def as_poly(self) -> IntPoly:
        """The expansion as a polynomial in the function value t = f(x)."""
        top = max(self.terms, default=-1)
        return IntPoly(self.terms.get(p, 0) for p in range(top + 1))

    def __eq__(self, other):
        if not isinstance(other, TanDerivExpansion):
            return NotImplemented
        return (self.func, self.n, self.terms) == (other.func, other.n, other.terms)


def tan_family_deriv(func: TanFunc, n: int) -> TanDerivExpansion:
    func = TanFunc(func)
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    row = triangle_row(n)
    terms = {}
    for k in range((n + 1) // 2 + 1):
        p = n - 2 * k + 1
        c = row[p]
        if func is TanFunc.COT:
            c = -c if n % 2 else c
        elif func in (TanFunc.TANH, TanFunc.COTH):
            c = -c if (n + k) % 2 else c
        terms[p] = c
    return TanDerivExpansion(func, n, dict(sorted(terms.items())))


def _func_value(func: TanFunc, x):
    fns = {
        TanFunc.TAN: hp.tan,
        TanFunc.COT: hp.cot,
        TanFunc.TANH: hp.tanh,
        TanFunc.COTH: hp.coth,
    }
    try:
        t = fns[func](x)
    except ZeroDivisionError as exc:
        raise PoleError(f"{func.value}({x}) is a pole") from exc
    if not hp.isfinite(t) or abs(t) > hp.ldexp(1, hp.prec):
        raise PoleError(f"{func.value}({x}) overflows working precision")
    return t


def eval_tan_family_deriv(func: TanFunc, n: int, x):
    """Evaluate D^n func at x by substituting func(x) into its expansion."""
    exp = tan_family_deriv(func, n)
    t = _func_value(exp.func, to_hp(x))
    # only one parity class is populated: Horner in t**2
    t2 = t * t
    acc = hp.mpf(0)
    for p in sorted(exp.terms, reverse=True):
        acc = acc * t2 + exp.terms[p]
    if (n + 1) % 2:
        acc *= t
    return acc
