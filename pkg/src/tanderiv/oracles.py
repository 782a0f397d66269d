"""Independent reference computations used to check the closed forms.

* ``RatFun`` and :func:`nth_derivative_exact`: exact quotient-rule
  differentiation of integer rational functions.
* ``SeriesQ`` and :func:`tan_series`: exact power series of tan = sin / cos.
* ``Jet``, :func:`jet_derivative`: truncated Taylor arithmetic in working
  precision.
* :func:`finite_difference`: central difference stencils (verification only).

None of these go through the tangent triangle or the binomial sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from .arc_derivatives import ArcFunc
from .errors import DomainError, PoleError
from .polycore import IntPoly, hp, to_hp
from .tangent_triangle import TanFunc

__all__ = [
    "resolve_func",
    "RatFun",
    "ratfun_derivative",
    "nth_derivative_exact",
    "SeriesQ",
    "tan_series",
    "Jet",
    "jet",
    "jet_derivative",
    "finite_difference",
]

_BASES = (IntPoly([1, 0, 1]), IntPoly([1, 0, -1]))


def resolve_func(name):
    """Map a name such as ``"tanh"`` or an enum member to its enum member."""
    if isinstance(name, (TanFunc, ArcFunc)):
        return name
    key = str(name).lower()
    for enum_cls in (TanFunc, ArcFunc):
        try:
            return enum_cls(key)
        except ValueError:
            pass
    raise ValueError(f"unknown function {name!r}")


# --------------------------------------------------------------------------
# exact rational functions


def _exact_div(p: IntPoly, d: IntPoly):
    try:
        q, r = p.divmod(d)
    except ValueError:
        return None
    return None if r else q


@dataclass(frozen=True)
class RatFun:
    num: IntPoly
    den: IntPoly

    def __post_init__(self):
        if not self.den:
            raise ZeroDivisionError("RatFun with zero denominator")

    @classmethod
    def reduced(cls, num: IntPoly, den: IntPoly) -> "RatFun":
        """Cancel integer content and whole factors of 1 + x^2 or 1 - x^2."""
        if not num:
            return cls(IntPoly(), IntPoly([1]))
        for base in _BASES:
            while den.degree >= 2:
                qd = _exact_div(den, base)
                qn = _exact_div(num, base) if qd is not None else None
                if qn is None:
                    break
                num, den = qn, qd
        g = gcd(num.content(), den.content())
        if den[den.lowest_power()] < 0:
            g = -g
        if g != 1:
            num = IntPoly(c // g for c in num)
            den = IntPoly(c // g for c in den)
        return cls(num, den)

    def base_power(self):
        """(base, m) with den == base**m, for base 1 +- x^2; None otherwise."""
        if self.den == IntPoly([1]):
            return None, 0
        for base in _BASES:
            d, m = self.den, 0
            while d.degree > 0:
                d = _exact_div(d, base)
                if d is None:
                    break
                m += 1
            if d is not None and d == IntPoly([1]):
                return base, m
        return None

    def __call__(self, x):
        return self.num(x) / self.den(x)


def ratfun_derivative(f: RatFun) -> RatFun:
    """(n/d)' = (n' d - n d') / d^2, then reduced."""
    n, d = f.num, f.den
    return RatFun.reduced(n.derivative() * d - n * d.derivative(), d * d)


def nth_derivative_exact(f: RatFun, n: int) -> RatFun:
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    f = RatFun.reduced(f.num, f.den)
    for _ in range(n):
        f = ratfun_derivative(f)
    return f


# --------------------------------------------------------------------------
# exact power series


@dataclass(frozen=True)
class SeriesQ:
    """Truncated power series c_0 + c_1 x + ... + c_N x^N over Q."""

    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __truediv__(self, other: "SeriesQ") -> "SeriesQ":
        a, b = self.coeffs, other.coeffs
        if b[0] == 0:
            raise ZeroDivisionError("series division needs a nonzero constant term")
        q = []
        for k in range(min(len(a), len(b))):
            s = a[k] - sum(b[j] * q[k - j] for j in range(1, k + 1))
            q.append(s / b[0])
        return SeriesQ(tuple(q))


def _sin_series(N):
    return SeriesQ(tuple(
        Fraction((-1) ** (k // 2), factorial(k)) if k % 2 else Fraction(0)
        for k in range(N + 1)
    ))


def _cos_series(N):
    return SeriesQ(tuple(
        Fraction(0) if k % 2 else Fraction((-1) ** (k // 2), factorial(k))
        for k in range(N + 1)
    ))


def tan_series(N: int) -> SeriesQ:
    """Taylor coefficients of tan at 0 through x^N, by dividing sin by cos."""
    if N < 1:
        raise ValueError("truncation order must be >= 1")
    return _sin_series(N) / _cos_series(N)


# --------------------------------------------------------------------------
# Taylor jets


class Jet:
    """Truncated Taylor series sum(d[j] (x - x0)^j), j = 0..N, in working precision.

    d[j] = f^(j)(x0) / j!.
    """

    __slots__ = ("d",)

    def __init__(self, d):
        self.d = [to_hp(v) for v in d]

    @property
    def order(self):
        return len(self.d) - 1

    def derivative_at(self, j: int):
        return self.d[j] * factorial(j)

    def _lift(self, other):
        if isinstance(other, Jet):
            return other
        return Jet([other] + [0] * self.order)

    def __add__(self, other):
        o = self._lift(other)
        return Jet([a + b for a, b in zip(self.d, o.d)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return Jet([a - b for a, b in zip(self.d, o.d)])

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Jet([-a for a in self.d])

    def __mul__(self, other):
        if not isinstance(other, Jet):
            o = to_hp(other)
            return Jet([a * o for a in self.d])
        N = min(self.order, other.order)
        a, b = self.d, other.d
        return Jet([hp.fsum(a[j] * b[k - j] for j in range(k + 1)) for k in range(N + 1)])

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.d[0] == 0:
            raise PoleError("jet division by a series with zero constant term")
        N = min(self.order, o.order)
        q = []
        for k in range(N + 1):
            s = self.d[k] - hp.fsum(o.d[j] * q[k - j] for j in range(1, k + 1))
            q.append(s / o.d[0])
        return Jet(q)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def deriv(self) -> "Jet":
        """Jet of f' (one order lower)."""
        return Jet([k * self.d[k] for k in range(1, len(self.d))])

    def integrate(self, constant) -> "Jet":
        return Jet([constant] + [self.d[k] / (k + 1) for k in range(len(self.d))])

    def _trig_pair(self, hyperbolic: bool):
        u = self.d
        if hyperbolic:
            s, c = [hp.sinh(u[0])], [hp.cosh(u[0])]
        else:
            s, c = [hp.sin(u[0])], [hp.cos(u[0])]
        for k in range(1, len(u)):
            sk = hp.fsum(j * u[j] * c[k - j] for j in range(1, k + 1)) / k
            ck = hp.fsum(j * u[j] * s[k - j] for j in range(1, k + 1)) / k
            s.append(sk)
            c.append(ck if hyperbolic else -ck)
        return Jet(s), Jet(c)

    def sin_cos(self):
        return self._trig_pair(False)

    def sinh_cosh(self):
        return self._trig_pair(True)


def jet(fn, x0, order: int) -> Jet:
    """Jet of fn at x0 through the given order."""
    fn = resolve_func(fn)
    x0 = to_hp(x0)
    x = Jet([x0, 1] + [0] * (order - 1)) if order >= 1 else Jet([x0])
    if fn is TanFunc.TAN:
        s, c = x.sin_cos()
        return s / c
    if fn is TanFunc.COT:
        s, c = x.sin_cos()
        return c / s
    if fn is TanFunc.TANH:
        s, c = x.sinh_cosh()
        return s / c
    if fn is TanFunc.COTH:
        s, c = x.sinh_cosh()
        return c / s
    if fn is ArcFunc.ARCTANH and not abs(x0) < 1:
        raise DomainError("arctanh needs |x| < 1")
    if fn is ArcFunc.ARCCOTH and not abs(x0) > 1:
        raise DomainError("arccoth needs |x| > 1")
    if fn is ArcFunc.ARCCOT and x0 == 0:
        raise DomainError("arccot jumps at 0")
    if order == 0:
        return Jet([_value(fn, x0)])
    # arc functions: integrate u'/(1 +- u^2) with u the identity jet
    short = Jet(x.d[:-1])
    if fn in (ArcFunc.ARCTAN, ArcFunc.ARCCOT):
        g = 1 / (1 + short * short)
    else:
        g = 1 / (1 - short * short)
    if fn is ArcFunc.ARCCOT:
        g = -g
    return g.integrate(_value(fn, x0))


def _value(fn, x):
    table = {
        TanFunc.TAN: hp.tan,
        TanFunc.COT: hp.cot,
        TanFunc.TANH: hp.tanh,
        TanFunc.COTH: hp.coth,
        ArcFunc.ARCTAN: hp.atan,
        ArcFunc.ARCTANH: hp.atanh,
        ArcFunc.ARCCOT: lambda v: hp.atan(1 / v),
        ArcFunc.ARCCOTH: lambda v: hp.atanh(1 / v),
    }
    try:
        return table[fn](x)
    except ZeroDivisionError as exc:
        raise PoleError(f"{fn.value} is singular at {x}") from exc


def jet_derivative(fn, n: int, x0):
    """f^(n)(x0) read off a Taylor jet of order n."""
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    j = jet(fn, x0, n)
    v = j.derivative_at(n)
    if not hp.isfinite(v):
        raise PoleError(f"non-finite derivative of {resolve_func(fn).value} at {x0}")
    return v


# --------------------------------------------------------------------------
# finite differences

# halves are exact binary floats
_STENCILS = {
    0: ((0,), (1,)),
    1: ((-1, 1), (-0.5, 0.5)),
    2: ((-1, 0, 1), (1, -2, 1)),
    3: ((-2, -1, 1, 2), (-0.5, 1, -1, 0.5)),
    4: ((-2, -1, 0, 1, 2), (1, -4, 6, -4, 1)),
}


def _branch_id(fn, x):
    """Label of the interval between singularities that contains x."""
    if fn is TanFunc.TAN:
        return int(hp.floor(x / hp.pi + hp.mpf(1) / 2))
    if fn is TanFunc.COT:
        return int(hp.floor(x / hp.pi))
    if fn in (TanFunc.COTH, ArcFunc.ARCCOT):
        return 0 if x > 0 else (1 if x < 0 else None)
    if fn is ArcFunc.ARCTANH:
        return 0 if abs(x) < 1 else None
    if fn is ArcFunc.ARCCOTH:
        return 1 if x > 1 else (-1 if x < -1 else None)
    return 0


def finite_difference(fn, n: int, x0, h=None):
    """Central-difference estimate of f^(n)(x0), n <= 4, error O(h^2).

    ``fn`` is a function name/enum or any callable on working-precision
    floats.  Default step is 1e-4 * max(1, |x0|).
    """
    if n not in _STENCILS:
        raise ValueError("finite_difference supports 0 <= n <= 4")
    x0 = to_hp(x0)
    h = hp.mpf("1e-4") * max(1, abs(x0)) if h is None else to_hp(h)
    offsets, weights = _STENCILS[n]
    points = [x0 + o * h for o in offsets]
    if callable(fn) and not isinstance(fn, (TanFunc, ArcFunc)):
        f = fn
    else:
        fn = resolve_func(fn)
        ids = {_branch_id(fn, p) for p in points}
        if None in ids or len(ids) != 1:
            raise DomainError(f"stencil around {x0} leaves the domain of {fn.value}")
        f = lambda v: _value(fn, v)  # noqa: E731
    total = hp.fsum(w * f(p) for w, p in zip(weights, points))
    return total / h**n
