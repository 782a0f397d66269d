"""Exact integer polynomials, binomials and the working-precision float context.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
:class:`fractions.Fraction`.  Floating evaluation goes through a private
:mod:`mpmath` context so the library never touches the global ``mpmath.mp``
precision.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from math import factorial, gcd
from numbers import Rational

import mpmath
from mpmath.ctx_mp_python import _mpc

__all__ = [
    "HP_PREC",
    "hp",
    "to_hp",
    "IntPoly",
    "binomial",
    "factorial",
    "poly_eval",
    "is_exact",
]

# 113 bits = IEEE quad significand; the contract only asks for >= 64.
HP_PREC = 113

hp = mpmath.MPContext()
hp.prec = HP_PREC


def is_exact(x) -> bool:
    """True for ints and Fractions (but not bools or floats)."""
    return isinstance(x, Rational) and not isinstance(x, bool)


def to_hp(x):
    """Convert a number to a working-precision real (or complex) float."""
    if isinstance(x, Fraction):
        return hp.mpf(x.numerator) / x.denominator
    if isinstance(x, (complex, _mpc)):
        return hp.mpc(x)
    return hp.mpf(x)


def binomial(n: int, k: int) -> int:
    """C(n, k) for nonnegative n, k; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # exact at every step: result == C(n - k + i, i) after the division
        result = result * (n - k + i) // i
    return result


class IntPoly:
    """Dense univariate polynomial with integer coefficients, lowest power first.

    Instances are immutable and always trimmed, so ``==`` is mathematical
    equality.  The zero polynomial has an empty coefficient tuple and
    degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "_c", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * power + [coeff])

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def __len__(self):
        return len(self._c)

    def __getitem__(self, power: int) -> int:
        if 0 <= power < len(self._c):
            return self._c[power]
        return 0

    def __iter__(self):
        return iter(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self._c == other._c
        if is_exact(other):
            return self._c == IntPoly([other])._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"IntPoly({list(self._c)})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for p, c in enumerate(self._c):
            if c == 0:
                continue
            mono = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            parts.append((c < 0, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    # arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPoly([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return IntPoly(a + b for a, b in zip_longest(self._c, o._c, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-a for a in self._c)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return IntPoly(a - b for a, b in zip_longest(self._c, o._c, fillvalue=0))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o) == 1:
            return self.scale(o._c[0])
        if not self._c or not o._c:
            return IntPoly()
        out = [0] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = IntPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(c * a for a in self._c)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        if not self._c:
            return self
        return IntPoly((0,) * k + self._c)

    def derivative(self) -> "IntPoly":
        return IntPoly(p * c for p, c in enumerate(self._c) if p)

    def divmod(self, divisor: "IntPoly"):
        """Exact-integer long division; raises ValueError if a quotient
        coefficient is not an integer."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self._c)
        lead = divisor._c[-1]
        dd = divisor.degree
        q = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if c % lead:
                raise ValueError("inexact integer polynomial division")
            f = c // lead
            q[i - dd] = f
            for j, d in enumerate(divisor._c):
                rem[i - dd + j] -= f * d
        return IntPoly(q), IntPoly(rem)

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._c:
            g = gcd(g, c)
        return g

    def lowest_power(self) -> int:
        for p, c in enumerate(self._c):
            if c:
                return p
        return -1

    def reflect(self) -> "IntPoly":
        """p(-x)."""
        return IntPoly(-c if p % 2 else c for p, c in enumerate(self._c))

    def __call__(self, x):
        return poly_eval(self, x)


def poly_eval(p: IntPoly, x):
    """Horner evaluation.

    Exact (int or Fraction) for rational ``x``; working-precision mpmath
    float otherwise.
    """
    if is_exact(x):
        acc = 0
        for c in reversed(p.coeffs):
            acc = acc * x + c
        if isinstance(acc, Fraction) and acc.denominator == 1:
            return acc.numerator
        return acc
    xv = to_hp(x)
    acc = hp.mpf(0)
    for c in reversed(p.coeffs):
        acc = acc * xv + c
    return acc
