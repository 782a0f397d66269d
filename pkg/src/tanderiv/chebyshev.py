"""Chebyshev polynomials from their binomial closed forms.

    U_n(x) = sum_k C(n+1, 2k+1) (x^2 - 1)^k x^(n-2k)
    T_n(x) = sum_k C(n,   2k)   (x^2 - 1)^k x^(n-2k)

The three-term recurrence is kept alongside as an independent check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError
from .polycore import IntPoly, binomial, hp, to_hp

__all__ = [
    "Kind",
    "ChebPoly",
    "cheb_closed",
    "cheb_recurrence",
    "t_from_u",
    "sin_n_arcsin",
]


class Kind(enum.Enum):
    FIRST = "T"
    SECOND = "U"


@dataclass(frozen=True)
class ChebPoly:
    kind: Kind
    n: int
    poly: IntPoly

    def __call__(self, x):
        return self.poly(x)


def _x2_minus_1_pow(k: int) -> IntPoly:
    # (x^2 - 1)^k = sum_j C(k, j) (-1)^(k-j) x^(2j)
    coeffs = [0] * (2 * k + 1)
    for j in range(k + 1):
        c = binomial(k, j)
        coeffs[2 * j] = -c if (k - j) % 2 else c
    return IntPoly(coeffs)


def cheb_closed(kind: Kind, n: int) -> ChebPoly:
    kind = Kind(kind)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    top = n + 1 if kind is Kind.SECOND else n
    offset = 1 if kind is Kind.SECOND else 0
    acc = IntPoly()
    for k in range(n // 2 + 1):
        c = binomial(top, 2 * k + offset)
        if c:
            acc = acc + _x2_minus_1_pow(k).shift(n - 2 * k).scale(c)
    return ChebPoly(kind, n, acc)


def cheb_recurrence(kind: Kind, n: int) -> ChebPoly:
    """P_{n+1} = 2x P_n - P_{n-1}, seeded with T_0=1, T_1=x or U_0=1, U_1=2x."""
    kind = Kind(kind)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    prev = IntPoly([1])
    cur = IntPoly([0, 1]) if kind is Kind.FIRST else IntPoly([0, 2])
    if n == 0:
        return ChebPoly(kind, 0, prev)
    for _ in range(n - 1):
        prev, cur = cur, cur.shift(1).scale(2) - prev
    return ChebPoly(kind, n, cur)


def t_from_u(n: int) -> ChebPoly:
    """T_n = U_n - x U_{n-1}, built from second-kind closed forms."""
    if n < 1:
        raise ValueError("t_from_u needs n >= 1")
    u_n = cheb_closed(Kind.SECOND, n).poly
    u_prev = cheb_closed(Kind.SECOND, n - 1).poly
    return ChebPoly(Kind.FIRST, n, u_n - u_prev.shift(1))


def sin_n_arcsin(n: int, x):
    """sin(n * arcsin x) from its algebraic closed form, for |x| <= 1.

    x * sum_k C(n, 2k+1) (-1)^k x^(2k) (1 - x^2)^((n-1)/2 - k); half-integer
    exponents are powers of sqrt(1 - x^2).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = to_hp(x)
    if abs(x) > 1:
        raise DomainError(f"sin(n arcsin x) needs |x| <= 1, got {x}")
    x2 = x * x
    root = hp.sqrt(1 - x2)
    total = hp.mpf(0)
    for k in range((n - 1) // 2 + 1 if n >= 1 else 0):
        term = binomial(n, 2 * k + 1) * x2**k * root ** (n - 1 - 2 * k)
        total += -term if k % 2 else term
    return x * total
