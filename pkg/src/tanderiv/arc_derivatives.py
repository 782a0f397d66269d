"""Closed-form higher derivatives of arctan, arctanh, arccot and arccoth.

For n >= 1

    D^n arctan(x)  = (-1)^(n+1) (n-1)! / (1+x^2)^n * sum_k C(n, 2k+1) (-1)^k x^(n-2k-1)
    D^n arctanh(x) =            (n-1)! / (1-x^2)^n * sum_k C(n, 2k+1)        x^(n-2k-1)

with D^n arccot = -D^n arctan and D^n arccoth = D^n arctanh.  Besides the
rational form there are two alternative evaluators for arctan: one through
the Chebyshev polynomial U_{n-1}, one through sin(n arcsin(1/sqrt(1+x^2))).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .chebyshev import Kind, cheb_closed
from .errors import DomainError, PoleError
from .polycore import IntPoly, binomial, factorial, hp, is_exact, poly_eval, to_hp
from .signum import sg_real

__all__ = [
    "ArcFunc",
    "ArcDerivForm",
    "arc_deriv",
    "arc_deriv_eval",
    "arc_deriv_at_zero",
    "cheb_form_eval",
    "sin_arcsin_form_eval",
]


class ArcFunc(enum.Enum):
    ARCTAN = "arctan"
    ARCTANH = "arctanh"
    ARCCOT = "arccot"
    ARCCOTH = "arccoth"

    @property
    def base_sign(self) -> int:
        """+1 when the denominator base is 1 + x^2, -1 for 1 - x^2."""
        return 1 if self in (ArcFunc.ARCTAN, ArcFunc.ARCCOT) else -1


@dataclass(frozen=True)
class ArcDerivForm:
    """scalar * numerator(x) / (1 + base_sign * x^2) ** denom_power"""

    func: ArcFunc
    n: int
    scalar: int
    base_sign: int
    numerator: IntPoly
    denom_power: int

    @property
    def base(self) -> IntPoly:
        return IntPoly([1, 0, self.base_sign])

    def full_numerator(self) -> IntPoly:
        return self.numerator.scale(self.scalar)


def _check_order(n: int) -> None:
    if n < 1:
        raise DomainError("arc-family derivative formulas need n >= 1")


def arc_deriv(func: ArcFunc, n: int) -> ArcDerivForm:
    func = ArcFunc(func)
    _check_order(n)
    alternating = func.base_sign == 1
    coeffs = [0] * n
    for k in range((n - 1) // 2 + 1):
        c = binomial(n, 2 * k + 1)
        coeffs[n - 2 * k - 1] = -c if alternating and k % 2 else c
    scalar = factorial(n - 1)
    if func is ArcFunc.ARCTAN and n % 2 == 0:
        scalar = -scalar
    elif func is ArcFunc.ARCCOT and n % 2 == 1:
        scalar = -scalar
    return ArcDerivForm(func, n, scalar, func.base_sign, IntPoly(coeffs), n)


def arc_deriv_eval(func: ArcFunc, n: int, x):
    """Evaluate the rational closed form; exact for int/Fraction input."""
    form = arc_deriv(func, n)
    if is_exact(x):
        x = Fraction(x)
        den = (1 + form.base_sign * x * x) ** n
        if den == 0:
            raise PoleError(f"D^{n} {form.func.value} has a pole at x = {x}")
        val = form.scalar * Fraction(poly_eval(form.numerator, x)) / den
        return val.numerator if val.denominator == 1 else val
    x = to_hp(x)
    base = 1 + form.base_sign * x * x
    if base == 0:
        raise PoleError(f"D^{n} {form.func.value} has a pole at x = {x}")
    return form.scalar * poly_eval(form.numerator, x) / base**n


def arc_deriv_at_zero(n: int) -> int:
    """D^n arctan(0) = (n-1)! (-1)^((n-1)/2) for odd n, 0 for even n."""
    _check_order(n)
    if n % 2 == 0:
        return 0
    v = factorial(n - 1)
    return -v if (n - 1) // 2 % 2 else v


def cheb_form_eval(func: ArcFunc, n: int, x):
    """D^n arctan or D^n arctanh through U_{n-1}.

    arctan:  (-1)^(n+1) (n-1)! (1+x^2)^(-(n+1)/2) U_{n-1}(x / sqrt(1+x^2))

    arctanh: (-1)^(n+1) (n-1)! (1-x^2)^(-(n+1)/2) i^(n-1) U_{n-1}(i y),
    y = x / sqrt(1-x^2).  With U_{n-1}(z) = sum_j u_j z^j, only j of the
    parity of n-1 occur, so i^(n-1) (iy)^j = (-1)^((n-1+j)/2) y^j is real.
    """
    func = ArcFunc(func)
    if func not in (ArcFunc.ARCTAN, ArcFunc.ARCTANH):
        raise ValueError("Chebyshev form is defined for arctan and arctanh")
    _check_order(n)
    x = to_hp(x)
    u = cheb_closed(Kind.SECOND, n - 1).poly
    sign = 1 if n % 2 else -1
    prefactor = sign * factorial(n - 1)
    if func is ArcFunc.ARCTAN:
        r = hp.sqrt(1 + x * x)
        return prefactor / r ** (n + 1) * poly_eval(u, x / r)
    if abs(x) == 1:
        raise PoleError("arctanh derivatives have poles at x = +-1")
    if abs(x) > 1:
        raise DomainError("real Chebyshev form of arctanh needs |x| < 1")
    r = hp.sqrt(1 - x * x)
    y = x / r
    real_part = IntPoly(
        -c if ((n - 1 + j) // 2) % 2 else c for j, c in enumerate(u.coeffs)
    )
    return prefactor / r ** (n + 1) * poly_eval(real_part, y)


def sin_arcsin_form_eval(n: int, x):
    """(-1)^(n+1) (n-1)! sg(x)^(n-1) (1+x^2)^(-n/2) sin(n arcsin(1/sqrt(1+x^2)))"""
    _check_order(n)
    x = to_hp(x)
    r = hp.sqrt(1 + x * x)
    sg = sg_real(x) ** (n - 1)
    sign = 1 if n % 2 else -1
    return sign * factorial(n - 1) * sg / r**n * hp.sin(n * hp.asin(1 / r))
