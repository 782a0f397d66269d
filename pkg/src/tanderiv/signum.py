"""The sign function sg, with sg(0) = +1, for real and complex arguments.

For complex x, sg(x) = sqrt(x^2) / x with the principal square root
(argument in (-pi, pi]).  That reduces to the sign of Re(x), with ties on
the imaginary axis broken by Im(x) >= 0.  The branch table is what we
evaluate; :func:`sg_sqrt_formula` is the literal formula, kept for checks.
"""

from __future__ import annotations

from .errors import DomainError
from .polycore import hp, to_hp

__all__ = [
    "sg_real",
    "sg_complex",
    "sg_sqrt_formula",
    "arctan_c",
    "arccot_c",
    "arctanh_c",
    "arccoth_c",
    "arctan_arccot_identity_residual",
    "arctanh_arccoth_identity_residual",
]


def sg_real(x) -> int:
    return 1 if x >= 0 else -1


def sg_complex(x) -> int:
    re, im = x.real, x.imag
    if re > 0:
        return 1
    if re < 0:
        return -1
    return 1 if im >= 0 else -1


def sg_sqrt_formula(x) -> int:
    """sqrt(x^2)/x, rounded to the nearest of +1/-1 (1 at x = 0)."""
    z = hp.mpc(x)
    if z == 0:
        return 1
    q = hp.sqrt(z * z) / z
    return 1 if q.real > 0 else -1


# Complex inverse functions from their logarithmic definitions, principal log.


def arctan_c(x):
    x = hp.mpc(x)
    j = hp.mpc(0, 1)
    return -j / 2 * hp.log((1 + j * x) / (1 - j * x))


def arccot_c(x):
    """arctan(1/x) in the form -i/2 log((ix - 1)/(ix + 1))."""
    x = hp.mpc(x)
    j = hp.mpc(0, 1)
    return -j / 2 * hp.log((j * x - 1) / (j * x + 1))


def arctanh_c(x):
    x = hp.mpc(x)
    return hp.log((1 + x) / (1 - x)) / 2


def arccoth_c(x):
    x = hp.mpc(x)
    return hp.log((x + 1) / (x - 1)) / 2


def arctan_arccot_identity_residual(x):
    """|arccot(x) + arctan(x) - (pi/2) sg(x)|."""
    z = to_hp(x)
    if hasattr(z, "imag") and z.imag != 0:
        if z.real == 0 and abs(z.imag) == 1:
            raise DomainError("x = +-i is a logarithmic singularity")
        sg = sg_complex(z)
    else:
        # real x, including x = 0 where the log form gives arccot(0) = pi/2
        sg = sg_real(z.real)
    return abs(arccot_c(z) + arctan_c(z) - hp.pi / 2 * sg)


def arctanh_arccoth_identity_residual(x):
    """|arccoth(x) - arctanh(x) - (pi/2) i sg(ix)|."""
    z = hp.mpc(x)
    if z == 0 or z == 1 or z == -1:
        raise DomainError(f"x = {x} is a branch point")
    sg = sg_complex(hp.mpc(0, 1) * z)
    return abs(arccoth_c(z) - arctanh_c(z) - hp.pi / 2 * hp.mpc(0, sg))
