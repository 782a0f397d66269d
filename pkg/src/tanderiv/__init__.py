"""Exact higher derivatives of tan/cot/tanh/coth and arctan/arccot/arctanh/arccoth."""

from .arc_derivatives import (
    ArcDerivForm,
    ArcFunc,
    arc_deriv,
    arc_deriv_at_zero,
    arc_deriv_eval,
    cheb_form_eval,
    sin_arcsin_form_eval,
)
from .chebyshev import ChebPoly, Kind, cheb_closed, cheb_recurrence, sin_n_arcsin, t_from_u
from .errors import DomainError, PoleError
from .polycore import IntPoly, binomial, poly_eval
from .signum import sg_complex, sg_real
from .tangent_triangle import (
    TanDerivExpansion,
    TanFunc,
    eval_tan_family_deriv,
    tan_family_deriv,
    tangent_number,
    triangle_coeff,
)

__version__ = "0.1.0"
