"""Exact arithmetic substrate: lattices, cyclotomics, Laurent algebra, series."""

from .cyclotomic import Cyc, format_fraction, parse_fraction
from .intlinalg import (
    IntMatrix,
    nullspace_vector,
    primitive_integer_vector,
    rational_inverse,
    rational_rank,
    rational_solve,
    smith_normal_form,
)
from .laurent import LaurentPoly, exp_add, exp_apply, exp_neg, exp_scale, exp_zero
from .lp import cone_contains, weights_convex
from .ratchar import DenominatorCollapseError, Factor, RationalCharacter, rat_equal, specialize
from .series import GradedSeries, Poly, RatFun, bernoulli, expand_rational, todd_coefficient

__all__ = [
    "Cyc",
    "DenominatorCollapseError",
    "Factor",
    "GradedSeries",
    "IntMatrix",
    "LaurentPoly",
    "Poly",
    "RatFun",
    "RationalCharacter",
    "bernoulli",
    "cone_contains",
    "expand_rational",
    "exp_add",
    "exp_apply",
    "exp_neg",
    "exp_scale",
    "exp_zero",
    "format_fraction",
    "nullspace_vector",
    "parse_fraction",
    "primitive_integer_vector",
    "rat_equal",
    "rational_inverse",
    "rational_rank",
    "rational_solve",
    "smith_normal_form",
    "specialize",
    "todd_coefficient",
    "weights_convex",
]
