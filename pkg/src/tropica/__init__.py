"""tropica: exact tropical commutative algebra workbench."""

from .scalars import BOTTOM, ONE, TropScalar, is_bottom, scalar, trop_add, trop_mul, trop_sum
from .polynomials import (
    LAURENT,
    POLY,
    Pair,
    Polynomial,
    scalar_pair_mul,
    twisted_mul,
    twisted_pow,
    unit_pair,
)
from .parsing import ParseError, format_polynomial, parse_polynomial

__all__ = [
    "BOTTOM",
    "ONE",
    "LAURENT",
    "POLY",
    "Pair",
    "ParseError",
    "Polynomial",
    "TropScalar",
    "format_polynomial",
    "is_bottom",
    "parse_polynomial",
    "scalar",
    "scalar_pair_mul",
    "trop_add",
    "trop_mul",
    "trop_sum",
    "twisted_mul",
    "twisted_pow",
    "unit_pair",
]
