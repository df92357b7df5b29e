"""Exact integer and rational linear algebra."""

from .conjugacy import (
    characteristic_polynomial,
    companion,
    conjugator_space,
    frobenius_form,
    matrix_order,
    minimal_polynomial,
    rational_invariant_factors,
)
from .matrix import RatMatrix, as_vector, common_denominator, is_integral, nullspace, rank, to_fraction
from .normal_forms import hnf, invariant_factors, snf, xgcd
from .poly import IntPolynomial, QPoly, cyclotomic, euler_phi

__all__ = [
    "IntPolynomial",
    "QPoly",
    "RatMatrix",
    "as_vector",
    "characteristic_polynomial",
    "common_denominator",
    "companion",
    "conjugator_space",
    "cyclotomic",
    "euler_phi",
    "frobenius_form",
    "hnf",
    "invariant_factors",
    "is_integral",
    "matrix_order",
    "minimal_polynomial",
    "nullspace",
    "rank",
    "rational_invariant_factors",
    "snf",
    "to_fraction",
    "xgcd",
]
