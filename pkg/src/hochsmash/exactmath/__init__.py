"""Exact arithmetic: rationals, Q(zeta_m), polynomials and truncated series."""

from .cyclotomic import (
    CyclotomicNumber,
    Rational,
    as_rational,
    cyc_add,
    cyc_inv,
    cyc_mul,
    cyc_neg,
    cyclotomic_polynomial,
    embed,
    euler_phi,
    format_cyclotomic,
    parse_cyclotomic,
    rational,
)
from .polynomial import ZERO_DEGREE, Polynomial, poly_gcd, poly_xgcd
from .series import PowerSeries, RationalFunction, laurent_expand

__all__ = [
    "CyclotomicNumber",
    "Polynomial",
    "PowerSeries",
    "Rational",
    "RationalFunction",
    "ZERO_DEGREE",
    "as_rational",
    "cyc_add",
    "cyc_inv",
    "cyc_mul",
    "cyc_neg",
    "cyclotomic_polynomial",
    "embed",
    "euler_phi",
    "format_cyclotomic",
    "laurent_expand",
    "parse_cyclotomic",
    "poly_gcd",
    "poly_xgcd",
    "rational",
]
