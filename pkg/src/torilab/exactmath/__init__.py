"""Exact arithmetic kernel.

Rationals are :class:`fractions.Fraction` throughout; this package adds
univariate polynomials, reduced rational functions and truncated power
series over any coefficient ring.
"""

from fractions import Fraction

from .poly import Poly, format_rational, parse_rational, poly_gcd
from .ratfunc import RationalFunction, ratfun_normalize
from .series import (
    TruncatedSeries,
    generalized_binomial,
    series_coefficient,
    series_div,
    series_exp,
    series_from_rational,
    series_mul,
    series_pow_binomial,
)

BigRational = Fraction

__all__ = [
    "BigRational",
    "Fraction",
    "Poly",
    "RationalFunction",
    "TruncatedSeries",
    "format_rational",
    "generalized_binomial",
    "parse_rational",
    "poly_gcd",
    "ratfun_normalize",
    "series_coefficient",
    "series_div",
    "series_exp",
    "series_from_rational",
    "series_mul",
    "series_pow_binomial",
]
