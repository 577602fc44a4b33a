"""Exact arithmetic kernel: scalars, polynomials, series, float diagnostics."""

from .floats import (
    DEFAULT_PRECISION,
    eval_poly,
    eval_rf_complex,
    find_poly_roots,
    get_precision,
    precision,
    set_precision,
    to_mpc,
    to_mpf,
)
from .poly import Polynomial, RationalFunction, poly_product
from .scalars import Rational, format_rational, parse_rational, rational_normalize
from .series import (
    BuiltinSource,
    ExplicitSource,
    PowerSeries,
    RationalSource,
    SeriesSource,
    SumSource,
    builtin_series,
    parse_series_document,
    series_from_moments,
    series_of_rational_function,
)

__all__ = [
    "DEFAULT_PRECISION",
    "BuiltinSource",
    "ExplicitSource",
    "Polynomial",
    "PowerSeries",
    "Rational",
    "RationalFunction",
    "RationalSource",
    "SeriesSource",
    "SumSource",
    "builtin_series",
    "eval_poly",
    "eval_rf_complex",
    "find_poly_roots",
    "format_rational",
    "get_precision",
    "parse_rational",
    "parse_series_document",
    "poly_product",
    "precision",
    "rational_normalize",
    "series_from_moments",
    "series_of_rational_function",
    "set_precision",
    "to_mpc",
    "to_mpf",
]
