"""Gegenbauer polynomials over exact and float coefficient fields.

The package computes the polynomials by three independent routes (symbolic
generating-function expansion, three-term recurrence, conjugate-factor
convolution at t = cos phi), bounds truncation tails with the t = 1 majorant,
and verifies the rising-factorial convolution identity

    sum_{k=0}^m (lam)_k (lam)_{m-k} / (k! (m-k)!)  ==  (2 lam)_m / m!

exactly over the rationals and to tolerance over floats.
"""

from .coefficients import (
    binomial_coefficient,
    gamma_ratio_coefficient,
    pochhammer,
    signed_binomial,
)
from .fields import (
    COMPLEX128,
    EXACT,
    FLOAT64,
    CoefficientField,
    FieldMismatchError,
    field_for,
    format_exact,
    format_float,
    format_scalar,
    literal_kind,
    parse_exact,
    parse_scalar,
)
from .gegenbauer import (
    ConjugateValue,
    DerivativeInterchangeReport,
    GegenbauerParams,
    GegenbauerTable,
    Route,
    derivative_interchange_check,
    evaluate,
    majorant_tail,
    table_via_composition,
    table_via_recurrence,
    value_at_one,
    value_via_conjugate_product,
)
from .identity import IdentityReport, identity_lhs, identity_rhs, sweep, verify
from .polynomials import POLY_EXACT, Polynomial, PolynomialCoefficients, polynomial_derivative
from .series import (
    TruncatedSeries,
    binomial_series,
    compose_inner_polynomial,
    scale_argument,
    series_add,
    series_mul,
    series_scale,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientField",
    "EXACT",
    "FLOAT64",
    "COMPLEX128",
    "FieldMismatchError",
    "field_for",
    "parse_exact",
    "parse_scalar",
    "literal_kind",
    "format_exact",
    "format_float",
    "format_scalar",
    "pochhammer",
    "gamma_ratio_coefficient",
    "signed_binomial",
    "binomial_coefficient",
    "Polynomial",
    "polynomial_derivative",
    "PolynomialCoefficients",
    "POLY_EXACT",
    "TruncatedSeries",
    "series_add",
    "series_mul",
    "series_scale",
    "scale_argument",
    "binomial_series",
    "compose_inner_polynomial",
    "Route",
    "GegenbauerParams",
    "GegenbauerTable",
    "ConjugateValue",
    "DerivativeInterchangeReport",
    "table_via_composition",
    "table_via_recurrence",
    "value_via_conjugate_product",
    "value_at_one",
    "evaluate",
    "majorant_tail",
    "derivative_interchange_check",
    "IdentityReport",
    "identity_lhs",
    "identity_rhs",
    "verify",
    "sweep",
]
