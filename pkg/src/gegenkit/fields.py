"""Coefficient fields shared by every series and polynomial operation.

Scalars are plain Python values (``fractions.Fraction``, ``float``,
``complex``); a field object supplies the constants, the coercion rules and
the equality notion appropriate to each realization.  Exact arithmetic rides
on the stdlib ``Fraction``, which keeps every value canonical (reduced, with
a positive denominator) after each operation.

This module also owns the scalar literal format used by the CLI and by JSON
payloads: ``"p/q"`` (q > 0) or a plain integer for exact values, standard
decimal/scientific notation for floats.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction

__all__ = [
    "CoefficientField",
    "ExactRationalField",
    "Float64Field",
    "Complex128Field",
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
]


class FieldMismatchError(ValueError):
    """Operands from different coefficient fields were combined."""


_EXACT_LITERAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def _normalize_literal(text: str) -> str:
    # U+2212 (minus sign) shows up in copy-pasted input; treat it as '-'.
    return text.strip().replace("−", "-")


class CoefficientField:
    """Arithmetic strategy over plain Python scalars.

    The default operations defer to the scalars' own operators.  ``divide``
    propagates ``ZeroDivisionError``: division by zero is always a reported
    error, never a silent inf/nan.
    """

    name = "abstract"
    zero: object = None
    one: object = None

    def coerce(self, value):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def subtract(self, a, b):
        return a - b

    def multiply(self, a, b):
        return a * b

    def divide(self, a, b):
        return a / b

    def negate(self, a):
        return -a

    def equals(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return a == self.zero

    def __repr__(self):
        return f"<field {self.name}>"


class ExactRationalField(CoefficientField):
    """Arbitrary-precision rationals (`fractions.Fraction`); equality is exact."""

    name = "exact"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, float):
            # Binary floats are rationals; the conversion is exact.
            if not math.isfinite(value):
                raise ValueError(f"cannot coerce non-finite float {value!r} to a rational")
            return Fraction(value)
        if isinstance(value, str):
            return parse_exact(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into the exact field")


class Float64Field(CoefficientField):
    """IEEE-754 doubles with an explicit approximate-equality predicate."""

    name = "float64"
    zero = 0.0
    one = 1.0

    def coerce(self, value) -> float:
        if isinstance(value, float):
            return value
        if isinstance(value, (int, Fraction)):
            return float(value)
        if isinstance(value, str):
            return float(_normalize_literal(value))
        raise TypeError(f"cannot coerce {type(value).__name__} into the float64 field")

    def approx_equals(self, a, b, rel_tol: float = 1e-12, abs_tol: float = 0.0) -> bool:
        return math.isclose(a, b, rel_tol=rel_tol, abs_tol=abs_tol)


class Complex128Field(CoefficientField):
    """Complex doubles; hosts the e^{±i m φ} phases of the conjugate factor pair."""

    name = "complex128"
    zero = complex(0.0)
    one = complex(1.0)

    def coerce(self, value) -> complex:
        if isinstance(value, complex):
            return value
        if isinstance(value, (int, float)):
            return complex(value)
        if isinstance(value, Fraction):
            return complex(float(value))
        raise TypeError(f"cannot coerce {type(value).__name__} into the complex128 field")

    def approx_equals(self, a, b, rel_tol: float = 1e-12, abs_tol: float = 0.0) -> bool:
        return cmath.isclose(a, b, rel_tol=rel_tol, abs_tol=abs_tol)


EXACT = ExactRationalField()
FLOAT64 = Float64Field()
COMPLEX128 = Complex128Field()


def field_for(value) -> CoefficientField:
    """Pick the field a bare scalar naturally lives in."""
    if isinstance(value, (int, Fraction)):
        return EXACT
    if isinstance(value, float):
        return FLOAT64
    if isinstance(value, complex):
        return COMPLEX128
    raise TypeError(f"no coefficient field for {type(value).__name__}")


def literal_kind(text: str) -> str:
    """Classify a scalar literal: 'fraction', 'integer' or 'float'.

    Integer literals are mode-neutral (they denote the same value in both
    fields); 'p/q' demands exact mode and anything with a decimal point or an
    exponent demands float mode.  Raises ValueError for malformed input.
    """
    s = _normalize_literal(text)
    if _EXACT_LITERAL.match(s):
        return "fraction" if "/" in s else "integer"
    try:
        float(s)
    except ValueError:
        raise ValueError(f"not a scalar literal: {text!r}") from None
    return "float"


def parse_exact(text: str) -> Fraction:
    """Parse 'p/q' (q > 0) or a plain integer into a canonical Fraction."""
    s = _normalize_literal(text)
    if not _EXACT_LITERAL.match(s):
        raise ValueError(f"not an exact rational literal: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational literal: {text!r}") from None


def parse_scalar(text: str):
    """Parse a literal into a Fraction (exact forms) or a float (decimal forms)."""
    kind = literal_kind(text)
    if kind == "float":
        return float(_normalize_literal(text))
    return parse_exact(text)


def format_exact(value) -> str:
    """Serialize an exact scalar as 'p/q'; the denominator is always written."""
    f = EXACT.coerce(value)
    return f"{f.numerator}/{f.denominator}"


def format_float(value: float) -> str:
    """Shortest decimal that round-trips bit-exactly (Python's repr)."""
    return repr(float(value))


def format_scalar(value) -> str:
    if isinstance(value, (int, Fraction)):
        return format_exact(value)
    if isinstance(value, float):
        return format_float(value)
    raise TypeError(f"cannot serialize {type(value).__name__} as a scalar")
