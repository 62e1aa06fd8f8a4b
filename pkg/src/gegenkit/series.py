"""Truncated formal power series in the expansion variable r.

A series of order N stores the coefficients c_0..c_N of sum c_m r^m and all
arithmetic happens modulo r^(N+1).  The order is the truncation order, not
the degree: trailing zeros are data and are never stripped.  Binary
operations truncate to the smaller operand's order, so every retained
coefficient is fully determined -- nothing is padded with invented zeros.
"""

from __future__ import annotations

from .fields import COMPLEX128, CoefficientField, FieldMismatchError, field_for

__all__ = [
    "TruncatedSeries",
    "series_add",
    "series_mul",
    "series_scale",
    "scale_argument",
    "binomial_series",
    "compose_inner_polynomial",
]


class TruncatedSeries:
    """Coefficients c_0..c_N over a coefficient field; index m holds the r^m term."""

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs, field: CoefficientField):
        items = tuple(field.coerce(c) for c in coeffs)
        if not items:
            raise ValueError("a truncated series needs at least the constant coefficient")
        self.field = field
        self.coeffs = items

    @classmethod
    def zero(cls, field: CoefficientField, order: int) -> "TruncatedSeries":
        return cls([field.zero] * (order + 1), field)

    @classmethod
    def one(cls, field: CoefficientField, order: int) -> "TruncatedSeries":
        return cls([field.one] + [field.zero] * order, field)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        return series_add(self, other)

    def __mul__(self, other):
        return series_mul(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.name, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, field={self.field.name})"


def _require_same_field(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.field is not b.field:
        raise FieldMismatchError(
            f"series over {a.field.name} and {b.field.name} cannot be combined"
        )


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise sum, truncated to min(a.order, b.order)."""
    _require_same_field(a, b)
    f = a.field
    return TruncatedSeries([f.add(x, y) for x, y in zip(a.coeffs, b.coeffs)], f)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product: c_m = sum_{k=0}^m a_k b_{m-k}, for m up to min(order).

    For each output index the terms accumulate in increasing k, so float
    results are reproducible run to run.  Exact zero operands are skipped;
    that changes no value and makes products against sparse factors cheap.
    """
    _require_same_field(a, b)
    f = a.field
    n = min(a.order, b.order)
    out = [f.zero] * (n + 1)
    for i in range(n + 1):
        ai = a.coeffs[i]
        if f.is_zero(ai):
            continue
        for j in range(n + 1 - i):
            bj = b.coeffs[j]
            if not f.is_zero(bj):
                out[i + j] = f.add(out[i + j], f.multiply(ai, bj))
    return TruncatedSeries(out, f)


def series_scale(a: TruncatedSeries, scalar) -> TruncatedSeries:
    """Multiply every coefficient by a fixed scalar of the same field."""
    f = a.field
    s = f.coerce(scalar)
    return TruncatedSeries([f.multiply(c, s) for c in a.coeffs], f)


def scale_argument(a: TruncatedSeries, factor, field: CoefficientField | None = None) -> TruncatedSeries:
    """Substitute r -> factor * r: coefficient m picks up factor^m.

    Passing a complex factor promotes a real series into the complex field;
    this is how x = -r e^{±i φ} enters a binomial expansion, by coefficient
    scaling rather than composition.
    """
    if field is None:
        field = COMPLEX128 if isinstance(factor, complex) else a.field
    s = field.coerce(factor)
    out = []
    power = field.one
    for c in a.coeffs:
        out.append(field.multiply(field.coerce(c), power))
        power = field.multiply(power, s)
    return TruncatedSeries(out, field)


def binomial_series(exponent, order: int, field: CoefficientField | None = None) -> TruncatedSeries:
    """Expansion of (1 + x)^exponent through x^order.

    coeffs[m] = C(exponent, m), built by the falling-factorial running
    product; for exponent = -lam this equals (-1)^m (lam)_m / m!.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    f = field if field is not None else field_for(exponent)
    e = f.coerce(exponent)
    coeffs = [f.one]
    c = f.one
    for m in range(1, order + 1):
        c = f.divide(f.multiply(c, f.subtract(e, f.coerce(m - 1))), f.coerce(m))
        coeffs.append(c)
    return TruncatedSeries(coeffs, f)


def compose_inner_polynomial(outer_coeffs, inner: TruncatedSeries, order: int) -> TruncatedSeries:
    """Truncated composition sum_{j=0}^order outer_coeffs(j) * inner^j.

    The inner series must have zero constant term (valuation >= 1), so powers
    beyond inner^order cannot touch coefficients of r^order and the sum is
    finite and exact.  The inner operand denotes a polynomial in r: if it was
    built at a lower order its missing coefficients are genuinely zero and it
    is widened accordingly.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    f = inner.field
    if not f.is_zero(inner.coeffs[0]):
        raise ValueError("inner polynomial must have zero constant term")
    padded = list(inner.coeffs[: order + 1])
    padded += [f.zero] * (order + 1 - len(padded))
    widened = TruncatedSeries(padded, f)

    acc_coeffs = [f.coerce(outer_coeffs(0))] + [f.zero] * order
    acc = TruncatedSeries(acc_coeffs, f)
    power = TruncatedSeries.one(f, order)
    for j in range(1, order + 1):
        power = series_mul(power, widened)
        acc = series_add(acc, series_scale(power, outer_coeffs(j)))
    return acc
