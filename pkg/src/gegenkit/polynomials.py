"""Dense univariate polynomials over a coefficient field."""

from __future__ import annotations

from .fields import EXACT, CoefficientField, FieldMismatchError

__all__ = ["Polynomial", "polynomial_derivative", "PolynomialCoefficients", "POLY_EXACT"]


class Polynomial:
    """Coefficients in increasing powers of the variable t.

    Trailing zero coefficients are stripped on construction; the canonical
    zero polynomial is the single-entry list [0].
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs=(), field: CoefficientField = EXACT):
        items = [field.coerce(c) for c in coeffs]
        while len(items) > 1 and items[-1] == field.zero:
            items.pop()
        if not items:
            items = [field.zero]
        self.field = field
        self.coeffs = tuple(items)

    @classmethod
    def constant(cls, value, field: CoefficientField = EXACT) -> "Polynomial":
        return cls([field.coerce(value)], field)

    @classmethod
    def variable(cls, field: CoefficientField = EXACT) -> "Polynomial":
        return cls([field.zero, field.one], field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (self.field.zero,)

    def _require_same_field(self, other: "Polynomial") -> None:
        if self.field is not other.field:
            raise FieldMismatchError(
                f"polynomials over {self.field.name} and {other.field.name} cannot be combined"
            )

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_field(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for j in range(n):
            a = self.coeffs[j] if j < len(self.coeffs) else f.zero
            b = other.coeffs[j] if j < len(other.coeffs) else f.zero
            out.append(f.add(a, b))
        return Polynomial(out, f)

    def __neg__(self):
        f = self.field
        return Polynomial([f.negate(c) for c in self.coeffs], f)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._require_same_field(other)
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == f.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.multiply(a, b))
        return Polynomial(out, f)

    __rmul__ = __mul__

    def scale(self, scalar) -> "Polynomial":
        f = self.field
        s = f.coerce(scalar)
        return Polynomial([f.multiply(c, s) for c in self.coeffs], f)

    def evaluate(self, t):
        """Horner evaluation in this polynomial's own field (exact over Fraction)."""
        f = self.field
        x = f.coerce(t)
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.multiply(acc, x), c)
        return acc

    def derivative(self) -> "Polynomial":
        f = self.field
        out = [f.multiply(f.coerce(j), self.coeffs[j]) for j in range(1, len(self.coeffs))]
        return Polynomial(out or [f.zero], f)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.name, self.coeffs))

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


def polynomial_derivative(p: Polynomial) -> Polynomial:
    """Formal d/dt; the degree drops by one (or the result is the zero polynomial)."""
    return p.derivative()


class PolynomialCoefficients(CoefficientField):
    """Polynomials in t acting as series coefficients (exact scalars only).

    This realizes the coefficient contract a third time so a series in r can
    carry whole polynomials in t as coefficients.  Polynomials form a ring,
    not a field: division is defined only by nonzero constants, which is all
    the series machinery ever asks for.
    """

    def __init__(self, scalar_field: CoefficientField = EXACT):
        if scalar_field is not EXACT:
            raise ValueError("polynomial coefficients are supported in exact mode only")
        self.scalar = scalar_field
        self.name = f"poly[{scalar_field.name}]"
        self.zero = Polynomial([scalar_field.zero], scalar_field)
        self.one = Polynomial([scalar_field.one], scalar_field)

    def coerce(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            if value.field is not self.scalar:
                raise FieldMismatchError(
                    f"polynomial over {value.field.name} in a {self.name} series"
                )
            return value
        return Polynomial([self.scalar.coerce(value)], self.scalar)

    def divide(self, a, b):
        divisor = self.coerce(b)
        if divisor.degree > 0:
            raise ValueError("cannot divide series coefficients by a non-constant polynomial")
        c = divisor.coeffs[0]
        if c == self.scalar.zero:
            raise ZeroDivisionError("division by the zero polynomial")
        return self.coerce(a).scale(self.scalar.divide(self.scalar.one, c))


POLY_EXACT = PolynomialCoefficients(EXACT)
