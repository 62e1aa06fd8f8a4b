"""Rising-factorial products and the Gamma-ratio coefficients built from them.

The Gamma function is never evaluated on its own here: every Gamma expression
used downstream is a ratio with an integer offset, which collapses to a finite
product.  That keeps values exact over the rationals and overflow-free over
floats.

All functions are generic over the scalar type: pass a ``Fraction`` (or int)
for exact results, a ``float`` for double precision.
"""

from __future__ import annotations

__all__ = [
    "pochhammer",
    "gamma_ratio_coefficient",
    "signed_binomial",
    "binomial_coefficient",
]


def _check_index(m: int) -> None:
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"index must be a nonnegative integer, got {m!r}")


def pochhammer(x, m: int):
    """Rising factorial (x)_m = x (x+1) ... (x+m-1); the empty product is 1."""
    _check_index(m)
    result = x ** 0
    for j in range(m):
        result = result * (x + j)
    return result


def gamma_ratio_coefficient(lam, m: int):
    """(lam)_m / m!, computed as the running product of (lam+k)/(k+1).

    The incremental form keeps float evaluation overflow-free for any lam
    where the final value fits; over the rationals it equals
    pochhammer(lam, m) / m! exactly.
    """
    _check_index(m)
    c = lam ** 0
    for k in range(m):
        c = c * (lam + k) / (k + 1)
    return c


def signed_binomial(lam, m: int):
    """Binomial coefficient with negated upper index: C(-lam, m) = (-1)^m (lam)_m / m!."""
    _check_index(m)
    c = gamma_ratio_coefficient(lam, m)
    return -c if m % 2 else c


def binomial_coefficient(exponent, m: int):
    """Generalized C(exponent, m) via the falling-factorial product."""
    _check_index(m)
    c = exponent ** 0
    for j in range(m):
        c = c * (exponent - j) / (j + 1)
    return c
