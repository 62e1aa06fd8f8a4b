"""The rising-factorial convolution identity as an executable check.

For lam > 0 and m >= 0, with a_k = (lam)_k / k!:

    sum_{k=0}^m a_k a_{m-k}  ==  (2 lam)_m / m!

The left side is the Cauchy-product coefficient of the conjugate factor pair
at phi = 0; the right side is the coefficient comparison of (1-r)^(-2 lam).
Exact mode (rational lam) asserts literal equality; float mode reports a
relative residual.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .coefficients import gamma_ratio_coefficient

__all__ = ["IdentityReport", "identity_lhs", "identity_rhs", "verify", "sweep"]


def _validate(lam, m: int) -> None:
    if isinstance(lam, float):
        if not (math.isfinite(lam) and lam > 0.0):
            raise ValueError("lambda must be positive and finite")
    elif isinstance(lam, (int, Fraction)):
        if lam <= 0:
            raise ValueError("lambda must be positive")
    else:
        raise TypeError(f"lambda must be a Fraction or float, got {type(lam).__name__}")
    if not isinstance(m, int) or m < 0:
        raise ValueError("m must be a nonnegative integer")


@dataclass(frozen=True)
class IdentityReport:
    """One (lam, m) verification: exact reports carry an equality flag, float
    reports carry a relative residual |lhs - rhs| / max(1, |rhs|)."""

    lam: object
    m: int
    lhs: object
    rhs: object
    exact_equal: bool | None = None
    residual: float | None = None

    def passed(self, tolerance: float = 1e-10) -> bool:
        if self.exact_equal is not None:
            return self.exact_equal
        return self.residual <= tolerance


def identity_lhs(lam, m: int):
    """sum_{k=0}^m (lam)_k (lam)_{m-k} / (k! (m-k)!), summed left to right.

    The prefix a_0..a_m is built by the same running product that
    gamma_ratio_coefficient uses, so float values match per-call evaluation
    bit for bit.
    """
    _validate(lam, m)
    prefix = [lam ** 0]
    for k in range(m):
        prefix.append(prefix[-1] * (lam + k) / (k + 1))
    total = lam - lam
    for k in range(m + 1):
        total = total + prefix[k] * prefix[m - k]
    return total


def identity_rhs(lam, m: int):
    """(2 lam)_m / m!: the t = 1 coefficient of the generating function."""
    _validate(lam, m)
    return gamma_ratio_coefficient(2 * lam, m)


def verify(lam, m: int) -> IdentityReport:
    """Check lhs == rhs at one (lam, m); exact equality or float residual.

    In exact mode a False flag would be an implementation defect: the
    identity holds for every lam > 0.
    """
    _validate(lam, m)
    if isinstance(lam, (int, Fraction)):
        lam = Fraction(lam)
        lhs = identity_lhs(lam, m)
        rhs = identity_rhs(lam, m)
        return IdentityReport(lam, m, lhs, rhs, exact_equal=(lhs == rhs))
    lhs = identity_lhs(lam, m)
    rhs = identity_rhs(lam, m)
    residual = abs(lhs - rhs) / max(1.0, abs(rhs))
    return IdentityReport(lam, m, lhs, rhs, residual=residual)


def sweep(lambdas, m_max: int) -> list[IdentityReport]:
    """Reports for the full grid, in (lambda, m) input order.

    Items are independent; the order of the output never depends on how the
    work is scheduled.
    """
    if not isinstance(m_max, int) or m_max < 0:
        raise ValueError("m_max must be a nonnegative integer")
    return [verify(lam, m) for lam in lambdas for m in range(m_max + 1)]
