"""Independent brute-force oracles used to freeze expected values.

Everything here deliberately avoids the library's own series/polynomial
machinery: expansions run over a bivariate coefficient dict, products are
plain nested loops, and closed forms come from trigonometry.
"""

from fractions import Fraction
import math


def falling_binomial(exponent: Fraction, m: int) -> Fraction:
    """C(exponent, m) as the literal falling-factorial product."""
    out = Fraction(1)
    for j in range(m):
        out = out * (exponent - j) / (j + 1)
    return out


def full_convolution(a, b):
    """Complete polynomial product of two coefficient lists (no truncation)."""
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def gegenbauer_coeff_lists(lam: Fraction, n: int):
    """Coefficient lists of C_0..C_n in t via bivariate expansion.

    Expands sum_j C(-lam, j) (r^2 - 2 t r)^j term by term over a dict keyed
    by (power of r, power of t) and collects the coefficient of each r^m.
    """
    acc = {}
    for j in range(n + 1):
        term = {(0, 0): Fraction(1)}
        for _ in range(j):
            grown = {}
            for (ir, it), c in term.items():
                grown[(ir + 2, it)] = grown.get((ir + 2, it), Fraction(0)) + c
                grown[(ir + 1, it + 1)] = grown.get((ir + 1, it + 1), Fraction(0)) - 2 * c
            term = grown
        b = falling_binomial(-lam, j)
        for (ir, it), c in term.items():
            if ir <= n:
                acc[(ir, it)] = acc.get((ir, it), Fraction(0)) + b * c
    lists = []
    for m in range(n + 1):
        deg = max((it for (ir, it) in acc if ir == m), default=0)
        lists.append([acc.get((m, jt), Fraction(0)) for jt in range(deg + 1)])
    return lists


def chebyshev_u_value(m: int, theta: float) -> float:
    """U_m(cos theta) = sin((m+1) theta) / sin(theta); the lam = 1 family."""
    s = math.sin(theta)
    if abs(s) < 1e-12:
        raise ValueError("theta too close to a multiple of pi for the trig form")
    return math.sin((m + 1) * theta) / s
