"""Chebyshev polynomials of the first and second kind, exactly.

Both kinds come from the shared recurrence P_{n+1} = 2x*P_n - P_{n-1}
(T_0 = 1, T_1 = x; U_0 = 1, U_1 = 2x).  ``cheb_T_via_formula`` expands
the independent monomial sum

    T_n(x) = sum_{k=0..n//2} C(n, 2k) * (x^2 - 1)^k * x^(n-2k)

and exists purely so the recurrence can be tested against it.
"""

import enum
import math

from .polycore import IntPolynomial


class ChebKind(enum.Enum):
    FIRST_KIND = "T"
    SECOND_KIND = "U"


def cheb(kind: ChebKind, n: int) -> IntPolynomial:
    """Exact coefficients of T_n or U_n via the two-term recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if not isinstance(kind, ChebKind):
        raise TypeError("kind must be a ChebKind")
    prev = IntPolynomial((1,))
    if n == 0:
        return prev
    cur = IntPolynomial((0, 1)) if kind is ChebKind.FIRST_KIND else IntPolynomial((0, 2))
    two_x = IntPolynomial((0, 2))
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def cheb_T_via_formula(n: int) -> IntPolynomial:
    """T_n from the literal monomial expansion (test oracle for ``cheb``)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = IntPolynomial()
    power = IntPolynomial((1,))        # (x^2 - 1)^k
    x2_minus_1 = IntPolynomial((-1, 0, 1))
    for k in range(n // 2 + 1):
        acc = acc + (power * math.comb(n, 2 * k)).shift(n - 2 * k)
        power = power * x2_minus_1
    return acc
