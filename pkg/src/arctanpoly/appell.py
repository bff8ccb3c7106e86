"""Monic normalization p_n = (-1)^n / (n+1) * q_n.

The normalized sequence satisfies p_n' = n * p_{n-1}, i.e. it is an
Appell sequence, and it carries the derivatives of arctan just as well:
arctan^(n)(x) = (-1)^(n-1) * n! * p_{n-1}(x) / (1+x^2)^n.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .polycore import RatPolynomial
from .qseq import gen_closed_form, gen_recurrence


@dataclass(frozen=True)
class AppellSequence:
    """Immutable prefix p_0 ... p_max_n; every member is monic of degree n."""

    polys: tuple
    max_n: int


def gen_appell(n_max: int) -> AppellSequence:
    """Production construction: scale the recurrence-generated q_n."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    qs = gen_recurrence(n_max)
    polys = tuple(RatPolynomial(q.coeffs) * Fraction((-1) ** n, n + 1)
                  for n, q in enumerate(qs.polys))
    return AppellSequence(polys, n_max)


def gen_appell_closed_form(n: int) -> RatPolynomial:
    """Checker construction: the explicit sum with coefficients C(n,k)*(-1)^(k/2)/(k+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(0, n + 1, 2):
        alt = -1 if (k // 2) % 2 else 1
        coeffs[n - k] = Fraction(alt * math.comb(n, k), k + 1)
    return RatPolynomial(coeffs)


def check_appell_property(n: int) -> bool:
    """True iff p_n' == n * p_{n-1} exactly over the rationals."""
    if n < 1:
        raise ValueError("n must be >= 1")
    polys = gen_appell(n).polys
    return polys[n].differentiate() == polys[n - 1] * n


def arctan_derivative_via_appell(n: int, x: Rational) -> Fraction:
    """Exact n-th derivative of arctan at a rational point, through p_{n-1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    sign = 1 if (n - 1) % 2 == 0 else -1
    p = RatPolynomial(gen_closed_form(n - 1).coeffs) * Fraction(sign, n)
    xf = Fraction(x)
    return sign * math.factorial(n) * p.eval_rational(xf) / (1 + xf * xf) ** n
