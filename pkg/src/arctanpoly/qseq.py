"""The arctan numerator polynomials.

q_n is the degree-n integer polynomial for which the (n+1)-th derivative
of arctan equals n! * q_n(x) / (1+x^2)^(n+1).  Two independent
generators are provided and cross-checked by the test suite:

* ``gen_closed_form`` expands the explicit signed binomial sum

      q_n(x) = (-1)^n * sum over even k of  C(n+1, k+1) * (-1)^(k/2) * x^(n-k)

* ``gen_recurrence`` iterates  q_n = -2x*q_{n-1} - (1+x^2)*q_{n-2}
  from q_0 = 1, q_1 = -2x.

The recurrence is the production generator (no binomials, O(n)
polynomial operations); the closed form is the checker.
"""

from dataclasses import dataclass
from fractions import Fraction

from .polycore import IntPolynomial

_TWO_X = IntPolynomial((0, 2))
_ONE_PLUS_X2 = IntPolynomial((1, 0, 1))


@dataclass(frozen=True)
class QSequence:
    """Immutable prefix q_0 ... q_max_n of the sequence."""

    polys: tuple
    max_n: int

    def __post_init__(self):
        if len(self.polys) != self.max_n + 1:
            raise ValueError("polys length must be max_n + 1")


def gen_closed_form(n: int) -> IntPolynomial:
    """Expand q_n from the explicit binomial sum.

    Binomials C(n+1, k+1) are produced by an exact multiplicative
    running product along the row, so nothing overflows and no
    factorial table is needed.

    >>> gen_closed_form(2).coeffs
    (-1, 0, 3)
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = [0] * (n + 1)
    sign = -1 if n % 2 else 1
    binom = n + 1          # C(n+1, 1)
    alt = 1                # (-1)^(k/2)
    k = 0
    while k <= n:
        coeffs[n - k] = sign * alt * binom
        # advance C(n+1, k+1) -> C(n+1, k+3)
        binom = binom * (n - k) // (k + 2)
        binom = binom * (n - k - 1) // (k + 3)
        alt = -alt
        k += 2
    return IntPolynomial(coeffs)


def gen_recurrence(n_max: int) -> QSequence:
    """Generate q_0 ... q_{n_max} by the three-term recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    polys = [IntPolynomial((1,))]
    if n_max >= 1:
        polys.append(IntPolynomial((0, -2)))
    for _ in range(2, n_max + 1):
        polys.append(-(_TWO_X * polys[-1]) - _ONE_PLUS_X2 * polys[-2])
    return QSequence(tuple(polys), n_max)


def value_at_zero(n: int) -> int:
    """q_n(0) without generating the polynomial: 0 for odd n, else (-1)^(n/2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2:
        return 0
    return -1 if (n // 2) % 2 else 1


def coefficient_triangle(n_max: int) -> list:
    """Rows of the sign-stripped coefficient triangle.

    Row n, column k holds (-1)^n times the coefficient of x^(n-k) in
    q_n; every odd column is zero.
    """
    rows = []
    for n, q in enumerate(gen_recurrence(n_max).polys):
        sign = -1 if n % 2 else 1
        rows.append([sign * q.coefficient(n - k) for k in range(n + 1)])
    return rows


def check_derivative_identity(n: int) -> bool:
    """True iff q_n' == -(n+1) * q_{n-1} exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return gen_closed_form(n).differentiate() == gen_closed_form(n - 1) * (-(n + 1))


@dataclass(frozen=True)
class OrthogonalityWitness:
    """Exact infeasibility certificate for a three-term recurrence.

    Coefficient matching of (alpha*x - beta)*q_3 - gamma*q_2 against q_4
    determines alpha from x^4, beta from x^3 and gamma from x^0; the
    remaining x^2 equation cannot hold, which rules out any orthogonal
    three-term form.  ``required``/``achieved`` list the q_4 coefficient
    and the matched value for each power, ascending.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    required: tuple
    achieved: tuple
    mismatch_power: int
    mismatch: Fraction

    @property
    def is_infeasible(self) -> bool:
        return self.mismatch != 0


def orthogonality_counterexample() -> OrthogonalityWitness:
    """Solve the determined part of the matching system and report the residual."""
    q2, q3, q4 = (gen_closed_form(n) for n in (2, 3, 4))
    xq3 = q3.shift(1)
    # alpha*xq3 - beta*q3 - gamma*q2 == q4, matched coefficient-wise
    alpha = Fraction(q4.coefficient(4), xq3.coefficient(4))
    beta = Fraction(alpha * xq3.coefficient(3) - q4.coefficient(3), q3.coefficient(3))
    gamma = Fraction(alpha * xq3.coefficient(0) - beta * q3.coefficient(0) - q4.coefficient(0),
                     q2.coefficient(0))
    required = tuple(Fraction(q4.coefficient(i)) for i in range(5))
    achieved = tuple(alpha * xq3.coefficient(i) - beta * q3.coefficient(i) - gamma * q2.coefficient(i)
                     for i in range(5))
    mismatches = [(i, achieved[i] - required[i]) for i in range(5) if achieved[i] != required[i]]
    power, residual = mismatches[0] if mismatches else (2, Fraction(0))
    return OrthogonalityWitness(alpha, beta, gamma, required, achieved, power, residual)
