"""Dense univariate polynomials with exact coefficients.

The polynomial a0 + a1*x + ... + an*x**n is stored as the ascending
coefficient tuple (a0, a1, ..., an) with a nonzero trailing entry; the
zero polynomial is the empty tuple and reports degree ``None``.
:class:`IntPolynomial` holds arbitrary-precision integers,
:class:`RatPolynomial` holds :class:`fractions.Fraction` values, which
are kept in lowest terms with positive denominator by construction.

No operation ever rounds: sums, products, formal derivatives and
rational evaluation are exact.  Instances are immutable after
construction, so they can be shared freely between threads.
"""

import operator
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

Exact = Union[int, Fraction]


class _DensePolynomial:
    """Arithmetic shared by both coefficient domains."""

    __slots__ = ("_coeffs",)

    @staticmethod
    def _coerce(value):
        raise NotImplementedError

    def __init__(self, coeffs: Iterable = ()):
        cs = [self._coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple:
        """Ascending coefficients; empty for the zero polynomial."""
        return self._coeffs

    @property
    def degree(self):
        """Degree of the polynomial, ``None`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, power: int) -> Exact:
        """Coefficient of x**power (zero outside the stored range)."""
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return 0

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash((type(self).__name__, self._coeffs))

    def __repr__(self):
        return f"{type(self).__name__}({list(self._coeffs)!r})"

    def __neg__(self):
        return type(self)(-c for c in self._coeffs)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return type(self)(out)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if type(other) is type(self):
            a, b = self._coeffs, other._coeffs
            if not a or not b:
                return type(self)()
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] += ai * bj
            return type(self)(out)
        try:
            s = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return type(self)(c * s for c in self._coeffs)

    __rmul__ = __mul__

    def shift(self, k: int):
        """Multiply by x**k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if not self._coeffs:
            return self
        return type(self)((0,) * k + self._coeffs)

    def differentiate(self):
        """Exact formal derivative."""
        return type(self)(i * c for i, c in enumerate(self._coeffs) if i)

    def eval_rational(self, x: Rational) -> Fraction:
        """Exact Horner evaluation at a rational point.

        Floats are rejected: the whole point of this entry is that the
        result carries no rounding at all.
        """
        if isinstance(x, float) or not isinstance(x, Rational):
            raise TypeError(f"exact evaluation needs a rational point, got {type(x).__name__}")
        acc = Fraction(0)
        xf = Fraction(x)
        for c in reversed(self._coeffs):
            acc = acc * xf + c
        return acc

    def eval_float(self, x: float) -> float:
        """Horner evaluation in double precision.

        Coefficients are converted to double at use; the conversion is
        lossy for magnitudes above 2**53.
        """
        acc = 0.0
        x = float(x)
        for c in reversed(self._coeffs):
            acc = acc * x + float(c)
        return acc


class IntPolynomial(_DensePolynomial):
    """Polynomial over arbitrary-precision integers.

    >>> p = IntPolynomial([-1, 0, 3])        # 3x^2 - 1
    >>> p.degree, p.coeffs
    (2, (-1, 0, 3))
    >>> (p * p).coeffs                       # (3x^2-1)^2
    (1, 0, -6, 0, 9)
    """

    __slots__ = ()

    @staticmethod
    def _coerce(value) -> int:
        return operator.index(value)

    def eval_rational(self, x: Rational) -> Fraction:
        # Integer Horner on numerator/denominator; one gcd at the end
        # instead of one per step, which matters for degree ~500.
        if isinstance(x, float) or not isinstance(x, Rational):
            raise TypeError(f"exact evaluation needs a rational point, got {type(x).__name__}")
        if not self._coeffs:
            return Fraction(0)
        xf = Fraction(x)
        a, b = xf.numerator, xf.denominator
        acc = self._coeffs[-1]
        bp = 1
        for c in self._coeffs[-2::-1]:
            bp *= b
            acc = acc * a + c * bp
        return Fraction(acc, bp)


class RatPolynomial(_DensePolynomial):
    """Polynomial over exact rationals in lowest terms."""

    __slots__ = ()

    @staticmethod
    def _coerce(value) -> Fraction:
        if isinstance(value, float) or not isinstance(value, Rational):
            raise TypeError(f"rational coefficient expected, got {type(value).__name__}")
        return Fraction(value)
