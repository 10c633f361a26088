"""Exact scalars: the field Q(i) of Gaussian rationals.

Amplitudes, matrix entries, and polynomial coefficients throughout this
package are Gaussian rationals, so every rank, separability, and
root-multiplicity decision reduces to an exact zero test instead of a
floating-point tolerance judgment.

The real and imaginary parts are :class:`fractions.Fraction` values, which
already guarantee the canonical form (reduced, positive denominator, zero as
0/1).  Literal text syntax, shared with the expression parser in
:mod:`entfam.dirac`: ``3``, ``-2/5``, ``i``, ``-i``, ``2/3i``, ``1+2i``,
``(1-i)/2``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from math import lcm as _int_lcm
from typing import Union

# Exact rational scalar; Fraction keeps gcd(|num|, den) = 1 and den > 0.
Rational = Fraction

RationalLike = Union[int, Fraction]


class GaussianRational:
    """A complex number ``re + im*i`` with exact rational components.

    Values are immutable and hashable.  Arithmetic is exact field
    arithmetic; ``int`` and ``Fraction`` operands mix freely.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re: RationalLike | str = 0, im: RationalLike | str = 0):
        self._re = re if type(re) is Fraction else Fraction(re)
        self._im = im if type(im) is Fraction else Fraction(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @property
    def is_zero(self) -> bool:
        return not self._re and not self._im

    # -- conversions ------------------------------------------------------

    @staticmethod
    def coerce(value: "GaussianRational | RationalLike") -> "GaussianRational":
        """Convert an int or Fraction to a GaussianRational; pass through."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        raise TypeError(f"cannot treat {value!r} as a Gaussian rational")

    def to_complex(self) -> complex:
        return complex(self._re) + 1j * complex(self._im)

    def __complex__(self) -> complex:
        return self.to_complex()

    # -- ring/field structure ---------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    def norm_sq(self) -> Fraction:
        """Exact squared modulus re**2 + im**2."""
        return self._re * self._re + self._im * self._im

    def inverse(self) -> "GaussianRational":
        n = self.norm_sq()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self._re / n, -self._im / n)

    def __add__(self, other):
        other = _as_gr(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gr(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = _as_gr(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_gr(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self._re * other._re - self._im * other._im,
            self._re * other._im + self._im * other._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gr(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_gr(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self._re, -self._im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _as_gr(other)
        if other is None:
            return NotImplemented
        return self._re == other._re and self._im == other._im

    def __hash__(self) -> int:
        # Real values must hash like their Fraction/int counterparts.
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if not self._im:
            return str(self._re)
        if not self._re:
            return _imag_text(self._im)
        if self._im > 0:
            return f"{self._re}+{_imag_text(self._im)}"
        return f"{self._re}-{_imag_text(-self._im)}"

    def __repr__(self) -> str:
        return f"GaussianRational({self._re!r}, {self._im!r})"


def _imag_text(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}i"


def _as_gr(value) -> GaussianRational | None:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def primitive_rescaled(values) -> tuple:
    """Scale a vector by a positive rational to coprime Gaussian-integer entries.

    Rescaling never changes a rank, a span, or a root locus, but it keeps the
    integers small in downstream exact arithmetic.
    """
    vs = tuple(GaussianRational.coerce(v) for v in values)
    den = 1
    for v in vs:
        den = _int_lcm(den, v.re.denominator, v.im.denominator)
    scaled = [den * v for v in vs]
    num = 0
    for v in scaled:
        num = _int_gcd(num, abs(v.re.numerator), abs(v.im.numerator))
    if num > 1:
        scaled = [v / num for v in scaled]
    return tuple(scaled)
