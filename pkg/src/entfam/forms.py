"""Homogeneous binary forms over Q(i) and exact root-structure analysis.

A form of degree ``d`` in the projective coordinates ``(a : b)`` is stored as
the coefficient list ``[c_0, ..., c_d]`` with ``c_j`` multiplying
``a**(d-j) * b**j``.  The identically-zero form is canonicalized to the
single coefficient ``[0]``.

Root counting works over the complex projective line but never touches a
root value: a form is split into a pure ``a`` power (root ``(0:1)``), a pure
``b`` power (root ``(1:0)``), and a core divisible by neither; the core is
dehomogenized to a univariate polynomial and handled with the Euclidean
algorithm.  GCD degrees are independent of the coefficient field's closure,
so the counts are exact over C even though all arithmetic stays in Q(i).
Coefficient growth in the GCD loop is controlled by clearing denominators
and dividing out integer content after every remainder step.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from math import lcm as _int_lcm
from typing import Iterable, Sequence, Union

from .errors import InternalCheckError
from .scalars import ONE, ZERO, GaussianRational


class _InfiniteRootCount:
    """Marker for a root count on an identically-zero form."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "Infinite"


INFINITE = _InfiniteRootCount()

RootCount = Union[int, _InfiniteRootCount]


def is_infinite(count: RootCount) -> bool:
    return isinstance(count, _InfiniteRootCount)


def count_at_least(count: RootCount, bound: int) -> bool:
    return is_infinite(count) or count >= bound


def add_counts(*counts: RootCount) -> RootCount:
    if any(is_infinite(c) for c in counts):
        return INFINITE
    return sum(counts)  # type: ignore[arg-type]


class BinaryForm:
    """Homogeneous polynomial in two variables with GaussianRational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(GaussianRational.coerce(c) for c in coeffs)
        if not cs:
            raise ValueError("a form needs at least one coefficient")
        if all(c.is_zero for c in cs):
            cs = (ZERO,)
        self._coeffs = cs

    @classmethod
    def zero(cls) -> "BinaryForm":
        return cls((0,))

    @classmethod
    def monomial(cls, degree: int, b_power: int, coeff=1) -> "BinaryForm":
        """The form coeff * a**(degree - b_power) * b**b_power."""
        if not 0 <= b_power <= degree:
            raise ValueError("b_power must lie in [0, degree]")
        cs = [ZERO] * (degree + 1)
        cs[b_power] = GaussianRational.coerce(coeff)
        return cls(cs)

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self._coeffs) == 1 and self._coeffs[0].is_zero

    def evaluate(self, a, b) -> GaussianRational:
        a = GaussianRational.coerce(a)
        b = GaussianRational.coerce(b)
        d = self.degree
        total = ZERO
        for j, c in enumerate(self._coeffs):
            if not c.is_zero:
                total = total + c * a ** (d - j) * b**j
        return total

    def derivative_a(self) -> "BinaryForm":
        """Partial derivative with respect to the first coordinate."""
        d = self.degree
        if d == 0:
            return BinaryForm.zero()
        return BinaryForm([(d - j) * self._coeffs[j] for j in range(d)])

    def normalized(self) -> "BinaryForm":
        """Scale so the coefficient of the highest surviving a-power is 1."""
        if self.is_zero:
            return self
        lead = next(c for c in self._coeffs if not c.is_zero)
        if lead == ONE:
            return self
        inv = lead.inverse()
        return BinaryForm([c * inv for c in self._coeffs])

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        return BinaryForm([x + y for x, y in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "BinaryForm":
        return BinaryForm([-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            if self.is_zero or other.is_zero:
                return BinaryForm.zero()
            out = [ZERO] * (self.degree + other.degree + 1)
            for j, cj in enumerate(self._coeffs):
                if cj.is_zero:
                    continue
                for k, ck in enumerate(other._coeffs):
                    if not ck.is_zero:
                        out[j + k] = out[j + k] + cj * ck
            return BinaryForm(out)
        if isinstance(other, (int, Fraction, GaussianRational)):
            s = GaussianRational.coerce(other)
            if s.is_zero:
                return BinaryForm.zero()
            return BinaryForm([c * s for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    # -- identity -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"BinaryForm({self})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        d = self.degree
        parts = []
        for j, c in enumerate(self._coeffs):
            if c.is_zero:
                continue
            mono = _monomial_text(d - j, j)
            if not mono:
                parts.append(str(c))
            elif c == ONE:
                parts.append(mono)
            elif c == -ONE:
                parts.append(f"-{mono}")
            else:
                cs = str(c)
                if "+" in cs[1:] or "-" in cs[1:]:
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        text = parts[0]
        for p in parts[1:]:
            text += p if p.startswith("-") else "+" + p
        return text


def _monomial_text(a_pow: int, b_pow: int) -> str:
    bits = []
    if a_pow:
        bits.append("a" if a_pow == 1 else f"a^{a_pow}")
    if b_pow:
        bits.append("b" if b_pow == 1 else f"b^{b_pow}")
    return "*".join(bits)


# -- univariate helpers -------------------------------------------------------
#
# Polynomials below are plain lists of GaussianRational in ascending powers of
# x = b/a, trimmed so the last entry is nonzero ([] is the zero polynomial).


def _trim(p: Sequence[GaussianRational]) -> list:
    out = list(p)
    while out and out[-1].is_zero:
        out.pop()
    return out


def _poly_deriv(p: Sequence[GaussianRational]) -> list:
    return _trim([j * p[j] for j in range(1, len(p))])


def _poly_divmod(num: Sequence, den: Sequence) -> tuple[list, list]:
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = _trim(num)
    q = [ZERO] * max(len(rem) - len(den) + 1, 0)
    inv_lead = den[-1].inverse()
    while len(rem) >= len(den):
        shift = len(rem) - len(den)
        factor = rem[-1] * inv_lead
        q[shift] = factor
        for j, c in enumerate(den):
            rem[shift + j] = rem[shift + j] - factor * c
        rem = _trim(rem)
    return _trim(q), rem


def _content_reduced(p: Sequence[GaussianRational]) -> list:
    """Scale by a positive rational so coefficients are coprime Gaussian integers."""
    p = _trim(p)
    if not p:
        return []
    den_lcm = 1
    for c in p:
        den_lcm = _int_lcm(den_lcm, c.re.denominator, c.im.denominator)
    num_gcd = 0
    scaled = [den_lcm * c for c in p]
    for c in scaled:
        num_gcd = _int_gcd(num_gcd, abs(c.re.numerator), abs(c.im.numerator))
    if num_gcd > 1:
        scaled = [c / num_gcd for c in scaled]
    return scaled


def _poly_gcd(u: Sequence, v: Sequence) -> list:
    u = _content_reduced(u)
    v = _content_reduced(v)
    while v:
        _, r = _poly_divmod(u, v)
        u, v = v, _content_reduced(r)
    return u


def _split(form: BinaryForm) -> tuple[int, int, list]:
    """Factor out a**alpha and b**beta; return (alpha, beta, core).

    The core is the dehomogenized list [c_jmin .. c_jmax]; its constant and
    leading entries are nonzero, so it carries neither projective root at
    (0:1) nor (1:0).
    """
    cs = form.coefficients
    j_min = next(j for j, c in enumerate(cs) if not c.is_zero)
    j_max = max(j for j, c in enumerate(cs) if not c.is_zero)
    alpha = form.degree - j_max
    beta = j_min
    return alpha, beta, list(cs[j_min : j_max + 1])


def _rehomogenize(core: Sequence[GaussianRational], alpha: int, beta: int) -> BinaryForm:
    return BinaryForm([ZERO] * beta + list(core) + [ZERO] * alpha)


# -- public operations ---------------------------------------------------------


def form_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Greatest common divisor of two forms, leading coefficient normalized to 1.

    The gcd of a binary form with any extension-field gcd agrees in degree, so
    the result's distinct roots are exactly the common complex projective
    roots of ``f`` and ``g``.
    """
    if f.is_zero and g.is_zero:
        raise ValueError("indeterminate gcd: both forms are zero")
    if f.is_zero:
        return g.normalized()
    if g.is_zero:
        return f.normalized()
    af, bf, pf = _split(f)
    ag, bg, pg = _split(g)
    core = _poly_gcd(pf, pg)
    return _rehomogenize(core, min(af, ag), min(bf, bg)).normalized()


def squarefree_part(f: BinaryForm) -> BinaryForm:
    """The product of the distinct linear factors of ``f``, each taken once.

    Pure ``a`` and ``b`` powers are reduced separately (the derivative trick
    does not see the root carried entirely by ``b``); the core is divided by
    gcd(core, core').
    """
    if f.is_zero:
        raise ValueError("squarefree part of the zero form is undefined")
    alpha, beta, core = _split(f)
    if len(core) == 1:
        reduced = [ONE]
    else:
        common = _poly_gcd(core, _poly_deriv(core))
        reduced, rem = _poly_divmod(core, common)
        if rem:
            raise InternalCheckError("squarefree division left a remainder")
    return _rehomogenize(reduced, min(alpha, 1), min(beta, 1)).normalized()


def distinct_root_count(f: BinaryForm) -> RootCount:
    """Number of distinct roots of ``f`` on the complex projective line.

    The zero form vanishes everywhere and yields ``INFINITE``; otherwise the
    count is the degree of the squarefree part, which includes the points
    (1:0) and (0:1) whenever ``b`` or ``a`` divides ``f``.
    """
    if f.is_zero:
        return INFINITE
    return squarefree_part(f).degree


def exact_quotient(f: BinaryForm, g: BinaryForm) -> BinaryForm | None:
    """Return f / g when g divides f exactly, else None."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero form")
    if f.is_zero:
        return BinaryForm.zero()
    af, bf, pf = _split(f)
    ag, bg, pg = _split(g)
    if af < ag or bf < bg:
        return None
    q, r = _poly_divmod(pf, pg)
    if r:
        return None
    return _rehomogenize(q, af - ag, bf - bg)
