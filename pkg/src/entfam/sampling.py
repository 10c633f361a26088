"""Deterministic random generators for states, operators, and pencils.

Everything draws from a caller-supplied :class:`random.Random`, so every
check that consumes randomness is reproducible from its seed.  Entries are
kept small (numerators and denominators in [-3, 3]) to bound exact-arithmetic
growth while still exploring orbits.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .pencil import Pencil
from .scalars import GaussianRational
from .states import ExactMatrix, LocalOperator, PureState, det2, matrix_rank


def random_fraction(rng: Random, bound: int = 3) -> Fraction:
    num = rng.randint(-bound, bound)
    den = 0
    while den == 0:
        den = rng.randint(-bound, bound)
    return Fraction(num, den)


def random_scalar(rng: Random, bound: int = 3) -> GaussianRational:
    return GaussianRational(random_fraction(rng, bound), random_fraction(rng, bound))


def random_state(rng: Random, n: int, bound: int = 3) -> PureState:
    while True:
        amps = [random_scalar(rng, bound) for _ in range(1 << n)]
        if any(not a.is_zero for a in amps):
            return PureState(n, amps)


def random_integer_vector(rng: Random, length: int, lo: int = -3, hi: int = 3) -> tuple:
    return tuple(GaussianRational(rng.randint(lo, hi)) for _ in range(length))


def random_invertible_2x2(rng: Random, bound: int = 3):
    while True:
        m = (
            (random_scalar(rng, bound), random_scalar(rng, bound)),
            (random_scalar(rng, bound), random_scalar(rng, bound)),
        )
        if not det2(m).is_zero:
            return m


def random_local_operator(rng: Random, n: int, bound: int = 3) -> LocalOperator:
    return LocalOperator([random_invertible_2x2(rng, bound) for _ in range(n)])


def random_integer_pencil(rng: Random, lo: int = -3, hi: int = 3) -> Pencil:
    """Pencil with integer amplitudes, resampled until linearly independent."""
    while True:
        phi0 = random_integer_vector(rng, 8, lo, hi)
        phi1 = random_integer_vector(rng, 8, lo, hi)
        if any(not x.is_zero for x in phi0) and any(not x.is_zero for x in phi1):
            if matrix_rank(ExactMatrix(2, 8, phi0 + phi1)) == 2:
                return Pencil(phi0, phi1)


def random_permutation(rng: Random, n: int) -> tuple[int, ...]:
    qubits = list(range(1, n + 1))
    rng.shuffle(qubits)
    return tuple(qubits)
