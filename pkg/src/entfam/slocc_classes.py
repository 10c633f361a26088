"""SLOCC classification of individual 2-qubit and 3-qubit pure states.

Two qubits split into separable vs entangled (2x2 coefficient-matrix rank).
Three qubits have six classes: fully separable, three biseparable classes
(qubit k in a product with an entangled pair), and the two genuinely
entangled classes GHZ and W, discriminated by the Cayley hyperdeterminant of
the 2x2x2 amplitude tensor.  Only the exact zero test of the
hyperdeterminant matters here, never its magnitude.
"""

from __future__ import annotations

import enum
from typing import Sequence

from .errors import InternalCheckError, StateError
from .states import PureState, QubitPartition, coefficient_matrix, matrix_rank


class Class2(enum.Enum):
    SEPARABLE = "separable"
    ENTANGLED = "entangled"


class Class3(enum.Enum):
    """The six 3-qubit SLOCC classes; values are the serialized names."""

    FULLY_SEPARABLE = "000"
    BISEPARABLE_1 = "0_1Psi"
    BISEPARABLE_2 = "0_2Psi"
    BISEPARABLE_3 = "0_3Psi"
    W = "W"
    GHZ = "GHZ"

    @staticmethod
    def biseparable(k: int) -> "Class3":
        return Class3(f"0_{k}Psi")

    @property
    def bisep_k(self) -> int | None:
        """The factored-out qubit for a biseparable class, else None."""
        if self.name.startswith("BISEPARABLE_"):
            return int(self.name[-1])
        return None


def classify2(state: PureState) -> Class2:
    """Separable iff the 2x2 coefficient matrix is singular."""
    if state.qubit_count != 2:
        raise StateError(f"classify2 needs a 2-qubit state, got {state.qubit_count}")
    a = state.amplitudes
    det = a[0] * a[3] - a[1] * a[2]
    return Class2.SEPARABLE if det.is_zero else Class2.ENTANGLED


def cayley_hyperdet(t: Sequence):
    """Cayley hyperdeterminant of a 2x2x2 array, indexed t[q1 q2 q3] big-endian.

    Works over any commutative ring whose elements support ``+``, ``-``,
    ``*`` and scaling by small ints: exact scalars, binary forms, and plain
    complex numbers all qualify.
    """
    a000, a001, a010, a011, a100, a101, a110, a111 = t
    squares = (
        a000 * a000 * a111 * a111
        + a001 * a001 * a110 * a110
        + a010 * a010 * a101 * a101
        + a100 * a100 * a011 * a011
    )
    pairs = (
        a000 * a111 * a001 * a110
        + a000 * a111 * a010 * a101
        + a000 * a111 * a100 * a011
        + a001 * a110 * a010 * a101
        + a001 * a110 * a100 * a011
        + a010 * a101 * a100 * a011
    )
    quads = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111
    return squares - 2 * pairs + 4 * quads


def hyperdeterminant(state: PureState):
    """Exact hyperdeterminant of a 3-qubit state's amplitude tensor."""
    if state.qubit_count != 3:
        raise StateError(
            f"hyperdeterminant needs a 3-qubit state, got {state.qubit_count}"
        )
    return cayley_hyperdet(state.amplitudes)


def classify3(state: PureState) -> Class3:
    """Classify a 3-qubit state by flattening ranks and the hyperdeterminant.

    All three single-qubit flattening ranks 1: fully separable.  Exactly one
    rank 1: that qubit factors out of an entangled pair.  All ranks 2:
    GHZ when the hyperdeterminant is nonzero, W when it vanishes.
    """
    if state.qubit_count != 3:
        raise StateError(f"classify3 needs a 3-qubit state, got {state.qubit_count}")
    ranks = [
        matrix_rank(coefficient_matrix(state, QubitPartition(3, (k,))))
        for k in (1, 2, 3)
    ]
    rank_one = [k for k, r in zip((1, 2, 3), ranks) if r == 1]
    if len(rank_one) == 3:
        return Class3.FULLY_SEPARABLE
    if len(rank_one) == 2:
        # Two factored qubits force the third to factor as well.
        raise InternalCheckError(f"impossible flattening rank pattern {ranks}")
    if len(rank_one) == 1:
        return Class3.biseparable(rank_one[0])
    return Class3.W if hyperdeterminant(state).is_zero else Class3.GHZ
