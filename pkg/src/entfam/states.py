"""Exact n-qubit pure states, coefficient-matrix flattenings, and local maps.

Amplitude indexing is big-endian: qubit 1 supplies the most significant bit
of the basis index, so ``|1100>`` on four qubits is index 12.  A bipartition
singles out an ordered list of qubits; its coefficient matrix has one row per
bit pattern of the singled-out qubits (first listed qubit = most significant
row bit) and one column per bit pattern of the remaining qubits in increasing
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm as _int_lcm
from typing import Iterable, Sequence

from .errors import InternalCheckError, StateError
from .scalars import ONE, ZERO, GaussianRational

MIN_QUBITS = 2
MAX_QUBITS = 4


def bit_of(index: int, qubit: int, n: int) -> int:
    """Bit of `qubit` (1-based, MSB first) in basis index `index`."""
    return (index >> (n - qubit)) & 1


class PureState:
    """Unnormalized n-qubit pure state with exact amplitudes, n in {2, 3, 4}.

    Normalization is never applied: the classification is invariant under
    invertible local maps, which rescale freely anyway.
    """

    __slots__ = ("_n", "_amps")

    def __init__(self, qubit_count: int, amplitudes: Iterable):
        if not MIN_QUBITS <= qubit_count <= MAX_QUBITS:
            raise StateError(
                f"states must have {MIN_QUBITS} to {MAX_QUBITS} qubits, got {qubit_count}"
            )
        amps = tuple(GaussianRational.coerce(a) for a in amplitudes)
        if len(amps) != 1 << qubit_count:
            raise StateError(
                f"expected {1 << qubit_count} amplitudes for {qubit_count} qubits, got {len(amps)}"
            )
        if all(a.is_zero for a in amps):
            raise StateError("all amplitudes are zero")
        self._n = qubit_count
        self._amps = amps

    @property
    def qubit_count(self) -> int:
        return self._n

    @property
    def amplitudes(self) -> tuple:
        return self._amps

    def amplitude(self, index: int) -> GaussianRational:
        return self._amps[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PureState):
            return NotImplemented
        return self._n == other._n and self._amps == other._amps

    def __hash__(self) -> int:
        return hash((self._n, self._amps))

    def __repr__(self) -> str:
        nonzero = {i: str(a) for i, a in enumerate(self._amps) if not a.is_zero}
        return f"PureState(n={self._n}, {nonzero})"


@dataclass(frozen=True)
class QubitPartition:
    """An ordered choice of singled-out qubits; the complement is implied."""

    n: int
    singled: tuple[int, ...]

    def __post_init__(self):
        singled = tuple(self.singled)
        object.__setattr__(self, "singled", singled)
        if not singled:
            raise StateError("partition must single out at least one qubit")
        if len(set(singled)) != len(singled):
            raise StateError(f"partition lists a qubit twice: {singled}")
        if any(not 1 <= q <= self.n for q in singled):
            raise StateError(f"qubit out of range in partition {singled} (n={self.n})")
        if len(singled) == self.n:
            raise StateError("partition complement must be non-empty")

    @property
    def complement(self) -> tuple[int, ...]:
        chosen = set(self.singled)
        return tuple(q for q in range(1, self.n + 1) if q not in chosen)

    def label(self) -> str:
        return "".join(map(str, self.singled)) + "|" + "".join(map(str, self.complement))


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix of GaussianRational entries, stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        entries = tuple(GaussianRational.coerce(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError("entry count does not match matrix shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        flat = []
        for row in rows:
            if len(row) != width:
                raise ValueError("ragged rows")
            flat.extend(row)
        return cls(len(rows), width, tuple(flat))

    def entry(self, r: int, c: int) -> GaussianRational:
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def row_lists(self) -> list[list]:
        return [list(self.row(r)) for r in range(self.rows)]


def coefficient_matrix(state: PureState, partition: QubitPartition) -> ExactMatrix:
    """Flattening of the amplitude tensor along the given bipartition."""
    n = state.qubit_count
    if partition.n != n:
        raise StateError(f"partition is for {partition.n} qubits, state has {n}")
    singled = partition.singled
    rest = partition.complement
    n_rows = 1 << len(singled)
    n_cols = 1 << len(rest)
    flat = []
    for r in range(n_rows):
        for c in range(n_cols):
            index = 0
            for t, q in enumerate(singled):
                bit = (r >> (len(singled) - 1 - t)) & 1
                index |= bit << (n - q)
            for u, q in enumerate(rest):
                bit = (c >> (len(rest) - 1 - u)) & 1
                index |= bit << (n - q)
            flat.append(state.amplitude(index))
    return ExactMatrix(n_rows, n_cols, tuple(flat))


def matrix_rank(m: ExactMatrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination.

    Rows are first scaled to Gaussian-integer entries (rank-preserving), so
    every division in the Bareiss recurrence is exact and intermediate
    values stay integral.
    """
    work = []
    for r in range(m.rows):
        row = list(m.row(r))
        den = 1
        for e in row:
            den = _int_lcm(den, e.re.denominator, e.im.denominator)
        work.append([den * e for e in row])
    rank = 0
    prev = ONE
    for col in range(m.cols):
        pivot_row = None
        for i in range(rank, m.rows):
            if not work[i][col].is_zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        for i in range(rank + 1, m.rows):
            factor = work[i][col]
            for j in range(col + 1, m.cols):
                work[i][j] = (pivot * work[i][j] - factor * work[rank][j]) / prev
            work[i][col] = ZERO
        prev = pivot
        rank += 1
        if rank == m.rows:
            break
    return rank


def rref(m: ExactMatrix) -> tuple[list[list], tuple[int, ...]]:
    """Reduced row-echelon form; returns (rows, pivot column indices)."""
    rows = m.row_lists()
    pivots = []
    lead = 0
    for col in range(m.cols):
        pivot_row = None
        for i in range(lead, m.rows):
            if not rows[i][col].is_zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[lead], rows[pivot_row] = rows[pivot_row], rows[lead]
        inv = rows[lead][col].inverse()
        rows[lead] = [e * inv for e in rows[lead]]
        for i in range(m.rows):
            if i != lead and not rows[i][col].is_zero:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[lead])]
        pivots.append(col)
        lead += 1
        if lead == m.rows:
            break
    return rows, tuple(pivots)


def row_space_basis(m: ExactMatrix) -> list[tuple]:
    """Exact basis of the row space of a 2-row flattening.

    Rank 1 returns the first nonzero row as-is; rank 2 returns the reduced
    row-echelon rows, a deterministic basis of the same span.
    """
    if m.rows != 2:
        raise StateError("row_space_basis expects a single-qubit partition (2 rows)")
    rows, pivots = rref(m)
    rank = len(pivots)
    if rank == 0:
        raise StateError("zero matrix has no row space basis")
    if rank == 1:
        for r in range(2):
            original = m.row(r)
            if any(not e.is_zero for e in original):
                return [original]
    return [tuple(rows[0]), tuple(rows[1])]


def solve_linear_system(rows: Sequence[Sequence], rhs: Sequence) -> list:
    """Solve a square nonsingular exact system (internal helper)."""
    size = len(rows)
    augmented = ExactMatrix.from_rows(
        [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    )
    reduced, pivots = rref(augmented)
    if pivots != tuple(range(size)):
        raise InternalCheckError("linear system is singular")
    return [reduced[i][size] for i in range(size)]


# -- local operators ------------------------------------------------------------

Matrix2 = tuple[tuple[GaussianRational, GaussianRational], tuple[GaussianRational, GaussianRational]]


def _as_matrix2(m) -> Matrix2:
    rows = tuple(tuple(GaussianRational.coerce(e) for e in row) for row in m)
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise StateError("local factors must be 2x2 matrices")
    return rows  # type: ignore[return-value]


def det2(m: Matrix2) -> GaussianRational:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def inv2(m: Matrix2) -> Matrix2:
    d = det2(m)
    if d.is_zero:
        raise StateError("not an SLOCC operation: singular 2x2 factor")
    di = d.inverse()
    return (
        (m[1][1] * di, -m[0][1] * di),
        (-m[1][0] * di, m[0][0] * di),
    )


class LocalOperator:
    """Invertible operator A_1 (x) ... (x) A_n acting one qubit at a time."""

    __slots__ = ("_factors",)

    def __init__(self, factors: Iterable):
        fs = tuple(_as_matrix2(f) for f in factors)
        for f in fs:
            if det2(f).is_zero:
                raise StateError("not an SLOCC operation: singular 2x2 factor")
        self._factors = fs

    @classmethod
    def identity(cls, n: int) -> "LocalOperator":
        eye = ((1, 0), (0, 1))
        return cls([eye] * n)

    @property
    def factors(self) -> tuple:
        return self._factors

    @property
    def qubit_count(self) -> int:
        return len(self._factors)

    def inverse(self) -> "LocalOperator":
        return LocalOperator([inv2(f) for f in self._factors])

    def __repr__(self) -> str:
        mats = [
            "[[" + ", ".join(str(e) for e in f[0]) + "], ["
            + ", ".join(str(e) for e in f[1]) + "]]"
            for f in self._factors
        ]
        return "LocalOperator(" + "; ".join(mats) + ")"


def apply_local(state: PureState, op: LocalOperator) -> PureState:
    """Apply an invertible local operator to every qubit, exactly."""
    n = state.qubit_count
    if op.qubit_count != n:
        raise StateError(f"operator has {op.qubit_count} factors, state has {n} qubits")
    dim = 1 << n
    out = [ZERO] * dim
    for j in range(dim):
        total = ZERO
        for i in range(dim):
            a = state.amplitude(i)
            if a.is_zero:
                continue
            weight = a
            for q in range(1, n + 1):
                weight = weight * op.factors[q - 1][bit_of(j, q, n)][bit_of(i, q, n)]
                if weight.is_zero:
                    break
            total = total + weight
        out[j] = total
    if all(a.is_zero for a in out):
        raise InternalCheckError("invertible local operator produced the zero state")
    return PureState(n, out)


def permute_qubits(state: PureState, perm: Sequence[int]) -> PureState:
    """Relabel qubits: the bit on qubit q moves to qubit perm[q-1]."""
    n = state.qubit_count
    if sorted(perm) != list(range(1, n + 1)):
        raise StateError(f"not a permutation of 1..{n}: {tuple(perm)}")
    dim = 1 << n
    out = [ZERO] * dim
    for i in range(dim):
        a = state.amplitude(i)
        if a.is_zero:
            continue
        j = 0
        for q in range(1, n + 1):
            j |= bit_of(i, q, n) << (n - perm[q - 1])
        out[j] = a
    return PureState(n, out)
