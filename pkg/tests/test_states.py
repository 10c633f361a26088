from itertools import combinations
from random import Random

import pytest

from entfam import (
    ExactMatrix,
    LocalOperator,
    PureState,
    QubitPartition,
    StateError,
    apply_local,
    coefficient_matrix,
    matrix_rank,
    permute_qubits,
    row_space_basis,
)
from entfam.sampling import random_local_operator, random_permutation, random_state
from _helpers import gr, state_of

S1 = "|0000>+|1100>+|1111>"


def test_flattening_of_first_qubit():
    # By hand: rows are the qubit-1 bit, columns the bits of qubits 2,3,4;
    # |0000> lands at (0,0), |1100> at (1,4), |1111> at (1,7).
    m = coefficient_matrix(state_of(S1), QubitPartition(4, (1,)))
    assert (m.rows, m.cols) == (2, 8)
    assert m.row(0) == (1, 0, 0, 0, 0, 0, 0, 0)
    assert m.row(1) == (0, 0, 0, 0, 1, 0, 0, 1)


def test_flattening_of_a_pair():
    m = coefficient_matrix(state_of("|0000>+|1111>"), QubitPartition(4, (1, 2)))
    assert (m.rows, m.cols) == (4, 4)
    expected = {(0, 0), (3, 3)}
    for r in range(4):
        for c in range(4):
            assert m.entry(r, c) == (1 if (r, c) in expected else 0)


def test_partition_must_be_proper():
    with pytest.raises(StateError):
        QubitPartition(4, (1, 2, 3, 4))
    with pytest.raises(StateError):
        QubitPartition(4, ())
    with pytest.raises(StateError):
        QubitPartition(4, (5,))


def test_partition_label_keeps_order():
    assert QubitPartition(4, (4,)).label() == "4|123"
    assert QubitPartition(4, (2, 1)).label() == "21|34"


class TestRank:
    def test_rank_two_flattening(self):
        m = coefficient_matrix(state_of(S1), QubitPartition(4, (1,)))
        assert matrix_rank(m) == 2

    def test_product_state_rank_one(self):
        m = coefficient_matrix(state_of("|0000>"), QubitPartition(4, (1,)))
        assert matrix_rank(m) == 1

    def test_equal_rows_rank_one(self):
        row = (1, 0, gr("1/2"), 0, 0, 3, 0, 0)
        assert matrix_rank(ExactMatrix(2, 8, row + row)) == 1

    def test_zero_matrix(self):
        assert matrix_rank(ExactMatrix(2, 2, (0, 0, 0, 0))) == 0

    def test_fractional_entries(self):
        m = ExactMatrix.from_rows([
            [gr("1/3"), gr("1/6")],
            [gr(2), gr(1)],
        ])
        assert matrix_rank(m) == 1


def test_rank_symmetric_under_complement():
    rng = Random(101)
    for _ in range(15):
        n = rng.choice((3, 4))
        s = random_state(rng, n)
        for size in range(1, n):
            for singled in combinations(range(1, n + 1), size):
                a = matrix_rank(coefficient_matrix(s, QubitPartition(n, singled)))
                comp = tuple(q for q in range(1, n + 1) if q not in singled)
                b = matrix_rank(coefficient_matrix(s, QubitPartition(n, comp)))
                assert a == b


def test_rank_invariant_under_local_operators():
    rng = Random(55)
    for _ in range(10):
        s = random_state(rng, 4)
        op = random_local_operator(rng, 4)
        moved = apply_local(s, op)
        for i in (1, 2, 3, 4):
            part = QubitPartition(4, (i,))
            assert matrix_rank(coefficient_matrix(s, part)) == matrix_rank(
                coefficient_matrix(moved, part)
            )


def test_rank_covariant_under_permutation():
    rng = Random(77)
    for _ in range(10):
        s = random_state(rng, 4)
        perm = random_permutation(rng, 4)
        moved = permute_qubits(s, perm)
        for i in (1, 2, 3, 4):
            a = matrix_rank(coefficient_matrix(s, QubitPartition(4, (i,))))
            b = matrix_rank(
                coefficient_matrix(moved, QubitPartition(4, (perm[i - 1],)))
            )
            assert a == b


class TestRowSpace:
    def test_rank_two_basis(self):
        m = coefficient_matrix(state_of(S1), QubitPartition(4, (1,)))
        basis = row_space_basis(m)
        assert basis == [
            (1, 0, 0, 0, 0, 0, 0, 0),  # |000>
            (0, 0, 0, 0, 1, 0, 0, 1),  # |100> + |111>
        ]

    def test_rank_one_single_vector(self):
        m = coefficient_matrix(state_of("|0000>+|1100>"), QubitPartition(4, (4,)))
        basis = row_space_basis(m)
        assert len(basis) == 1
        assert basis[0] == (1, 0, 0, 0, 0, 0, 1, 0)  # |000> + |110>

    def test_identity_like(self):
        basis = row_space_basis(ExactMatrix(2, 2, (2, 0, 0, 3)))
        assert basis == [(1, 0), (0, 1)]

    def test_wrong_row_count(self):
        with pytest.raises(StateError):
            row_space_basis(ExactMatrix(4, 4, tuple([1] + [0] * 15)))

    def test_basis_vectors_lie_in_row_space(self):
        rng = Random(9)
        for _ in range(20):
            s = random_state(rng, 4)
            m = coefficient_matrix(s, QubitPartition(4, (rng.randint(1, 4),)))
            rank = matrix_rank(m)
            for v in row_space_basis(m):
                stacked = ExactMatrix.from_rows(
                    [list(m.row(0)), list(m.row(1)), list(v)]
                )
                assert matrix_rank(stacked) == rank


class TestLocalOperators:
    def test_identity_is_noop(self):
        s = state_of(S1)
        assert apply_local(s, LocalOperator.identity(4)) == s

    def test_bit_flip_on_first_qubit(self):
        flip = ((0, 1), (1, 0))
        eye = ((1, 0), (0, 1))
        op = LocalOperator([flip, eye, eye, eye])
        assert apply_local(state_of("|0000>"), op) == state_of("|1000>")

    def test_singular_factor_rejected(self):
        eye = ((1, 0), (0, 1))
        with pytest.raises(StateError, match="not an SLOCC operation"):
            LocalOperator([((1, 1), (1, 1)), eye, eye, eye])

    def test_apply_then_inverse_restores(self):
        rng = Random(13)
        for _ in range(10):
            s = random_state(rng, rng.choice((2, 3, 4)))
            op = random_local_operator(rng, s.qubit_count)
            assert apply_local(apply_local(s, op), op.inverse()) == s

    def test_factor_count_must_match(self):
        with pytest.raises(StateError):
            apply_local(state_of("|000>"), LocalOperator.identity(4))


class TestPermutations:
    def test_identity(self):
        s = state_of(S1)
        assert permute_qubits(s, (1, 2, 3, 4)) == s

    def test_swap_ends(self):
        assert permute_qubits(state_of("|1000>"), (4, 2, 3, 1)) == state_of("|0001>")

    def test_s1_symmetric_in_first_pair(self):
        s = state_of(S1)
        assert permute_qubits(s, (2, 1, 3, 4)) == s

    def test_not_a_permutation(self):
        with pytest.raises(StateError):
            permute_qubits(state_of("|00>"), (1, 1))

    def test_composition_consistency(self):
        rng = Random(3)
        for _ in range(10):
            s = random_state(rng, 4)
            p1 = random_permutation(rng, 4)
            p2 = random_permutation(rng, 4)
            combined = tuple(p2[p1[q - 1] - 1] for q in range(1, 5))
            assert permute_qubits(permute_qubits(s, p1), p2) == permute_qubits(
                s, combined
            )


def test_pure_state_validation():
    with pytest.raises(StateError):
        PureState(5, [1] * 32)
    with pytest.raises(StateError):
        PureState(2, [0, 0, 0, 0])
    with pytest.raises(StateError):
        PureState(2, [1, 0])
