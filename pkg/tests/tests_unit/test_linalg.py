"""Unit tests for Gaussian elimination over finite fields.

Tests reduced row echelon form, custom column sweep order, rank, null
spaces and unique solves, including inconsistent and underdetermined
systems.
"""

import numpy as np
import pytest

from lrc.errors import ParameterError
from lrc.Field.gf import FieldSpec
from lrc.Field.linalg import (dot_array, from_array, nullspace, nullspace_array, rank, rank_array, rref, solve,
                              to_array, transpose)

F13 = FieldSpec(13)
GF16 = FieldSpec(2, 4)
# prime field, dense tables, large prime, element-wise fallback
FIELDS = [F13, GF16, FieldSpec(8191), FieldSpec(2, 11, (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1))]


def m(rows):
    return [[F13(v) for v in row] for row in rows]


def test_rref_identity_pivots():
    """A full-rank square matrix reduces to the identity."""
    rows, pivots = rref(m([[2, 1], [1, 1]]), F13)
    assert pivots == [0, 1]
    assert rows == m([[1, 0], [0, 1]])


def test_rref_does_not_mutate_input():
    """The caller's matrix is left untouched."""
    matrix = m([[2, 4], [1, 2]])
    rref(matrix, F13)
    assert matrix == m([[2, 4], [1, 2]])


def test_rref_column_order():
    """Sweeping from the last column puts pivots there first."""
    _, pivots = rref(m([[1, 1, 0], [0, 1, 1]]), F13, column_order=[2, 1, 0])
    assert pivots == [2, 1]


def test_rank_of_dependent_rows():
    """A row that is a multiple of another adds no rank."""
    assert rank(m([[1, 2, 3], [2, 4, 6], [0, 0, 1]]), F13) == 2


def test_rank_of_empty_matrix():
    """The empty matrix has rank 0."""
    assert rank([], F13) == 0


def test_nullspace_vectors_are_annihilated():
    """Every null-space vector maps to zero."""
    matrix = m([[1, 2, 3], [2, 4, 6]])
    basis = nullspace(matrix, F13, 3)
    assert len(basis) == 2
    for vec in basis:
        for row in matrix:
            assert sum((a * b for a, b in zip(row, vec)), F13.zero) == F13.zero


def test_nullspace_of_empty_matrix_is_everything():
    """No constraints leave the unit vectors."""
    assert nullspace([], F13, 2) == m([[1, 0], [0, 1]])


def test_solve_unique():
    """2x + y = 5, x + y = 3 has x = 2, y = 1."""
    assert solve(m([[2, 1], [1, 1]]), [F13(5), F13(3)], F13) == [F13(2), F13(1)]


def test_solve_inconsistent():
    """Parallel equations with different right-hand sides have no solution."""
    with pytest.raises(ParameterError, match="inconsistent"):
        solve(m([[1, 1], [2, 2]]), [F13(1), F13(3)], F13)


def test_solve_underdetermined():
    """One equation in two unknowns is not unique."""
    with pytest.raises(ParameterError, match="underdetermined"):
        solve(m([[1, 1]]), [F13(1)], F13)


def test_transpose():
    """Rows become columns."""
    assert transpose(m([[1, 2, 3], [4, 5, 6]])) == m([[1, 4], [2, 5], [3, 6]])


# ---------------------------------------------------------------------------
# Arithmetic backends
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("field", FIELDS, ids=repr)
def test_elimination_in_every_field(field):
    """A dependent third row gives rank 2 and a two-dimensional null space."""
    a, b, c = field(3), field(5), field(7)
    row0 = [field.one, a, b, field.zero]
    row1 = [field.zero, field.one, c, a]
    row2 = [x + b * y for x, y in zip(row0, row1)]
    matrix = [row0, row1, row2]
    assert rank(matrix, field) == 2
    _, pivots = rref(matrix, field)
    assert pivots == [0, 1]
    basis = nullspace(matrix, field, 4)
    assert len(basis) == 2
    for vec in basis:
        for row in matrix:
            assert sum((x * y for x, y in zip(row, vec)), field.zero) == field.zero


@pytest.mark.parametrize("field", FIELDS, ids=repr)
def test_solve_in_every_field(field):
    """The planted solution (c, a) is recovered."""
    a, b, c = field(3), field(5), field(7)
    rhs = [a * c + a, c + b * a]
    assert solve([[a, field.one], [field.one, b]], rhs, field) == [c, a]


def test_array_round_trip_and_dot():
    """Boundary conversion keeps canonical integers; dot reduces mod p."""
    matrix = m([[1, 2, 3], [4, 5, 6]])
    array = to_array(matrix, F13)
    assert array.dtype == np.int64
    assert from_array(array, F13) == matrix
    assert dot_array(array[0], array[1], F13) == (4 + 10 + 18) % 13
    assert to_array([], F13, 3).shape == (0, 3)


def test_nullspace_array_rows():
    """One basis row per free column, annihilated by the matrix."""
    array = to_array(m([[1, 2, 3], [2, 4, 6]]), F13)
    basis = nullspace_array(array, F13)
    assert basis.shape == (2, 3)
    assert rank_array(array, F13) == 1
    for vec in basis:
        for row in array:
            assert dot_array(row, vec, F13) == 0
