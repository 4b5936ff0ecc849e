"""lrc.Field.linalg

Gaussian elimination over a FieldSpec on numpy arrays of canonical
integers. Row operations are vectorised per pivot: prime fields use int64
arithmetic mod p, small extension fields gather from the dense field
tables, and anything larger falls back to element-wise ufuncs.

FieldElement matrices (lists of rows) are accepted and returned only by the
boundary functions; inputs are never mutated.

Provides:
- `to_array(matrix, field, ncols=None)`, `from_array(array, field)`
- `rref_array`, `rank_array`, `nullspace_array`, `dot_array`
- `rref(matrix, field, column_order=None) -> (rows, pivots)`
- `rank(matrix, field)`
- `nullspace(matrix, field, ncols) -> list of vectors`
- `solve(matrix, rhs, field) -> vector` (unique solutions only)
- `transpose(matrix)`
"""

from functools import lru_cache, reduce
from typing import List, Optional, Sequence, Tuple

import numpy as np

from lrc.errors import ParameterError
from lrc.Field.gf import FieldElement, FieldSpec
from lrc.Field.tables import field_tables

Matrix = List[List[FieldElement]]

# extension fields up to this order eliminate through the dense tables
DENSE_CAP = 1 << 10
# int64 products of two residues stay exact below this modulus
MODULAR_CAP = 1 << 31


# ===============================
# vectorised field arithmetic
# ===============================

class _Arithmetic:
    """add, mul and neg on int64 arrays of canonical integers; inv on scalars."""

    def __init__(self, field: FieldSpec):
        self.field = field

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def neg(self, a: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        return self.field.element(a).inverse().value


class _ModularArithmetic(_Arithmetic):
    def __init__(self, field: FieldSpec):
        super().__init__(field)
        self.p = field.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        return pow(a, self.p - 2, self.p)


class _TableArithmetic(_Arithmetic):
    def __init__(self, field: FieldSpec):
        super().__init__(field)
        self.tables = field_tables(field)

    def add(self, a, b):
        return self.tables.add[a, b].astype(np.int64)

    def mul(self, a, b):
        return self.tables.mul[a, b].astype(np.int64)

    def neg(self, a):
        return self.tables.neg[a].astype(np.int64)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.field!r}")
        return int(self.tables.inv[a])


class _ElementArithmetic(_Arithmetic):
    def __init__(self, field: FieldSpec):
        super().__init__(field)
        self._add = np.frompyfunc(lambda a, b: (field.element(a) + field.element(b)).value, 2, 1)
        self._mul = np.frompyfunc(lambda a, b: (field.element(a) * field.element(b)).value, 2, 1)
        self._neg = np.frompyfunc(lambda a: (-field.element(a)).value, 1, 1)

    def add(self, a, b):
        return np.asarray(self._add(a, b)).astype(np.int64)

    def mul(self, a, b):
        return np.asarray(self._mul(a, b)).astype(np.int64)

    def neg(self, a):
        return np.asarray(self._neg(a)).astype(np.int64)


@lru_cache(maxsize=16)
def _arithmetic(field: FieldSpec) -> _Arithmetic:
    if field.l == 1 and field.p < MODULAR_CAP:
        return _ModularArithmetic(field)
    if field.q <= DENSE_CAP:
        return _TableArithmetic(field)
    return _ElementArithmetic(field)


# ===============================
# boundary conversion
# ===============================

def to_array(matrix: Sequence[Sequence[FieldElement]], field: FieldSpec, ncols: Optional[int] = None) -> np.ndarray:
    """Canonical-integer int64 array; `ncols` fixes the width of an empty matrix."""
    if not matrix:
        return np.zeros((0, ncols or 0), dtype=np.int64)
    return np.array([[field.element(a).value for a in row] for row in matrix], dtype=np.int64)


def from_array(array: np.ndarray, field: FieldSpec) -> Matrix:
    return [[field.element(int(v)) for v in row] for row in array]


def transpose(matrix: Sequence[Sequence[FieldElement]]) -> Matrix:
    if not matrix:
        return []
    return [list(col) for col in zip(*matrix)]


# ===============================
# elimination on arrays
# ===============================

def rref_array(
    array: np.ndarray,
    field: FieldSpec,
    column_order: Optional[Sequence[int]] = None,
) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form of a canonical-integer array.

    Columns are swept in `column_order` (default left to right). Returns the
    nonzero rows, each with a unit pivot, and the pivot column of each row.
    """
    ar = _arithmetic(field)
    mat = np.array(array, dtype=np.int64, copy=True)
    nrows, ncols = mat.shape
    order = list(column_order) if column_order is not None else list(range(ncols))
    pivots: List[int] = []
    row = 0
    for col in order:
        if row == nrows:
            break
        candidates = np.flatnonzero(mat[row:, col])
        if candidates.size == 0:
            continue
        sel = row + int(candidates[0])
        if sel != row:
            mat[[row, sel]] = mat[[sel, row]]
        mat[row] = ar.mul(mat[row], ar.inv(int(mat[row, col])))
        others = np.flatnonzero(mat[:, col])
        others = others[others != row]
        if others.size:
            factors = ar.neg(mat[others, col])
            mat[others] = ar.add(mat[others], ar.mul(factors[:, None], mat[row][None, :]))
        pivots.append(col)
        row += 1
    return mat[:row], pivots


def rank_array(array: np.ndarray, field: FieldSpec) -> int:
    if array.shape[0] == 0:
        return 0
    return len(rref_array(array, field)[1])


def nullspace_array(array: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Basis of {x : array @ x = 0}, one row per free column (left to right)."""
    ncols = array.shape[1]
    if array.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    rows, pivots = rref_array(array, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    if not free:
        return basis
    basis[np.arange(len(free)), free] = 1
    if pivots:
        basis[:, pivots] = _arithmetic(field).neg(rows[:, free].T)
    return basis


def dot_array(a: np.ndarray, b: np.ndarray, field: FieldSpec) -> int:
    ar = _arithmetic(field)
    products = ar.mul(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
    return int(reduce(ar.add, products, np.int64(0)))


# ===============================
# FieldElement boundary
# ===============================

def rref(
    matrix: Sequence[Sequence[FieldElement]],
    field: FieldSpec,
    column_order: Optional[Sequence[int]] = None,
) -> Tuple[Matrix, List[int]]:
    if not matrix:
        return [], []
    rows, pivots = rref_array(to_array(matrix, field), field, column_order)
    return from_array(rows, field), pivots


def rank(matrix: Sequence[Sequence[FieldElement]], field: FieldSpec) -> int:
    if not matrix:
        return 0
    return rank_array(to_array(matrix, field), field)


def nullspace(matrix: Sequence[Sequence[FieldElement]], field: FieldSpec, ncols: int) -> Matrix:
    """Basis of {x : matrix * x = 0}, one vector per free column (left to right)."""
    return from_array(nullspace_array(to_array(matrix, field, ncols), field), field)


def solve(
    matrix: Sequence[Sequence[FieldElement]],
    rhs: Sequence[FieldElement],
    field: FieldSpec,
) -> List[FieldElement]:
    """Unique x with matrix * x = rhs.

    Raises ParameterError when the system is inconsistent or underdetermined.
    """
    if len(matrix) != len(rhs):
        raise ParameterError("row count and right-hand side length differ")
    if not matrix:
        raise ParameterError("empty system")
    ncols = len(matrix[0])
    augmented = np.column_stack([to_array(matrix, field), to_array([list(rhs)], field)[0]])
    rows, pivots = rref_array(augmented, field)
    if ncols in pivots:
        raise ParameterError("inconsistent system")
    if len(pivots) < ncols:
        raise ParameterError(f"underdetermined system: rank {len(pivots)} < {ncols}")
    x = np.zeros(ncols, dtype=np.int64)
    x[pivots] = rows[:, ncols]
    return [field.element(int(v)) for v in x]
