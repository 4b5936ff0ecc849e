"""lrc.Multiset.multiset

Codes where every symbol has several disjoint recovering sets.

Two (or more) orthogonal partitions of the same support each define the
space of polynomials whose restriction to every block has degree below the
block's locality. The message space is the intersection of these spaces with
the polynomials of degree < m, for the smallest m giving dimension k.
Product codes give the same property by tensoring two LRC codes.

Provides:
- `Lrc2Code`, `ProductCode`
- `intersect_spaces`, `build_lrc2`, `build_lrc_multi`, `repair2`
- `smallest_m_for_t`, `dim_lower_bound`, `multi_distance_lower`
- `product_build`, `product_encode`, `product_repair`
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import List, Optional, Sequence, Tuple

from lrc.Core.lrc_core import EvaluationCode, Symbols
from lrc.errors import InsufficientSurvivorsError, ParameterError
from lrc.Field.gf import FieldElement, FieldSpec
from lrc.Field.linalg import nullspace
from lrc.Good_Poly.goodpoly import Partition, are_orthogonal
from lrc.Poly.poly import Polynomial, echelon_basis, evaluate

logger = logging.getLogger(__name__)


def _locality(partition: Partition) -> int:
    sizes = set(partition.sizes)
    if len(sizes) != 1:
        raise ParameterError(f"partition blocks must share one size, got {sorted(sizes)}")
    return sizes.pop() - 1


def _top_coefficient_row(block: Sequence[FieldElement], m: int) -> List[FieldElement]:
    # linear functional f -> leading coefficient of the interpolant of f on the block
    field = block[0].field
    row = [field.zero] * m
    for a in block:
        w = field.one
        for b in block:
            if b != a:
                w = w * (a - b)
        w = w.inverse()
        power = field.one
        for t in range(m):
            row[t] = row[t] + w * power
            power = power * a
    return row


def intersect_spaces(p1: Partition, p2: Partition, m: int, *more: Partition) -> List[Polynomial]:
    """Echelon basis of the polynomials of degree < m that are local for every partition.

    A polynomial is local for a partition with blocks of size r+1 when its
    restriction to each block has degree < r, i.e. the x^r coefficient of the
    block interpolant vanishes. Computed as an exact null space.
    """
    partitions = (p1, p2) + more
    support = p1.support
    field = support[0].field
    for other in partitions[1:]:
        if set(other.support) != set(support):
            raise ParameterError("partitions have different supports")
    if not 1 <= m <= len(support):
        raise ParameterError(f"degree cap m={m} must lie in [1, {len(support)}]")
    constraints = []
    for partition in partitions:
        _locality(partition)
        for block in partition.blocks:
            constraints.append(_top_coefficient_row(block, m))
    vectors = nullspace(constraints, field, m)
    return echelon_basis(field, [Polynomial(field, v) for v in vectors])


# ===============================
# multiple recovering sets
# ===============================

class Lrc2Code(EvaluationCode):
    """Evaluation code over a support carrying pairwise orthogonal partitions.

    Positions follow the block order of the first partition.
    """

    construction = "multi"

    def __init__(self, field: FieldSpec, partitions: Sequence[Partition], m: int, basis: Sequence[Polynomial]):
        first = partitions[0]
        index = {a: t for t, a in enumerate(first.support)}
        self.partitions = tuple(partitions)
        self.localities = tuple(_locality(p) for p in partitions)
        self.block_sets = tuple(
            tuple(tuple(index[a] for a in block) for block in p.blocks) for p in partitions)
        blocks = self.block_sets[0]
        super().__init__(field, first.support, basis, blocks, [self.localities[0]] * len(blocks),
                         designed_distance=len(first.support) - m + 1)
        self.m = m
        self._block_maps = []
        for blocks_w in self.block_sets:
            mapping = {}
            for b, positions in enumerate(blocks_w):
                for pos in positions:
                    mapping[pos] = b
            self._block_maps.append(mapping)

    @property
    def t(self) -> int:
        return len(self.partitions)

    @property
    def certified_distance(self) -> int:
        return max(self.designed_distance, smallest_m_for_t(self.t))

    def _selected(self, position: int, which: int) -> Tuple[int, Tuple[int, ...]]:
        if not 0 <= which < self.t:
            raise ParameterError(f"partition selector {which} out of range [0, {self.t})")
        if position not in self._block_maps[which]:
            raise ParameterError(f"invalid position {position}")
        b = self._block_maps[which][position]
        return b, self.block_sets[which][b]

    def recovering_sets(self, position: int) -> List[frozenset]:
        return [frozenset(p for p in self._selected(position, w)[1] if p != position) for w in range(self.t)]

    def repair2(self, symbols: Symbols, position: int, which: int = 0) -> FieldElement:
        b, block = self._selected(position, which)
        delta = self.decoding_polynomial(symbols, position, block=block, needed=self.localities[which], block_id=b)
        return evaluate(delta, self.locations[position])

    def describe(self) -> dict:
        out = super().describe()
        out.update({"m": self.m, "localities": list(self.localities), "certified_distance": self.certified_distance})
        return out


def build_lrc_multi(field: FieldSpec, partitions: Sequence[Partition], k: int) -> Lrc2Code:
    """Smallest m with dim V_m = k over any number of pairwise orthogonal partitions."""
    if len(partitions) < 2:
        raise ParameterError("need at least two partitions")
    for i in range(len(partitions)):
        for j in range(i + 1, len(partitions)):
            if not are_orthogonal(partitions[i], partitions[j]):
                raise ParameterError(f"partitions {i} and {j} are not orthogonal")
    n = len(partitions[0].support)
    if k < 1:
        raise ParameterError("k must be positive")
    for m in range(1, n + 1):
        basis = intersect_spaces(partitions[0], partitions[1], m, *partitions[2:])
        logger.debug("dim V_%d = %d", m, len(basis))
        if len(basis) == k:
            return Lrc2Code(field, partitions, m, basis)
    raise ParameterError(f"k={k} exceeds the dimension {len(basis)} of the full intersection")


def build_lrc2(field: FieldSpec, p1: Partition, p2: Partition, k: int) -> Lrc2Code:
    return build_lrc_multi(field, [p1, p2], k)


def encode2(code: Lrc2Code, message: Sequence) -> List[FieldElement]:
    return code.encode(message)


def repair2(code: Lrc2Code, symbols: Symbols, position: int, which: int = 0) -> FieldElement:
    return code.repair2(symbols, position, which)


# ===============================
# distance and dimension bounds
# ===============================

def _f(m: int) -> Fraction:
    return Fraction(m, 2) if m % 2 == 0 else Fraction(m + 3, 2)


def smallest_m_for_t(t: int) -> int:
    """Least m >= 1 with t * f(m) <= C(m, 2)."""
    if t < 1:
        raise ParameterError("t must be >= 1")
    m = 1
    while t * _f(m) > comb(m, 2):
        m += 1
    return m


def dim_lower_bound(n: int, r: int, m: int) -> Fraction:
    """m(r-1)/(r+1): guaranteed dimension of V_m for two orthogonal r-local partitions."""
    if r < 2:
        raise ParameterError("the dimension bound needs r >= 2")
    return Fraction(m * (r - 1), r + 1)


def multi_distance_lower(n: int, k: int, r: int) -> int:
    """n - k - ceil(2k/(r-1)) + 1."""
    if r < 2:
        raise ParameterError("the distance bound needs r >= 2")
    return n - k - (-(-2 * k // (r - 1))) + 1


# ===============================
# product codes
# ===============================

class ProductCode:
    """Tensor product of two evaluation codes; positions are the grid, row-major."""

    construction = "product"

    def __init__(self, c1: EvaluationCode, c2: EvaluationCode):
        if c1.field != c2.field:
            raise ParameterError("component codes are over different fields")
        self.field = c1.field
        self.components = (c1, c2)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.components[0].n, self.components[1].n

    @property
    def n(self) -> int:
        return self.components[0].n * self.components[1].n

    @property
    def k(self) -> int:
        return self.components[0].k * self.components[1].k

    @property
    def designed_distance(self) -> int:
        return self.components[0].designed_distance * self.components[1].designed_distance

    @property
    def certified_distance(self) -> int:
        return self.components[0].certified_distance * self.components[1].certified_distance

    @cached_property
    def generator(self) -> List[List[FieldElement]]:
        g1, g2 = self.components[0].generator, self.components[1].generator
        return [[x * y for x in r1 for y in r2] for r1 in g1 for r2 in g2]

    def encode_grid(self, matrix: Sequence[Sequence]) -> List[List[FieldElement]]:
        c1, c2 = self.components
        if len(matrix) != c1.k or any(len(row) != c2.k for row in matrix):
            raise ParameterError(f"message must be a {c1.k} x {c2.k} matrix")
        a = [[self.field.element(v) for v in row] for row in matrix]
        g1, g2 = c1.generator, c2.generator
        zero = self.field.zero
        partial = []
        for i in range(c1.k):
            row = []
            for y in range(c2.n):
                acc = zero
                for j in range(c2.k):
                    acc = acc + a[i][j] * g2[j][y]
                row.append(acc)
            partial.append(row)
        grid = []
        for x in range(c1.n):
            row = []
            for y in range(c2.n):
                acc = zero
                for i in range(c1.k):
                    acc = acc + g1[i][x] * partial[i][y]
                row.append(acc)
            grid.append(row)
        return grid

    def encode(self, message: Sequence) -> List[FieldElement]:
        """Flat message (row-major k1 x k2) to flat codeword (row-major n1 x n2)."""
        k2 = self.components[1].k
        if len(message) != self.k:
            raise ParameterError(f"message has length {len(message)}, expected {self.k}")
        matrix = [list(message[i * k2:(i + 1) * k2]) for i in range(self.components[0].k)]
        return [s for row in self.encode_grid(matrix) for s in row]

    def recovering_sets(self, position: int) -> List[frozenset]:
        n1, n2 = self.shape
        x, y = divmod(position, n2)
        c1, c2 = self.components
        col = frozenset(i * n2 + y for i in c1.recovering_set(x))
        row = frozenset(x * n2 + j for j in c2.recovering_set(y))
        return [col, row]

    def recovering_set(self, position: int) -> frozenset:
        return self.recovering_sets(position)[0]

    def repair_grid(self, grid: Sequence[Sequence[Optional[FieldElement]]], cell: Tuple[int, int], axis: int = 1) -> FieldElement:
        """Axis 1 repairs along x with C1 at fixed y; axis 2 along y with C2 at fixed x."""
        x, y = cell
        c1, c2 = self.components
        if axis == 1:
            return c1.repair([row[y] for row in grid], x)
        if axis == 2:
            return c2.repair(list(grid[x]), y)
        raise ParameterError(f"axis must be 1 or 2, got {axis}")

    def repair(self, symbols: Symbols, position: int, axis: int = 1) -> FieldElement:
        n2 = self.shape[1]
        grid = [list(symbols[i * n2:(i + 1) * n2]) for i in range(self.shape[0])]
        return self.repair_grid(grid, divmod(position, n2), axis)

    def describe(self) -> dict:
        return {"construction": self.construction, "n": self.n, "k": self.k,
                "designed_distance": self.designed_distance}


def product_build(c1: EvaluationCode, c2: EvaluationCode) -> ProductCode:
    return ProductCode(c1, c2)


def product_encode(code: ProductCode, matrix: Sequence[Sequence]) -> List[List[FieldElement]]:
    return code.encode_grid(matrix)


def product_repair(code: ProductCode, grid, cell: Tuple[int, int], axis: int = 1) -> FieldElement:
    try:
        return code.repair_grid(grid, cell, axis)
    except InsufficientSurvivorsError as exc:
        raise InsufficientSurvivorsError(f"axis {axis}: {exc}", block=exc.block) from exc
