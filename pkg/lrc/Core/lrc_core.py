"""lrc.Core.lrc_core

Optimal (n, k, r) locally recoverable codes by polynomial evaluation.

A message is mapped to an encoding polynomial f_a whose restriction to every
block of the evaluation set has degree < r, so any erased symbol is the value
of the interpolant through the other r symbols of its block.

Provides:
- `EvaluationCode`: shared evaluation/repair machinery for every variant.
- `LrcCode`, `SystematicLrcCode`, `LrcParams`, `MembershipResult`.
- `build`, `build_reed_solomon`, `build_from_mapping`, `systematic_build`.
- `encode`, `repair`, `recovering_set` (module-level wrappers).
- `algebra_membership`, `lagrange_block_basis`, `algebra_basis`, `message_indices`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from lrc.errors import InsufficientSurvivorsError, ParameterError
from lrc.Field.gf import FieldElement, FieldSpec
from lrc.Field.linalg import rank
from lrc.Good_Poly.goodpoly import GoodPolynomial, Partition, verify_good
from lrc.Poly.poly import (Polynomial, compose, echelon_basis, evaluate, interpolate,
                           monomial)

logger = logging.getLogger(__name__)

Codeword = List[FieldElement]
Symbols = Sequence[Optional[FieldElement]]


@dataclass(frozen=True)
class LrcParams:
    n: int
    k: int
    r: int

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "r": self.r}


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# ===============================
# shared evaluation-code machinery
# ===============================

class EvaluationCode:
    """Linear code {(f(a))_{a in locations} : f in span(basis)}.

    `blocks` lists the codeword positions of each repair block and `needed`
    how many surviving symbols of a block determine an erased one.
    """

    construction = "evaluation"

    def __init__(
        self,
        field: FieldSpec,
        locations: Sequence[FieldElement],
        basis: Sequence[Polynomial],
        blocks: Sequence[Sequence[int]],
        needed: Sequence[int],
        designed_distance: Optional[int] = None,
    ):
        self.field = field
        self.locations: Tuple[FieldElement, ...] = tuple(locations)
        self.basis: Tuple[Polynomial, ...] = tuple(basis)
        self.blocks: Tuple[Tuple[int, ...], ...] = tuple(tuple(b) for b in blocks)
        self.needed: Tuple[int, ...] = tuple(needed)
        if len(set(self.locations)) != len(self.locations):
            raise ParameterError("evaluation points must be distinct")
        self.max_degree = max((f.degree for f in self.basis), default=0)
        self.designed_distance = self.n - int(self.max_degree) if designed_distance is None else designed_distance
        self._block_of = {}
        for b, positions in enumerate(self.blocks):
            for pos in positions:
                self._block_of[pos] = b

    @property
    def n(self) -> int:
        return len(self.locations)

    @property
    def k(self) -> int:
        return len(self.basis)

    @cached_property
    def generator(self) -> List[List[FieldElement]]:
        """k x n generator matrix: row m is basis[m] evaluated on the locations."""
        return [[evaluate(f, a) for a in self.locations] for f in self.basis]

    def _message(self, message: Sequence) -> List[FieldElement]:
        if len(message) != self.k:
            raise ParameterError(f"message has length {len(message)}, expected {self.k}")
        return [self.field.element(a) for a in message]

    def encoding_polynomial(self, message: Sequence) -> Polynomial:
        f = Polynomial(self.field)
        for a, b in zip(self._message(message), self.basis):
            if not a.is_zero():
                f = f + b.scale(a)
        assert f.degree <= self.max_degree
        return f

    def encode(self, message: Sequence) -> Codeword:
        f = self.encoding_polynomial(message)
        return [evaluate(f, a) for a in self.locations]

    @property
    def certified_distance(self) -> int:
        """Best proven lower bound on d; the degree bound unless a subclass knows more."""
        return self.designed_distance

    # ----- locality -----
    def block_index(self, position: int) -> int:
        if position not in self._block_of:
            raise ParameterError(f"invalid position {position}")
        return self._block_of[position]

    def recovering_set(self, position: int) -> frozenset:
        b = self.block_index(position)
        others = [p for p in self.blocks[b] if p != position]
        return frozenset(others[: self.needed[b]])

    def recovering_sets(self, position: int) -> List[frozenset]:
        return [self.recovering_set(position)]

    def decoding_polynomial(self, symbols: Symbols, position: int, block: Optional[Sequence[int]] = None,
                            needed: Optional[int] = None, block_id: Optional[int] = None) -> Polynomial:
        """Interpolant of degree < needed through surviving symbols of the block."""
        if len(symbols) != self.n:
            raise ParameterError(f"codeword has length {len(symbols)}, expected {self.n}")
        if block is None:
            block_id = self.block_index(position)
            block = self.blocks[block_id]
            needed = self.needed[block_id]
        survivors = [(self.locations[p], self.field.element(symbols[p]))
                     for p in block if p != position and symbols[p] is not None]
        if len(survivors) < needed:
            raise InsufficientSurvivorsError(
                f"block {block_id} has {len(survivors)} surviving symbols, {needed} needed", block=block_id)
        return interpolate(self.field, survivors[:needed])

    def repair(self, symbols: Symbols, position: int) -> FieldElement:
        delta = self.decoding_polynomial(symbols, position)
        return evaluate(delta, self.locations[position])

    def describe(self) -> dict:
        return {"construction": self.construction, "n": self.n, "k": self.k,
                "designed_distance": self.designed_distance}


# ===============================
# good-polynomial and mapping codes
# ===============================

class LrcCode(EvaluationCode):
    """Code from a good polynomial (or an explicit algebra basis), block order = partition order."""

    construction = "lrc"

    def __init__(self, field: FieldSpec, params: LrcParams, partition: Partition, basis: Sequence[Polynomial],
                 good: Optional[GoodPolynomial] = None, needed: Optional[Sequence[int]] = None,
                 designed_distance: Optional[int] = None):
        blocks = [partition.positions_of(i) for i in range(len(partition.blocks))]
        if needed is None:
            needed = [min(params.r, len(b) - 1) for b in blocks]
        super().__init__(field, partition.support, basis, blocks, needed, designed_distance)
        self.params = params
        self.partition = partition
        self.good = good

    @property
    def r(self) -> int:
        return self.params.r

    def coefficient_polynomials(self, message: Sequence) -> List[Polynomial]:
        """f_0..f_{r-1} with f_a = sum_i f_i x^i (good-polynomial codes only)."""
        if self.good is None:
            raise ParameterError("code was not built from a good polynomial")
        r = self.params.r
        g = self.good.g
        parts = [Polynomial(self.field) for _ in range(r)]
        for a, m in zip(self._message(message), message_indices(self.params.k, r)):
            parts[m % (r + 1)] = parts[m % (r + 1)] + (g ** (m // (r + 1))).scale(a)
        return parts


class SystematicLrcCode(LrcCode):
    """LrcCode whose message symbols appear verbatim at the information positions."""

    construction = "systematic"

    def __init__(self, base: LrcCode, basis: Sequence[Polynomial], info_points: Sequence[Sequence[FieldElement]]):
        super().__init__(base.field, base.params, base.partition, basis, good=base.good)
        self.info_points = tuple(tuple(b) for b in info_points)
        index = {a: t for t, a in enumerate(self.locations)}
        self.info_positions: Tuple[int, ...] = tuple(index[a] for b in self.info_points for a in b)

    def coefficient_polynomials(self, message: Sequence) -> List[Polynomial]:
        """f_0..f_{r-1} of the systematic encoding polynomial, split by algebra membership."""
        result = algebra_membership(self.encoding_polynomial(message), self.partition, self.params.r)
        if not result.member:
            raise ParameterError(f"systematic encoding polynomial left the encoding space: {result.reason}")
        return list(result.components)

    def extract_message(self, codeword: Sequence[FieldElement]) -> List[FieldElement]:
        return [codeword[t] for t in self.info_positions]


def message_indices(k: int, r: int) -> List[int]:
    """Flat message layout: m in [0, k + ceil(k/r) - 2] with m != r mod (r+1)."""
    top = k + _ceil_div(k, r) - 2
    return [m for m in range(top + 1) if m % (r + 1) != r]


def build(field: FieldSpec, good: GoodPolynomial, k: int) -> LrcCode:
    """Good-polynomial construction: basis {g^j x^i}, i < r, with j capped per residue class."""
    r = int(good.g.degree) - 1
    partition = good.partition
    n = len(partition.support)
    if r < 1:
        raise ParameterError("good polynomial must have degree >= 2")
    if any(size != r + 1 for size in partition.sizes):
        raise ParameterError(f"every block must have deg g = {r + 1} points, got sizes {partition.sizes}")
    if n > field.q:
        raise ParameterError(f"n={n} exceeds q={field.q}")
    if not 1 <= r <= k:
        raise ParameterError(f"need 1 <= r <= k, got r={r}, k={k}")
    if k * (r + 1) > n * r:
        raise ParameterError(f"k={k} exceeds n*r/(r+1) = {n * r / (r + 1):g}")
    check = verify_good(good.g, partition)
    if not check.ok:
        i, a, b = check.witness
        raise ParameterError(f"g is not constant on block {i}: g({a.value}) != g({b.value})")
    basis = [good.g ** (m // (r + 1)) * monomial(field, m % (r + 1)) for m in message_indices(k, r)]
    params = LrcParams(n, k, r)
    code = LrcCode(field, params, partition, basis, good=good)
    assert code.max_degree <= k + _ceil_div(k, r) - 2
    logger.debug("built (%d,%d,%d) code over %r", n, k, r, field)
    return code


def build_reed_solomon(field: FieldSpec, points: Sequence[FieldElement], k: int) -> LrcCode:
    """r = k: basis 1, x, ..., x^{k-1} on arbitrary points, one block of locality k."""
    n = len(points)
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got k={k}, n={n}")
    partition = Partition((tuple(points),))
    basis = [monomial(field, i) for i in range(k)]
    code = LrcCode(field, LrcParams(n, k, k), partition, basis, needed=[min(k, n - 1)])
    code.construction = "rs"
    return code


# ===============================
# the algebra F_A[x] and the mapping construction
# ===============================

@dataclass(frozen=True)
class MembershipResult:
    """f = sum_i components[i] x^i with each component constant on blocks.

    `exact` is False when the decomposition only holds on the support.
    """

    member: bool
    components: Optional[Tuple[Polynomial, ...]] = None
    exact: bool = True
    reason: str = ""


def lagrange_block_basis(partition: Partition) -> List[Polynomial]:
    """f_i with f_i = 1 on block i and 0 on the other blocks, deg < |A|."""
    support = partition.support
    field = support[0].field
    out = []
    for i, block in enumerate(partition.blocks):
        members = set(block)
        out.append(interpolate(field, [(a, field.one if a in members else field.zero) for a in support]))
    return out


def algebra_basis(partition: Partition) -> List[Polynomial]:
    """Echelon basis of the polynomials of degree < |A| constant on every block."""
    field = partition.support[0].field
    return echelon_basis(field, lagrange_block_basis(partition))


def _constant_on_blocks(f: Polynomial, partition: Partition) -> bool:
    return verify_good(f, partition).ok


def algebra_membership(f: Polynomial, partition: Partition, r: int) -> MembershipResult:
    """Decide f in sum_{i<r} F_A[x] x^i and return the decomposition.

    Residue classes of exponents mod (r+1) are tried first; when that split
    does not give block-constant parts the block restrictions are interpolated.
    """
    support = partition.support
    field = f.field
    if f.degree >= len(support):
        return MembershipResult(False, reason=f"degree {f.degree} >= |A| = {len(support)}")
    # parts[i] collects the coefficients of x^{i + t(r+1)}, shifted down by i
    parts = []
    for i in range(r + 1):
        span = range(max(len(f.coeffs) - i, 0))
        parts.append(Polynomial(field, [f.coeff(i + j) if j % (r + 1) == 0 else field.zero for j in span]))
    if parts[r].is_zero() and all(_constant_on_blocks(p, partition) for p in parts[:r]):
        return MembershipResult(True, tuple(parts[:r]))

    local = []
    for i, block in enumerate(partition.blocks):
        delta = interpolate(field, [(a, evaluate(f, a)) for a in block])
        if delta.degree >= r:
            return MembershipResult(False, reason=f"restriction to block {i} has degree {delta.degree} >= r={r}")
        local.append(delta)
    components = []
    for i in range(r):
        pts = [(a, local[b].coeff(i)) for b, block in enumerate(partition.blocks) for a in block]
        components.append(interpolate(field, pts))
    return MembershipResult(True, tuple(components), exact=False)


def build_from_mapping(field: FieldSpec, partition: Partition, r: int,
                       encoding_basis: Sequence[Polynomial]) -> LrcCode:
    """Mapping construction with a linear mapping given by its image basis."""
    n = len(partition.support)
    if any(size != r + 1 for size in partition.sizes):
        raise ParameterError(f"every block must have r+1 = {r + 1} points")
    for t, f in enumerate(encoding_basis):
        result = algebra_membership(f, partition, r)
        if not result.member:
            raise ParameterError(f"basis polynomial {t} is not in the encoding space: {result.reason}")
    width = max((len(f.coeffs) for f in encoding_basis), default=0)
    coeffs = [[f.coeff(i) for i in range(width)] for f in encoding_basis]
    if rank(coeffs, field) != len(encoding_basis):
        raise ParameterError("encoding basis is linearly dependent")
    code = LrcCode(field, LrcParams(n, len(encoding_basis), r), partition, encoding_basis)
    code.construction = "mapping"
    return code


def systematic_build(code: LrcCode, info_points: Optional[Sequence[Sequence[FieldElement]]] = None) -> SystematicLrcCode:
    """Systematic encoder with f_a = sum_i fbar_i(x) sum_j a_ij phi_ij(x).

    fbar_i is the polynomial in g equal to 1 on block i and 0 on the other
    information blocks; phi_ij is the Lagrange basis on the points B_i.
    """
    if code.good is None:
        raise ParameterError("systematic encoding needs a good-polynomial code")
    field, r, k = code.field, code.params.r, code.params.k
    if k % r:
        raise ParameterError(f"systematic encoding needs r | k, got k={k}, r={r}")
    groups = k // r
    blocks = code.partition.blocks
    if groups > len(blocks):
        raise ParameterError(f"k/r = {groups} exceeds the number of blocks {len(blocks)}")
    if info_points is None:
        info_points = [blocks[i][:r] for i in range(groups)]
    if len(info_points) != groups:
        raise ParameterError(f"need {groups} information point sets")
    for i, pts in enumerate(info_points):
        if len(pts) != r or len(set(pts)) != r or not set(pts) <= set(blocks[i]):
            raise ParameterError(f"information set {i} must be {r} distinct points of block {i}")
    values = [code.good.block_values[i] for i in range(groups)]
    assert len(set(values)) == groups, "block values of g must be distinct"

    g = code.good.g
    basis = []
    for i in range(groups):
        # Lagrange polynomial in y = g(x) picking out information block i
        lag = Polynomial(field, [1])
        for j in range(groups):
            if j != i:
                lag = lag * Polynomial(field, [-values[j], 1]).scale((values[i] - values[j]).inverse())
        fbar = compose(lag, g)
        for j in range(r):
            phi = interpolate(field, [(b, field.one if t == j else field.zero) for t, b in enumerate(info_points[i])])
            basis.append(fbar * phi)
    sys_code = SystematicLrcCode(code, basis, info_points)
    assert sys_code.max_degree <= k + _ceil_div(k, r) - 2
    return sys_code


# ===============================
# module-level wrappers
# ===============================

def encode(code: EvaluationCode, message: Sequence) -> Codeword:
    return code.encode(message)


def repair(code: EvaluationCode, symbols: Symbols, erased_index: int) -> FieldElement:
    return code.repair(symbols, erased_index)


def recovering_set(code: EvaluationCode, position: int) -> frozenset:
    return code.recovering_set(position)
