"""lrc.General.general

Generalizations of the evaluation construction:

- arbitrary length codes whose last block is short (s = n mod (r+1) points),
- CRT codes where every block restricts to its own (n_i, k_i) MDS code,
- local-MDS codes whose blocks of r+rho-1 points are repairable from any r
  survivors.

Provides:
- `ArbitraryLengthCode`, `CrtCode`, `LocalMdsCode`
- `build_arbitrary_general`, `build_arbitrary_linear`, `arbitrary_dimension_cap`
- `crt_build`, `crt_encode`, `crt_local_decode`
- `local_mds_build`
"""

from __future__ import annotations

import logging
from typing import List, Sequence, Tuple

from lrc.Bounds.bounds import residue_code_distance
from lrc.Core.lrc_core import EvaluationCode, Symbols
from lrc.errors import InsufficientSurvivorsError, ParameterError
from lrc.Field.gf import FieldElement, FieldSpec
from lrc.Field.linalg import rank
from lrc.Good_Poly.goodpoly import GoodPolynomial, Partition, verify_good
from lrc.Poly.poly import Polynomial, annihilator, crt_combine, evaluate, interpolate, monomial

logger = logging.getLogger(__name__)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _blocks_of(partition: Partition) -> List[List[int]]:
    return [partition.positions_of(i) for i in range(len(partition.blocks))]


# ===============================
# arbitrary length
# ===============================

class ArbitraryLengthCode(EvaluationCode):
    construction = "arbitrary"

    def __init__(self, field: FieldSpec, partition: Partition, r: int, basis: Sequence[Polynomial],
                 good: GoodPolynomial = None):
        blocks = _blocks_of(partition)
        s = len(partition.blocks[-1])
        needed = [r] * (len(blocks) - 1) + [s - 1]
        super().__init__(field, partition.support, basis, blocks, needed)
        self.partition = partition
        self.r = r
        self.s = s
        self.h_short = annihilator(field, partition.blocks[-1])
        self.good = good

    def describe(self) -> dict:
        out = super().describe()
        out.update({"r": self.r, "s": self.s})
        return out


def arbitrary_dimension_cap(num_blocks: int, r: int) -> int:
    """r*m - 1: the x^{s-1} part loses the one dimension not vanishing on the short block."""
    return r * num_blocks - 1


def _check_arbitrary_partition(partition: Partition, r: int) -> int:
    sizes = partition.sizes
    s = sizes[-1]
    if any(size != r + 1 for size in sizes[:-1]):
        raise ParameterError(f"all blocks but the last must have r+1 = {r + 1} points")
    if s == r + 1:
        raise ParameterError("last block is full; use the equal-block construction")
    if s < 2:
        raise ParameterError(f"short block size s={s} must be at least 2")
    return s


def build_arbitrary_general(field: FieldSpec, partition: Partition, r: int,
                            mappings: Sequence[Sequence[Polynomial]]) -> ArbitraryLengthCode:
    """Encoding space sum_{i<s} Phi_i x^i + sum_{i>=s} Phi_i x^{i-s} h_short.

    `mappings[i]` lists the images of the unit vectors under Phi_i; each must
    be constant on every block, and Phi_{s-1} must vanish on the short block.
    """
    s = _check_arbitrary_partition(partition, r)
    if len(mappings) != r:
        raise ParameterError(f"need r = {r} coefficient mappings, got {len(mappings)}")
    short = partition.blocks[-1]
    h = annihilator(field, short)
    basis = []
    for i, images in enumerate(mappings):
        for t, phi in enumerate(images):
            if not verify_good(phi, partition).ok:
                raise ParameterError(f"image {t} of mapping {i} is not constant on the blocks")
            if i == s - 1 and any(not evaluate(phi, a).is_zero() for a in short):
                raise ParameterError(f"image {t} of mapping {s - 1} does not vanish on the short block")
            basis.append(phi * monomial(field, i) if i < s else phi * monomial(field, i - s) * h)
    n = len(partition.support)
    code = ArbitraryLengthCode(field, partition, r, basis)
    if code.k > arbitrary_dimension_cap(len(partition.blocks), r):
        raise ParameterError(f"k={code.k} exceeds the dimension cap")
    if rank(code.generator, field) != code.k:
        raise ParameterError("encoding map is not injective on the evaluation set")
    logger.debug("arbitrary length code n=%d k=%d r=%d s=%d", n, code.k, r, s)
    return code


def build_arbitrary_linear(field: FieldSpec, good: GoodPolynomial, k: int) -> ArbitraryLengthCode:
    """Powers of g (shifted to vanish on the short block) as coefficient polynomials; needs r | k+1."""
    r = int(good.g.degree) - 1
    partition = good.partition
    _check_arbitrary_partition(partition, r)
    s = len(partition.blocks[-1])
    if (k + 1) % r:
        raise ParameterError(f"need r | k+1, got k={k}, r={r}")
    g = good.g
    level = evaluate(g, partition.blocks[-1][0])
    if not level.is_zero():
        g = g - level
    powers = (k + 1) // r
    mappings = []
    for i in range(r):
        start = 1 if i == s - 1 else 0
        mappings.append([g ** j for j in range(start, powers)])
    code = build_arbitrary_general(field, partition, r, mappings)
    code.good = good
    assert code.max_degree <= k + _ceil_div(k, r) - 1
    return code


# ===============================
# CRT codes
# ===============================

class CrtCode(EvaluationCode):
    """Blocks A_i with local dimensions k_i; residues are filled block by block."""

    construction = "crt"

    def __init__(self, field: FieldSpec, partition: Partition, local_dims: Sequence[int], k: int,
                 basis: Sequence[Polynomial]):
        blocks = _blocks_of(partition)
        self.message_dims = _message_dims(local_dims, k)
        designed = residue_code_distance([len(b) for b in blocks], self.message_dims)
        super().__init__(field, partition.support, basis, blocks, list(local_dims), designed_distance=designed)
        self.partition = partition
        self.local_dims = tuple(local_dims)
        self.moduli = tuple(annihilator(field, b) for b in partition.blocks)

    def layout(self) -> List[Tuple[int, int]]:
        """Message index -> (block, coefficient degree) of its residue."""
        return [(i, c) for i, ki in enumerate(self.local_dims) for c in range(ki)][: self.k]

    def residue_polynomials(self, message: Sequence) -> List[Polynomial]:
        a = self._message(message)
        coeffs = [[self.field.zero] * ki for ki in self.local_dims]
        for value, (i, c) in zip(a, self.layout()):
            coeffs[i][c] = value
        return [Polynomial(self.field, cs) for cs in coeffs]

    def describe(self) -> dict:
        out = super().describe()
        out["local_dims"] = list(self.local_dims)
        return out


def _message_dims(local_dims: Sequence[int], k: int) -> Tuple[int, ...]:
    """Residue coefficients per block that carry message symbols (blocks are filled in order)."""
    out = []
    remaining = k
    for ki in local_dims:
        take = min(ki, remaining)
        out.append(take)
        remaining -= take
    return tuple(out)


def crt_build(field: FieldSpec, blocks: Sequence[Tuple[Sequence[FieldElement], int]], k: int) -> CrtCode:
    partition = Partition(tuple(tuple(points) for points, _ in blocks))
    local_dims = [ki for _, ki in blocks]
    n = len(partition.support)
    if n > field.q:
        raise ParameterError(f"n={n} exceeds q={field.q}")
    for i, (points, ki) in enumerate(blocks):
        if not 1 <= ki <= len(points):
            raise ParameterError(f"block {i}: need 1 <= k_i <= n_i, got k_i={ki}, n_i={len(points)}")
    if not 1 <= k <= sum(local_dims):
        raise ParameterError(f"k={k} must lie in [1, {sum(local_dims)}]")
    moduli = [annihilator(field, points) for points, _ in blocks]
    zeros = [Polynomial(field) for _ in blocks]
    basis = []
    for i, ki in enumerate(local_dims):
        for c in range(ki):
            residues = list(zeros)
            residues[i] = monomial(field, c)
            basis.append(crt_combine(residues, moduli))
    return CrtCode(field, partition, local_dims, k, basis[:k])


def crt_encode(code: CrtCode, message: Sequence) -> List[FieldElement]:
    f = crt_combine(code.residue_polynomials(message), list(code.moduli))
    return [evaluate(f, a) for a in code.locations]


def crt_local_decode(code: CrtCode, block: int, symbols: Symbols) -> List[FieldElement]:
    """Recover every symbol of a block from any k_i of its survivors."""
    if not 0 <= block < len(code.blocks):
        raise ParameterError(f"invalid block {block}")
    positions = code.blocks[block]
    ki = code.local_dims[block]
    survivors = [(code.locations[p], code.field.element(symbols[p])) for p in positions if symbols[p] is not None]
    if len(survivors) < ki:
        raise InsufficientSurvivorsError(
            f"block {block} has {len(survivors)} surviving symbols, {ki} needed", block=block)
    residue = interpolate(code.field, survivors[:ki])
    return [evaluate(residue, code.locations[p]) for p in positions]


# ===============================
# local MDS codes
# ===============================

class LocalMdsCode(EvaluationCode):
    construction = "local_mds"

    def __init__(self, field: FieldSpec, good: GoodPolynomial, r: int, rho: int, basis: Sequence[Polynomial],
                 designed_distance: int):
        partition = good.partition
        blocks = _blocks_of(partition)
        super().__init__(field, partition.support, basis, blocks, [r] * len(blocks), designed_distance)
        self.partition = partition
        self.good = good
        self.r = r
        self.rho = rho

    def describe(self) -> dict:
        out = super().describe()
        out.update({"r": self.r, "rho": self.rho})
        return out


def local_mds_build(field: FieldSpec, good: GoodPolynomial, k: int, rho: int) -> LocalMdsCode:
    """Basis g^{i div b} x^{i mod b} for i mod b < r, b = r + rho - 1 = deg g."""
    if rho < 2:
        raise ParameterError("rho must be at least 2")
    b = int(good.g.degree)
    r = b - rho + 1
    partition = good.partition
    n = len(partition.support)
    if r < 1:
        raise ParameterError(f"deg g = {b} leaves no room for r with rho = {rho}")
    if any(size != b for size in partition.sizes):
        raise ParameterError(f"every block must have r+rho-1 = {b} points")
    if k % r:
        raise ParameterError(f"need r | k, got k={k}, r={r}")
    if k // r > len(partition.blocks):
        raise ParameterError(f"k/r = {k // r} exceeds the number of blocks {len(partition.blocks)}")
    check = verify_good(good.g, partition)
    if not check.ok:
        raise ParameterError(f"g is not constant on block {check.witness[0]}")
    top = k - 1 + (k // r - 1) * (rho - 1)
    basis = [good.g ** (i // b) * monomial(field, i % b) for i in range(top + 1) if i % b < r]
    designed = n - k + 1 - (k // r - 1) * (rho - 1)
    return LocalMdsCode(field, good, r, rho, basis, designed)
