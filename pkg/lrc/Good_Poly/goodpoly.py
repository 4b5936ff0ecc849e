"""lrc.Good_Poly.goodpoly

Good polynomials: polynomials that are constant on every block of a
partition of the evaluation set. Built from multiplicative subgroups,
additive subgroups, the combined root-of-unity construction, or found by a
seeded randomized search. Also checks orthogonality of partitions.

Provides:
- `Partition`, `GoodPolynomial`, `GoodCheck`
- `from_multiplicative_subgroup`, `from_additive_subgroup`, `from_combined`
- `make_good_polynomial`, `coset_partition`
- `verify_good`, `existence_count`, `existence_ratio`, `search_good_polynomial`
- `are_orthogonal`, `subgroups_yield_orthogonal`, `plan_good_polynomial`
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, gcd
from typing import Dict, List, Optional, Sequence, Tuple

from lrc import config
from lrc.errors import ParameterError
from lrc.Field.gf import (FieldElement, FieldSpec, enumerate_elements, multiplicative_order,
                          smallest_element_of_order, subfield_elements)
from lrc.Poly.poly import Polynomial, annihilator, evaluate, monomial

logger = logging.getLogger(__name__)

# samples handed to one worker at a time
SEARCH_CHUNK = 64


# ===============================
# types
# ===============================

@dataclass(frozen=True)
class Partition:
    """Disjoint blocks of field elements; the support is their union."""

    blocks: Tuple[Tuple[FieldElement, ...], ...]

    def __post_init__(self):
        seen = set()
        for block in self.blocks:
            for a in block:
                if a in seen:
                    raise ParameterError(f"point {a.value} appears in more than one block")
                seen.add(a)

    @classmethod
    def of(cls, blocks: Sequence[Sequence[FieldElement]]) -> "Partition":
        return cls(tuple(tuple(b) for b in blocks))

    @classmethod
    def from_ints(cls, field: FieldSpec, blocks: Sequence[Sequence[int]]) -> "Partition":
        return cls(tuple(tuple(field.element(v) for v in b) for b in blocks))

    @property
    def support(self) -> Tuple[FieldElement, ...]:
        return tuple(a for block in self.blocks for a in block)

    @property
    def sizes(self) -> List[int]:
        return [len(b) for b in self.blocks]

    def block_of(self, point: FieldElement) -> int:
        for i, block in enumerate(self.blocks):
            if point in block:
                return i
        raise ParameterError(f"point {point.value} is not in the support")

    def positions_of(self, i: int) -> List[int]:
        """Codeword positions of block i under block-concatenation order."""
        start = sum(len(b) for b in self.blocks[:i])
        return list(range(start, start + len(self.blocks[i])))

    def to_ints(self) -> List[List[int]]:
        return [[a.value for a in b] for b in self.blocks]


@dataclass(frozen=True)
class GoodPolynomial:
    g: Polynomial
    partition: Partition
    block_values: Tuple[FieldElement, ...]

    @property
    def field(self) -> FieldSpec:
        return self.g.field

    def take(self, num_blocks: int) -> "GoodPolynomial":
        """Keep the first num_blocks blocks whose size equals deg g."""
        size = self.g.degree
        idx = [i for i, b in enumerate(self.partition.blocks) if len(b) == size][:num_blocks]
        if len(idx) < num_blocks:
            raise ParameterError(f"only {len(idx)} blocks of size {size} available, {num_blocks} requested")
        return GoodPolynomial(self.g, Partition(tuple(self.partition.blocks[i] for i in idx)),
                              tuple(self.block_values[i] for i in idx))

    def with_short_last_block(self, s: int) -> "GoodPolynomial":
        """Truncate the last block to its first s points."""
        blocks = list(self.partition.blocks)
        if not 0 < s <= len(blocks[-1]):
            raise ParameterError(f"cannot shorten a block of size {len(blocks[-1])} to {s}")
        blocks[-1] = blocks[-1][:s]
        return GoodPolynomial(self.g, Partition(tuple(blocks)), self.block_values)

    def to_json(self) -> dict:
        return {"g": self.g.to_ints(), "partition": self.partition.to_ints(),
                "values": [v.value for v in self.block_values]}


@dataclass(frozen=True)
class GoodCheck:
    """Outcome of verify_good: block values, or the first non-constancy witness."""

    ok: bool
    block_values: Optional[Tuple[FieldElement, ...]] = None
    witness: Optional[Tuple[int, FieldElement, FieldElement]] = None


# ===============================
# verification
# ===============================

def verify_good(g: Polynomial, partition: Partition) -> GoodCheck:
    values = []
    for i, block in enumerate(partition.blocks):
        if not block:
            values.append(g.field.zero)
            continue
        first = evaluate(g, block[0])
        for beta in block[1:]:
            if evaluate(g, beta) != first:
                return GoodCheck(False, witness=(i, block[0], beta))
        values.append(first)
    return GoodCheck(True, block_values=tuple(values))


def make_good_polynomial(g: Polynomial, partition: Partition) -> GoodPolynomial:
    """Pair g with a partition it is constant on; raises ParameterError with the first bad block."""
    check = verify_good(g, partition)
    if not check.ok:
        i, a, b = check.witness
        raise ParameterError(f"g is not constant on block {i}: g({a.value}) != g({b.value})")
    return GoodPolynomial(g, partition, check.block_values)


# ===============================
# subgroup constructions
# ===============================

def from_multiplicative_subgroup(field: FieldSpec, generator: FieldElement, num_blocks: int) -> GoodPolynomial:
    """g = x^|H| on the first num_blocks cosets of H = <generator>."""
    order = multiplicative_order(generator)
    if num_blocks < 1 or num_blocks * order > field.q - 1:
        raise ParameterError(f"{num_blocks} cosets of a subgroup of order {order} do not fit in F_{field.q}^*")
    partition = coset_partition(field, generator, [field.element(v) for v in range(1, field.q)])
    return make_good_polynomial(monomial(field, order), Partition(partition.blocks[:num_blocks]))


def coset_partition(field: FieldSpec, generator: FieldElement, support: Sequence[FieldElement]) -> Partition:
    """Cosets rep*<generator> covering `support`; each rep is the smallest uncovered point."""
    subgroup = [generator ** i for i in range(multiplicative_order(generator))]
    members = set(support)
    covered = set()
    blocks = []
    for rep in sorted(members, key=lambda a: a.value):
        if rep in covered:
            continue
        coset = tuple(rep * h for h in subgroup)
        if not members.issuperset(coset):
            raise ParameterError(f"support is not a union of cosets of <{generator.value}>")
        covered.update(coset)
        blocks.append(coset)
    return Partition(tuple(blocks))


def _additive_span(field: FieldSpec, generators: Sequence[FieldElement]) -> List[FieldElement]:
    span = set()
    for combo in product(range(field.p), repeat=len(generators)):
        acc = field.zero
        for c, gen in zip(combo, generators):
            acc = acc + gen * c
        span.add(acc)
    return sorted(span, key=lambda a: a.value)


def _additive_cosets(field: FieldSpec, subgroup: Sequence[FieldElement], num_blocks: int) -> List[Tuple[FieldElement, ...]]:
    covered = set()
    blocks = []
    for v in range(field.q):
        rep = field.element(v)
        if rep in covered:
            continue
        coset = tuple(rep + h for h in subgroup)
        covered.update(coset)
        blocks.append(coset)
        if len(blocks) == num_blocks:
            break
    return blocks


def from_additive_subgroup(field: FieldSpec, generators: Sequence[FieldElement], num_blocks: int) -> GoodPolynomial:
    """g = annihilator of the F_p-span H of the generators, on cosets of H."""
    subgroup = _additive_span(field, generators)
    if len(subgroup) != field.p ** len(generators):
        raise ParameterError("additive generators are dependent over the prime field")
    if num_blocks < 1 or num_blocks * len(subgroup) > field.q:
        raise ParameterError(f"{num_blocks} cosets of a subgroup of size {len(subgroup)} do not fit in F_{field.q}")
    g = annihilator(field, subgroup)
    return make_good_polynomial(g, Partition(tuple(_additive_cosets(field, subgroup, num_blocks))))


def from_combined(field: FieldSpec, subspace_basis: Sequence[FieldElement], m: int, l: int = 1) -> GoodPolynomial:
    """g = prod_i prod_{h in H} (x + h + alpha_i) over the m-th roots of unity alpha_i.

    H is the F_{p^l}-span of `subspace_basis`. The field is partitioned by the
    value of g: one block of size |H| and blocks of size m|H|.
    """
    p = field.p
    if field.l % l:
        raise ParameterError(f"l={l} does not divide the extension degree {field.l}")
    if m < 1 or (p ** l) % m != 1 % m:
        raise ParameterError(f"p^l = {p ** l} is not 1 mod m = {m}")
    scalars = subfield_elements(field, l)
    subspace = set()
    for combo in product(scalars, repeat=len(subspace_basis)):
        acc = field.zero
        for c, b in zip(combo, subspace_basis):
            acc = acc + c * b
        subspace.add(acc)
    if any(c * h not in subspace for c in scalars for h in subspace):
        raise ParameterError("subspace is not closed under F_{p^l} multiplication")
    roots = [a for a in enumerate_elements(field) if not a.is_zero() and (a ** m).value == 1]
    if len(roots) != m:
        raise ParameterError(f"F_{field.q} holds {len(roots)} m-th roots of unity, expected {m}")
    g = Polynomial(field, [1])
    for alpha in roots:
        for h in sorted(subspace, key=lambda a: a.value):
            g = g * Polynomial(field, [h + alpha, 1])
    fibers: Dict[FieldElement, List[FieldElement]] = {}
    for a in enumerate_elements(field):
        fibers.setdefault(evaluate(g, a), []).append(a)
    blocks = sorted((tuple(b) for b in fibers.values()), key=lambda b: b[0].value)
    logger.debug("combined construction: block sizes %s", [len(b) for b in blocks])
    return make_good_polynomial(g, Partition(tuple(blocks)))


# ===============================
# counting and search
# ===============================

def existence_ratio(q: int, r: int) -> Fraction:
    return Fraction(comb(q, r + 1), q ** r)


def existence_count(q: int, r: int) -> int:
    """ceil(C(q, r+1) / q^r): guaranteed number of disjoint blocks for one degree-(r+1) class."""
    if r + 1 > q:
        raise ParameterError(f"block size {r + 1} exceeds q={q}")
    num, den = comb(q, r + 1), q ** r
    return -(-num // den)


def _fibers_of_sample(field: FieldSpec, elements: Sequence[FieldElement], sample: Tuple[FieldElement, ...]):
    g = annihilator(field, sample)
    fibers: Dict[FieldElement, List[FieldElement]] = {}
    for a in elements:
        fibers.setdefault(evaluate(g, a), []).append(a)
    size = len(sample)
    full = sorted((tuple(b) for b in fibers.values() if len(b) == size), key=lambda b: b[0].value)
    return g, full


def search_good_polynomial(
    field: FieldSpec,
    block_size: int,
    min_blocks: int,
    budget: Optional[int] = None,
    seed: Optional[int] = None,
) -> Optional[GoodPolynomial]:
    """Seeded search for a class of degree-block_size polynomials with min_blocks disjoint root sets.

    Two monic split polynomials are in the same class when they differ by a
    constant, so the class of a sampled annihilator f is read off the value
    fibers of f: every fiber with exactly block_size points is the root set of
    f - c. Returns None when the budget runs out.
    """
    budget = config.search_budget() if budget is None else budget
    seed = config.search_seed() if seed is None else seed
    elements = enumerate_elements(field)
    if block_size > field.q:
        raise ParameterError(f"block size {block_size} exceeds q={field.q}")
    rng = random.Random(seed)
    drawn = 0
    with ThreadPoolExecutor(max_workers=config.workers()) as executor:
        while drawn < budget:
            n = min(SEARCH_CHUNK, budget - drawn)
            samples = [tuple(sorted(rng.sample(elements, block_size), key=lambda a: a.value)) for _ in range(n)]
            drawn += n
            # map keeps sample order, so the first hit is scheduling independent
            for g, blocks in executor.map(lambda s: _fibers_of_sample(field, elements, s), samples):
                if len(blocks) >= min_blocks:
                    logger.info("good polynomial class found after %d samples", drawn)
                    values = tuple(evaluate(g, b[0]) for b in blocks)
                    return GoodPolynomial(g, Partition(tuple(blocks)), values)
    logger.info("search budget of %d samples exhausted", budget)
    return None


def plan_good_polynomial(field: FieldSpec, block_size: int, num_blocks: int, seed: Optional[int] = None) -> GoodPolynomial:
    """Pick a deterministic construction for num_blocks blocks of block_size points.

    Multiplicative subgroup when block_size | q-1 and the cosets fit; additive
    subgroup when block_size is a power of p; randomized search otherwise.
    """
    q = field.q
    if (q - 1) % block_size == 0 and block_size * num_blocks <= q - 1:
        generator = smallest_element_of_order(field, block_size)
        return from_multiplicative_subgroup(field, generator, num_blocks)
    t, size = 0, 1
    while size < block_size:
        size *= field.p
        t += 1
    if size == block_size and t <= field.l and block_size * num_blocks <= q:
        basis = [field.from_coeffs([0] * i + [1]) for i in range(t)]
        return from_additive_subgroup(field, basis, num_blocks)
    found = search_good_polynomial(field, block_size, num_blocks, seed=seed)
    if found is None:
        raise ParameterError(f"no good polynomial with {num_blocks} blocks of size {block_size} found in F_{q}")
    return found.take(num_blocks)


# ===============================
# orthogonality
# ===============================

def are_orthogonal(p1: Partition, p2: Partition) -> bool:
    """True iff every pair of blocks meets in at most one point."""
    if set(p1.support) != set(p2.support):
        raise ParameterError("partitions have different supports")
    sets2 = [set(b) for b in p2.blocks]
    return all(len(set(x) & y) <= 1 for x in p1.blocks for y in sets2)


def subgroups_yield_orthogonal(orders: Tuple[int, int], group_order: int) -> bool:
    """Coset partitions of subgroups of a cyclic group are orthogonal iff the orders are coprime."""
    h, g = orders
    if h < 1 or g < 1 or group_order % h or group_order % g:
        raise ParameterError(f"orders {orders} must divide {group_order}")
    return gcd(h, g) == 1
