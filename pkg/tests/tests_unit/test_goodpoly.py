"""Unit tests for the good polynomial module.

Tests partitions, the multiplicative, additive and combined constructions,
verification witnesses, counting, the seeded search, the construction
planner and orthogonality of partitions.
"""

from fractions import Fraction

import pytest

from lrc.errors import ParameterError
from lrc.Field.gf import FieldSpec, enumerate_elements
from lrc.Good_Poly.goodpoly import (Partition, are_orthogonal, coset_partition, existence_count,
                                    existence_ratio, from_additive_subgroup, from_combined,
                                    from_multiplicative_subgroup, make_good_polynomial,
                                    plan_good_polynomial, search_good_polynomial,
                                    subgroups_yield_orthogonal, verify_good)
from lrc.Poly.poly import evaluate, from_ints, monomial

F13 = FieldSpec(13)
GF16 = FieldSpec(2, 4)
F49 = FieldSpec(7, 2)


@pytest.fixture
def cube_root_cosets():
    return from_multiplicative_subgroup(F13, F13(3), 3)


# ---------------------------------------------------------------------------
# Partition
# ---------------------------------------------------------------------------

def test_partition_rejects_overlap():
    """A point may appear in only one block."""
    with pytest.raises(ParameterError):
        Partition.from_ints(F13, [[1, 2], [2, 3]])


def test_partition_positions_and_support():
    """Positions follow block concatenation order."""
    part = Partition.from_ints(F13, [[1, 3, 9], [2, 6, 5], [4, 12, 10]])
    assert part.positions_of(1) == [3, 4, 5]
    assert [a.value for a in part.support] == [1, 3, 9, 2, 6, 5, 4, 12, 10]
    assert part.block_of(F13(12)) == 2
    with pytest.raises(ParameterError):
        part.block_of(F13(7))


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def test_multiplicative_cosets_of_order_three(cube_root_cosets):
    """Cosets of {1, 3, 9} in canonical order with g = x^3."""
    assert cube_root_cosets.partition.to_ints() == [[1, 3, 9], [2, 6, 5], [4, 12, 10]]
    assert cube_root_cosets.g == monomial(F13, 3)
    assert [v.value for v in cube_root_cosets.block_values] == [1, 8, 12]


def test_multiplicative_cosets_of_order_four():
    """Cosets of {1, 5, 12, 8} take the values 1, 3, 9 under x^4."""
    good = from_multiplicative_subgroup(F13, F13(5), 3)
    assert good.partition.to_ints() == [[1, 5, 12, 8], [2, 10, 11, 3], [4, 7, 9, 6]]
    assert [v.value for v in good.block_values] == [1, 3, 9]


def test_multiplicative_too_many_blocks():
    """Five cosets of order 3 do not fit in F13*."""
    with pytest.raises(ParameterError):
        from_multiplicative_subgroup(F13, F13(3), 5)


def test_coset_partition_of_subset():
    """Cosets restricted to a union of cosets; a non-union is rejected."""
    support = [F13(v) for v in (1, 3, 9, 2, 6, 5)]
    assert coset_partition(F13, F13(3), support).to_ints() == [[1, 3, 9], [2, 6, 5]]
    with pytest.raises(ParameterError):
        coset_partition(F13, F13(3), [F13(1), F13(3)])


def test_additive_cosets_gf16():
    """Cosets of span{1, a} with g = x^4 + 7x^2 + 6x."""
    good = from_additive_subgroup(GF16, [GF16(1), GF16(2)], 3)
    assert good.partition.to_ints() == [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11]]
    assert good.g.to_ints() == [0, 6, 7, 0, 1]
    assert verify_good(good.g, good.partition).ok


def test_additive_dependent_generators():
    """Generators must be independent over F_p."""
    with pytest.raises(ParameterError):
        from_additive_subgroup(GF16, [GF16(1), GF16(1)], 2)


def test_combined_f49_block_sizes():
    """g = (x^7 - x)^2 on F49: one block of 7 and three of 14."""
    good = from_combined(F49, [F49(1)], 2)
    assert sorted(good.partition.sizes) == [7, 14, 14, 14]
    assert good.partition.sizes[0] == 7
    assert len(good.partition.support) == 49
    for block, value in zip(good.partition.blocks, good.block_values):
        assert all(evaluate(good.g, a) == value for a in block)


def test_combined_requires_roots_of_unity():
    """m must divide p^l - 1."""
    with pytest.raises(ParameterError):
        from_combined(F49, [F49(1)], 5)


def test_take_and_short_last_block(cube_root_cosets):
    """take keeps leading full blocks; the last block can be shortened."""
    two = cube_root_cosets.take(2)
    assert two.partition.to_ints() == [[1, 3, 9], [2, 6, 5]]
    short = cube_root_cosets.with_short_last_block(2)
    assert short.partition.sizes == [3, 3, 2]
    with pytest.raises(ParameterError):
        cube_root_cosets.take(4)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

def test_verify_good_witness():
    """x^2 separates 1 and 3, which share a block of x^3."""
    part = Partition.from_ints(F13, [[1, 3, 9]])
    check = verify_good(monomial(F13, 2), part)
    assert not check.ok
    assert check.witness == (0, F13(1), F13(3))


def test_make_good_polynomial_rejects():
    """A non-constant polynomial cannot be paired with the partition."""
    part = Partition.from_ints(F13, [[1, 3, 9]])
    with pytest.raises(ParameterError, match="block 0"):
        make_good_polynomial(from_ints(F13, [0, 1]), part)


# ---------------------------------------------------------------------------
# Counting and search
# ---------------------------------------------------------------------------

def test_existence_count_gf2048():
    """ceil(C(2048, 6) / 2048^5) = 3, the ratio renders as about 2.82."""
    assert existence_count(2 ** 11, 5) == 3
    assert abs(float(existence_ratio(2 ** 11, 5)) - 2.82) < 0.01


def test_existence_count_f13():
    """C(13, 3) / 13^2 = 286 / 169 rounds up to 2."""
    assert existence_ratio(13, 2) == Fraction(286, 169)
    assert existence_count(13, 2) == 2


def test_existence_count_block_too_large():
    """Blocks larger than the field are impossible."""
    with pytest.raises(ParameterError):
        existence_count(4, 4)


def test_search_is_seeded_and_valid():
    """Same seed, same class; every returned block is a fiber of g."""
    first = search_good_polynomial(F13, 3, 2, budget=2000, seed=7)
    second = search_good_polynomial(F13, 3, 2, budget=2000, seed=7)
    assert first is not None
    assert first.g == second.g
    assert first.partition == second.partition
    assert len(first.partition.blocks) >= 2
    assert all(size == 3 for size in first.partition.sizes)
    assert verify_good(first.g, first.partition).ok


def test_search_budget_exhausted():
    """Five disjoint triples do not fit in F13, so the search gives up."""
    assert search_good_polynomial(F13, 3, 5, budget=128, seed=0) is None


def test_plan_prefers_multiplicative():
    """Block size 4 divides 12, so F13 uses cosets of <5>."""
    planned = plan_good_polynomial(F13, 4, 3)
    assert planned.partition == from_multiplicative_subgroup(F13, F13(5), 3).partition


def test_plan_uses_additive_for_powers_of_p():
    """Block size 4 in GF(16) is the subspace span{1, a}."""
    planned = plan_good_polynomial(GF16, 4, 3)
    assert planned.partition.to_ints() == [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11]]


# ---------------------------------------------------------------------------
# Orthogonality
# ---------------------------------------------------------------------------

def test_f13_coset_partitions_are_orthogonal():
    """Cosets of orders 3 and 4 meet in at most one point."""
    support = enumerate_elements(F13)[1:]
    p1 = coset_partition(F13, F13(3), support)
    p2 = coset_partition(F13, F13(5), support)
    assert are_orthogonal(p1, p2)
    assert not are_orthogonal(p1, p1)


def test_orthogonality_needs_same_support():
    """Partitions of different sets cannot be compared."""
    p1 = Partition.from_ints(F13, [[1, 3, 9]])
    p2 = Partition.from_ints(F13, [[2, 6, 5]])
    with pytest.raises(ParameterError):
        are_orthogonal(p1, p2)


@pytest.mark.parametrize("orders, expected", [((3, 4), True), ((2, 4), False), ((2, 3), True)])
def test_subgroups_yield_orthogonal(orders, expected):
    """Coprime subgroup orders give orthogonal coset partitions."""
    assert subgroups_yield_orthogonal(orders, 12) is expected
