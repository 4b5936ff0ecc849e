"""lrc.Catalog.catalog

Named small codes with known parameters, used by `gen --example NAME`, the
docs and the end-to-end tests. Each registry entry is `(name, builder)`;
the builder takes no arguments and returns a freshly built code.
"""

from typing import Callable, List

from lrc.Core.lrc_core import build, build_reed_solomon, systematic_build
from lrc.errors import ParameterError
from lrc.Field.gf import FieldSpec
from lrc.General.general import build_arbitrary_linear, crt_build, local_mds_build
from lrc.Good_Poly.goodpoly import (coset_partition, from_additive_subgroup, from_combined,
                                    from_multiplicative_subgroup)
from lrc.Multiset.multiset import build_lrc_multi, product_build

F13 = FieldSpec(13)
GF16 = FieldSpec(2, 4)
F49 = FieldSpec(7, 2)


def lrc_9_4_2():
    """(9,4,2) over F13 on the cosets of {1,3,9}, g = x^3; d = 5."""
    return build(F13, from_multiplicative_subgroup(F13, F13(3), 3), 4)


def systematic_9_4_2():
    """Systematic form of lrc_9_4_2; message symbols sit at positions 0,1,3,4."""
    return systematic_build(lrc_9_4_2())


def lrc_12_6_3():
    """(12,6,3) over F13 on the cosets of {1,5,12,8}, g = x^4; d = 6."""
    return build(F13, from_multiplicative_subgroup(F13, F13(5), 3), 6)


def lrc_12_6_3_gf16():
    """(12,6,3) over GF(16) on three cosets of the additive subgroup {0,1,2,3}; d = 6."""
    good = from_additive_subgroup(GF16, [GF16(1), GF16(2)], 3)
    return build(GF16, good, 6)


def lrc_28_26_13_f49():
    """(28,26,13) over F49 from g = (x^7 - x)^2, two blocks of 14 points; d = 2."""
    good = from_combined(F49, [F49(1)], 2).take(2)
    return build(F49, good, 26)


def _f13_pair():
    support = [F13(v) for v in range(1, 13)]
    return coset_partition(F13, F13(3), support), coset_partition(F13, F13(5), support)


def multi_12_4_2_3():
    """Two recovering sets of sizes 2 and 3 per symbol over F13*, k = 4."""
    return build_lrc_multi(F13, list(_f13_pair()), 4)


def multi_12_6_2_3():
    """As multi_12_4_2_3 with k = 6."""
    return build_lrc_multi(F13, list(_f13_pair()), 6)


def multi_16_8_gf16():
    """Cosets of span{1, a} and span{a^2, a^3} in GF(16): two recovering sets of size 3, k = 8."""
    p1 = from_additive_subgroup(GF16, [GF16(1), GF16(2)], 4).partition
    p2 = from_additive_subgroup(GF16, [GF16(4), GF16(8)], 4).partition
    return build_lrc_multi(GF16, [p1, p2], 8)


def product_9_4_rs():
    """Product of two (3,2) Reed-Solomon codes over F13; d = 4."""
    rs = build_reed_solomon(F13, [F13(1), F13(2), F13(3)], 2)
    return product_build(rs, rs)


def product_81_16():
    """Product of lrc_9_4_2 with itself: (81,16) with two recovering sets of size 2."""
    code = lrc_9_4_2()
    return product_build(code, code)


def arbitrary_11_5_3():
    """(11,5,3) over F13: cosets of {1,5,12,8} with the last block cut to 3 points."""
    good = from_multiplicative_subgroup(F13, F13(5), 3).with_short_last_block(3)
    return build_arbitrary_linear(F13, good, 5)


def crt_8_4():
    """CRT code over F13 with blocks {1,3,9,2} and {6,5,4,12}, each a (4,2) MDS code."""
    blocks = [([F13(v) for v in (1, 3, 9, 2)], 2), ([F13(v) for v in (6, 5, 4, 12)], 2)]
    return crt_build(F13, blocks, 4)


def local_mds_12_4_2_3():
    """(12,4) over F13 whose blocks of 4 are (4,2) MDS codes (r = 2, rho = 3); d = 7."""
    return local_mds_build(F13, from_multiplicative_subgroup(F13, F13(5), 3), 4, 3)


def rs_9_4():
    """(9,4) Reed-Solomon code over F13 on the points 1..9; d = 6."""
    return build_reed_solomon(F13, [F13(v) for v in range(1, 10)], 4)


# List of (example_name, builder) consumed by the CLI and the tests
EXAMPLE_REGISTRY = [
    ("lrc_9_4_2", lrc_9_4_2),
    ("systematic_9_4_2", systematic_9_4_2),
    ("lrc_12_6_3", lrc_12_6_3),
    ("lrc_12_6_3_gf16", lrc_12_6_3_gf16),
    ("lrc_28_26_13_f49", lrc_28_26_13_f49),
    ("multi_12_4_2_3", multi_12_4_2_3),
    ("multi_12_6_2_3", multi_12_6_2_3),
    ("multi_16_8_gf16", multi_16_8_gf16),
    ("product_9_4_rs", product_9_4_rs),
    ("product_81_16", product_81_16),
    ("arbitrary_11_5_3", arbitrary_11_5_3),
    ("crt_8_4", crt_8_4),
    ("local_mds_12_4_2_3", local_mds_12_4_2_3),
    ("rs_9_4", rs_9_4),
]


def example_names() -> List[str]:
    return [name for name, _ in EXAMPLE_REGISTRY]


def get_builder(name: str) -> Callable:
    for key, fn in EXAMPLE_REGISTRY:
        if key == name:
            return fn
    raise ParameterError(f"unknown example {name!r}; choose one of {', '.join(example_names())}")


def build_example(name: str):
    return get_builder(name)()
