"""lrc.Oracle.checks

Registry of verification checks run against a built code. Each entry is a
tuple `(check_key, function)` where the function accepts the code and the
enumeration cap and returns `(result, latency_ms)`.
"""

import logging
import time
from typing import Any, Optional, Tuple

from lrc.Bounds.bounds import kamath_bound, residue_code_distance, singleton_like
from lrc.Field.linalg import rank
from lrc.Oracle.oracle import locality_profile, min_distance, verify_mds

logger = logging.getLogger(__name__)

MDS_CONSTRUCTIONS = ("local_mds", "crt")


def _elapsed_ms(start_ns: int) -> int:
    return (time.time_ns() - start_ns) // 1_000_000


def declared_locality(code) -> int:
    """Smallest number of symbols any declared repair reads."""
    if code.construction == "product":
        return min(declared_locality(c) for c in code.components)
    if hasattr(code, "localities"):
        return min(code.localities)
    return max(code.needed)


def upper_bound(code) -> Optional[int]:
    """The distance an optimal code with the same parameters would reach.

    CRT codes are held to the distance of their weakest message-carrying block.
    """
    n, k = code.n, code.k
    if code.construction == "local_mds":
        return kamath_bound(n, k, code.r, code.rho)
    if code.construction == "crt":
        return residue_code_distance([len(b) for b in code.blocks], code.message_dims)
    r = min(declared_locality(code), k)
    if r < 1:
        return None
    return singleton_like(n, k, r)


def check_distance(code, cap: int) -> Tuple[Any, int]:
    start_ns = time.time_ns()
    try:
        result = min_distance(code, cap).to_json()
    except Exception as exc:
        logger.warning("distance check failed: %s", exc)
        result = None
    return result, _elapsed_ms(start_ns)


def check_locality(code, cap: int) -> Tuple[Any, int]:
    """One entry per position: certified locality, declared recovering sets and any witnesses."""
    start_ns = time.time_ns()
    profile = [entry.to_json() for entry in locality_profile(code)]
    return profile, _elapsed_ms(start_ns)


def check_mds_blocks(code, cap: int) -> Tuple[Any, int]:
    """Every block restriction is MDS of its local dimension (local MDS and CRT codes only)."""
    start_ns = time.time_ns()
    if code.construction not in MDS_CONSTRUCTIONS:
        return None, _elapsed_ms(start_ns)
    out = []
    for block, needed in zip(code.blocks, getattr(code, "message_dims", code.needed)):
        result = verify_mds(code, block, needed)
        out.append({"block": list(block), "ok": result.ok,
                    "witness": list(result.witness) if result.witness else None})
    return out, _elapsed_ms(start_ns)


def check_rank(code, cap: int) -> Tuple[Any, int]:
    start_ns = time.time_ns()
    return rank(code.generator, code.field) == code.k, _elapsed_ms(start_ns)


# List of (check_key, check_function) consumed by the runner
VERIFY_REGISTRY = [
    ("distance", check_distance),
    ("locality", check_locality),
    ("mds_blocks", check_mds_blocks),
    ("rank", check_rank),
]
