"""lrc.Oracle.oracle

Ground-truth checks for small codes, independent of the construction that
produced them: minimum distance by enumerating every codeword, locality
certificates from generator-matrix ranks, MDS checks of block restrictions,
global erasure decoding and minimal recovering-set search.

Every function takes any code exposing `field`, `n`, `k` and `generator`
(plus `recovering_sets` for the locality checks).

Provides:
- `generator_matrix`, `all_codewords`
- `DistanceResult`, `min_distance_exhaustive`, `min_distance`
- `LocalityCertificate`, `verify_locality`, `PositionLocality`, `locality_profile`
- `MdsResult`, `verify_mds`
- `erasure_decode_global`, `search_recovering_sets`
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from lrc import config
from lrc.errors import EnumerationCapError, ParameterError, UndecodableError
from lrc.Field.gf import FieldElement
from lrc.Field.linalg import dot_array, nullspace_array, rank_array, rref_array, to_array
from lrc.Field.tables import TABLE_CAP, field_tables

logger = logging.getLogger(__name__)

# entries of the precomputed tail span (rows x n)
SPAN_CAP = 1 << 21
# largest n for recovering-set search
SEARCH_N_CAP = 16
DEFAULT_SAMPLES = 20000


def generator_matrix(code) -> List[List[FieldElement]]:
    return [list(row) for row in code.generator]


def _int_generator(code) -> np.ndarray:
    return np.array([[a.value for a in row] for row in code.generator], dtype=np.uint16).reshape(code.k, code.n)


def _span(tables, rows: np.ndarray) -> np.ndarray:
    """All combinations of `rows`, the first row most significant."""
    n = rows.shape[1]
    span = np.zeros((1, n), dtype=np.uint16)
    for row in rows:
        scaled = tables.mul[:, row]
        span = tables.add[span[:, None, :], scaled[None, :, :]].reshape(-1, n)
    return span


def _digits(index: int, q: int, width: int) -> List[int]:
    out = [0] * width
    for i in range(width - 1, -1, -1):
        index, out[i] = divmod(index, q)
    return out


def all_codewords(code, limit: Optional[int] = None) -> np.ndarray:
    """q^k x n array of canonical integers, row i = encoding of the base-q digits of i."""
    limit = config.exhaustive_cap() if limit is None else limit
    q, k = code.field.q, code.k
    if q ** k > limit:
        raise EnumerationCapError(f"q^k = {q}^{k} exceeds the enumeration cap {limit}")
    return _span(field_tables(code.field), _int_generator(code))


# ===============================
# minimum distance
# ===============================

@dataclass(frozen=True)
class DistanceResult:
    """Minimum weight found and the message reaching it.

    When `exhaustive` is False the distance is an upper bound from sampling.
    """

    distance: int
    exhaustive: bool
    witness: Optional[Tuple[int, ...]]
    checked: int

    def to_json(self) -> dict:
        return {"distance": self.distance, "exhaustive": self.exhaustive,
                "witness": list(self.witness) if self.witness is not None else None,
                "checked": self.checked}


def _scan(tables, head: np.ndarray, span: np.ndarray, start: int, stop: int, q: int) -> Tuple[int, int]:
    n = span.shape[1]
    best = (n + 1, -1)
    for idx in range(start, stop):
        v = np.zeros(n, dtype=np.uint16)
        for c, row in zip(_digits(idx, q, head.shape[0]), head):
            if c:
                v = tables.add[v, tables.mul[c, row]]
        weights = np.count_nonzero(tables.add[span, v[None, :]], axis=1)
        if idx == 0:
            weights[0] = n + 1
        j = int(np.argmin(weights))
        if weights[j] < best[0]:
            best = (int(weights[j]), idx * span.shape[0] + j)
    return best


def min_distance_exhaustive(code, cap: Optional[int] = None, workers: Optional[int] = None) -> DistanceResult:
    """Exact minimum distance over all q^k - 1 nonzero codewords.

    The last t generator rows are expanded once into a table of q^t partial
    codewords; every combination of the leading rows is added to the whole
    table in one gather. Ties resolve to the smallest message index, so the
    witness does not depend on worker scheduling.
    """
    cap = config.exhaustive_cap() if cap is None else cap
    workers = config.workers() if workers is None else workers
    q, k, n = code.field.q, code.k, code.n
    total = q ** k
    if total > cap:
        raise EnumerationCapError(f"q^k = {q}^{k} exceeds the enumeration cap {cap}")
    if k == 0:
        return DistanceResult(n + 1, True, None, 0)
    tables = field_tables(code.field)
    rows = _int_generator(code)
    t = 1
    while t < k and q ** (t + 1) * n <= SPAN_CAP:
        t += 1
    head, span = rows[: k - t], _span(tables, rows[k - t:])
    combos = q ** (k - t)
    step = max(1, -(-combos // (workers * 4)))
    ranges = [(s, min(s + step, combos)) for s in range(0, combos, step)]
    logger.debug("enumerating %d codewords: %d head combos x %d tail rows", total, combos, span.shape[0])
    with ThreadPoolExecutor(max_workers=workers) as executor:
        found = list(executor.map(lambda r: _scan(tables, head, span, r[0], r[1], q), ranges))
    weight, index = min(found)
    witness = tuple(_digits(index, q, k))
    return DistanceResult(weight, True, witness, total - 1)


def _sampled_distance(code, samples: int, seed: int) -> DistanceResult:
    q, k, n = code.field.q, code.k, code.n
    best, witness = n + 1, None
    if q <= TABLE_CAP:
        tables = field_tables(code.field)
        rng = np.random.default_rng(seed)
        messages = rng.integers(0, q, size=(samples, k), dtype=np.int64).astype(np.uint16)
        words = tables.combine(_int_generator(code), messages)
        weights = np.count_nonzero(words, axis=1)
        weights[~messages.any(axis=1)] = n + 1
        j = int(np.argmin(weights))
        best, witness = int(weights[j]), tuple(int(v) for v in messages[j])
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            message = [rng.randrange(q) for _ in range(k)]
            if not any(message):
                continue
            weight = sum(1 for s in code.encode(message) if not s.is_zero())
            if weight < best:
                best, witness = weight, tuple(message)
    return DistanceResult(best, False, witness, samples)


def min_distance(code, cap: Optional[int] = None, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> DistanceResult:
    """Exhaustive when q^k fits under the cap, otherwise a sampled upper bound."""
    cap = config.exhaustive_cap() if cap is None else cap
    if code.field.q ** code.k <= cap and code.field.q <= TABLE_CAP:
        return min_distance_exhaustive(code, cap)
    logger.info("q^k above cap %d; sampling %d messages for an upper bound", cap, samples)
    return _sampled_distance(code, samples, seed)


# ===============================
# locality and MDS certificates
# ===============================

def _generator_array(code) -> np.ndarray:
    return to_array(code.generator, code.field, code.n)


def _columns(gen: np.ndarray, positions: Sequence[int]) -> np.ndarray:
    """Columns of G at `positions`, one row per position."""
    return gen[:, list(positions)].T


@dataclass(frozen=True)
class LocalityCertificate:
    """Whether symbol `position` is a function of the symbols in `recovering_set`.

    On failure `witness` is a message whose codeword vanishes on the set but
    not at the position, so two codewords agree on the set and differ there.
    """

    position: int
    recovering_set: Tuple[int, ...]
    certified: bool
    witness: Optional[Tuple[int, ...]] = None

    def to_json(self) -> dict:
        return {"position": self.position, "recovering_set": list(self.recovering_set),
                "certified": self.certified,
                "witness": list(self.witness) if self.witness is not None else None}


def _certify(code, position: int, subset: Sequence[int], gen: Optional[np.ndarray] = None) -> LocalityCertificate:
    field = code.field
    gen = _generator_array(code) if gen is None else gen
    subset = tuple(sorted(subset))
    rows = _columns(gen, subset)
    target = gen[:, position]
    if rank_array(rows, field) == rank_array(np.vstack([rows, target[None, :]]), field):
        return LocalityCertificate(position, subset, True)
    for a in nullspace_array(rows, field):
        if dot_array(a, target, field):
            return LocalityCertificate(position, subset, False, tuple(int(x) for x in a))
    raise AssertionError("rank test and null space disagree")


def verify_locality(code, positions: Optional[Sequence[int]] = None) -> List[LocalityCertificate]:
    """Certify every declared recovering set of every position."""
    positions = range(code.n) if positions is None else positions
    gen = _generator_array(code)
    out = []
    for i in positions:
        for subset in code.recovering_sets(i):
            cert = _certify(code, i, subset, gen)
            if not cert.certified:
                logger.warning("position %d is not determined by %s", i, list(cert.recovering_set))
            out.append(cert)
    return out


@dataclass(frozen=True)
class PositionLocality:
    """Certified locality of one position: the size of its smallest certified recovering set.

    `locality` is None when no declared recovering set is certified.
    """

    position: int
    certificates: Tuple[LocalityCertificate, ...]

    @property
    def locality(self) -> Optional[int]:
        sizes = [len(c.recovering_set) for c in self.certificates if c.certified]
        return min(sizes) if sizes else None

    @property
    def certified(self) -> bool:
        return all(c.certified for c in self.certificates)

    def to_json(self) -> dict:
        return {"position": self.position, "locality": self.locality, "certified": self.certified,
                "recovering_sets": [list(c.recovering_set) for c in self.certificates],
                "witnesses": [list(c.witness) for c in self.certificates if c.witness is not None]}


def locality_profile(code) -> List[PositionLocality]:
    """verify_locality grouped by position, in position order."""
    by_position = {}
    for cert in verify_locality(code):
        by_position.setdefault(cert.position, []).append(cert)
    return [PositionLocality(i, tuple(by_position.get(i, ()))) for i in range(code.n)]


@dataclass(frozen=True)
class MdsResult:
    ok: bool
    witness: Optional[Tuple[int, ...]] = None


def verify_mds(code, positions: Sequence[int], k_i: int) -> MdsResult:
    """The restriction to `positions` has dimension k_i and any k_i of them are independent."""
    field = code.field
    rows = _columns(_generator_array(code), positions)
    if rank_array(rows, field) != k_i:
        return MdsResult(False, tuple(positions))
    for picked in combinations(range(len(positions)), k_i):
        if rank_array(rows[list(picked)], field) != k_i:
            return MdsResult(False, tuple(positions[t] for t in picked))
    return MdsResult(True)


# ===============================
# decoding and recovering-set search
# ===============================

def erasure_decode_global(code, symbols: Sequence[Optional[FieldElement]]) -> List[FieldElement]:
    """The unique message consistent with the surviving symbols (None marks an erasure).

    Raises UndecodableError when the survivors do not pin the message down;
    its witness is a nonzero message whose codeword vanishes on them.
    """
    field = code.field
    if len(symbols) != code.n:
        raise ParameterError(f"codeword has length {len(symbols)}, expected {code.n}")
    survivors = [p for p, s in enumerate(symbols) if s is not None]
    rows = _columns(_generator_array(code), survivors)
    if rank_array(rows, field) < code.k:
        kernel = nullspace_array(rows, field)
        witness = tuple(int(v) for v in kernel[0]) if len(kernel) else None
        raise UndecodableError(f"{len(survivors)} survivors leave the message ambiguous", witness=witness)
    values = np.array([field.element(symbols[p]).value for p in survivors], dtype=np.int64)
    reduced, pivots = rref_array(np.column_stack([rows, values]), field)
    if code.k in pivots:
        raise UndecodableError("surviving symbols are not consistent with any codeword")
    message = np.zeros(code.k, dtype=np.int64)
    message[pivots] = reduced[:, code.k]
    return [field.element(int(v)) for v in message]


def search_recovering_sets(code, position: int, max_size: Optional[int] = None) -> List[frozenset]:
    """All inclusion-minimal sets of other positions that determine `position`."""
    if code.n > SEARCH_N_CAP:
        raise EnumerationCapError(f"n={code.n} exceeds the search cap {SEARCH_N_CAP}")
    if not 0 <= position < code.n:
        raise ParameterError(f"invalid position {position}")
    others = [p for p in range(code.n) if p != position]
    max_size = code.k if max_size is None else max_size
    gen = _generator_array(code)
    found: List[frozenset] = []
    for size in range(0, max_size + 1):
        for subset in combinations(others, size):
            candidate = frozenset(subset)
            if any(f <= candidate for f in found):
                continue
            if _certify(code, position, subset, gen).certified:
                found.append(candidate)
    return found
