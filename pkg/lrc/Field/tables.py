"""lrc.Field.tables

Dense addition, multiplication, negation and inversion tables for small
fields, so codeword enumeration and Gaussian elimination can run as numpy
gathers instead of per-symbol Python calls. Multiplication and inversion go
through exp/log tables of a primitive element.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from lrc.errors import EnumerationCapError
from lrc.Field.gf import FieldSpec, primitive_element

# largest field order with dense tables (two q x q uint16 arrays)
TABLE_CAP = 1 << 12


@dataclass(frozen=True)
class FieldTables:
    field: FieldSpec
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray

    def combine(self, rows: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
        """sum_m coeffs[:, m] * rows[m] for a batch of coefficient vectors."""
        out = np.zeros((coeffs.shape[0], rows.shape[1]), dtype=np.uint16)
        for m in range(rows.shape[0]):
            scaled = self.mul[coeffs[:, m][:, None], rows[m][None, :]]
            out = self.add[out, scaled]
        return out


@lru_cache(maxsize=16)
def field_tables(field: FieldSpec) -> FieldTables:
    q = field.q
    if q > TABLE_CAP:
        raise EnumerationCapError(f"q={q} exceeds the table cap {TABLE_CAP}")
    values = np.arange(q, dtype=np.int64)
    add = np.zeros((q, q), dtype=np.int64)
    neg = np.zeros(q, dtype=np.int64)
    place = 1
    for _ in range(field.l):
        digit = (values // place) % field.p
        add += ((digit[:, None] + digit[None, :]) % field.p) * place
        neg += ((field.p - digit) % field.p) * place
        place *= field.p

    gamma = primitive_element(field)
    exp = np.zeros(2 * (q - 1), dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    x = field.one
    for i in range(q - 1):
        exp[i] = x.value
        log[x.value] = i
        x = x * gamma
    exp[q - 1:] = exp[:q - 1]
    mul = exp[log[:, None] + log[None, :]]
    mul[0, :] = 0
    mul[:, 0] = 0
    inv = exp[(q - 1 - log) % (q - 1)]
    inv[0] = 0
    return FieldTables(field, add.astype(np.uint16), mul.astype(np.uint16),
                       neg.astype(np.uint16), inv.astype(np.uint16))
