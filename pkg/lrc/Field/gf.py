"""lrc.Field.gf

Exact arithmetic in prime fields F_p and extension fields F_{p^l}.

Elements are stored by their canonical integer sum(c_i * p^i) where c_i are
the polynomial-basis coordinates (low-to-high) modulo a monic irreducible
polynomial of degree l. No logarithm tables are built: multiplication is
schoolbook polynomial multiplication followed by reduction.

Provides:
- `FieldSpec(p, l=1, modulus=())` validated field description.
- `FieldElement` immutable element with the usual operators.
- `add`, `mul`, `inv`, `power`, `multiplicative_order`, `enumerate_elements`.
- helpers used by the constructions: `prime_factors`, `primitive_element`,
  `smallest_element_of_order`, `subfield_elements`, `field_of_order`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product
from typing import Iterable, List, Sequence, Tuple, Union

from lrc import config
from lrc.errors import EnumerationCapError, FieldMismatchError, ParameterError

logger = logging.getLogger(__name__)

# Conway polynomials, coefficients low-to-high (monic, degree l).
# Pairs missing here fall back to the least primitive polynomial.
CONWAY_MODULI = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (13, 2): (2, 12, 1),
}

IntOrElement = Union["FieldElement", int]


# ===============================
# integer / coefficient-list helpers
# ===============================

def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> List[int]:
    """Distinct prime factors of n in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _trim(c: List[int]) -> List[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    """Remainder of a modulo m over F_p (m need not be monic)."""
    r = _trim(list(a))
    dm = len(m) - 1
    lead_inv = pow(m[-1], p - 2, p)
    while len(r) - 1 >= dm and r:
        factor = (r[-1] * lead_inv) % p
        shift = len(r) - 1 - dm
        for i, mi in enumerate(m):
            r[shift + i] = (r[shift + i] - factor * mi) % p
        _trim(r)
    return r


@lru_cache(maxsize=None)
def is_irreducible(p: int, modulus: Tuple[int, ...]) -> bool:
    """Trial division by every monic polynomial of degree <= l/2."""
    degree = len(modulus) - 1
    if degree < 1 or modulus[-1] % p == 0:
        return False
    if degree == 1:
        return True
    if modulus[0] % p == 0:
        return False
    for d in range(1, degree // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _pmod(modulus, list(low) + [1], p):
                return False
    return True


def _xpow_mod(e: int, m: Sequence[int], p: int) -> List[int]:
    result, base = [1], [0, 1]
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


@lru_cache(maxsize=None)
def default_modulus(p: int, l: int) -> Tuple[int, ...]:
    """Conway polynomial when tabulated, else the least primitive polynomial."""
    if l == 1:
        return (0, 1)
    if (p, l) in CONWAY_MODULI:
        return CONWAY_MODULI[(p, l)]
    q = p ** l
    factors = prime_factors(q - 1)
    for low_int in range(1, p ** l):
        low = [(low_int // p ** i) % p for i in range(l)]
        if low[0] == 0:
            continue
        m = low + [1]
        if _xpow_mod(q - 1, m, p) != [1]:
            continue
        if any(_xpow_mod((q - 1) // f, m, p) == [1] for f in factors):
            continue
        logger.debug("default modulus for GF(%d^%d): %s", p, l, m)
        return tuple(m)
    raise ParameterError(f"no primitive polynomial of degree {l} over F_{p}")


# ===============================
# FieldSpec
# ===============================

@dataclass(frozen=True)
class FieldSpec:
    """GF(p^l) with a validated monic irreducible modulus (low-to-high)."""

    p: int
    l: int = 1
    modulus: Tuple[int, ...] = dc_field(default=())

    def __post_init__(self):
        if not is_prime(self.p):
            raise ParameterError(f"p={self.p} is not prime")
        if self.l < 1:
            raise ParameterError(f"extension degree l={self.l} must be >= 1")
        if self.l == 1:
            object.__setattr__(self, "modulus", (0, 1))
            return
        modulus = tuple(int(c) % self.p for c in self.modulus) if self.modulus else default_modulus(self.p, self.l)
        if len(modulus) != self.l + 1 or modulus[-1] != 1:
            raise ParameterError(f"modulus must be monic of degree {self.l}")
        if not is_irreducible(self.p, modulus):
            raise ParameterError(f"modulus {list(modulus)} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", modulus)

    @property
    def q(self) -> int:
        return self.p ** self.l

    def __repr__(self) -> str:
        if self.l == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.l})"

    # ----- constructors -----
    def element(self, value: IntOrElement) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} is not in {self!r}")
            return value
        value = int(value)
        if not 0 <= value < self.q:
            raise ParameterError(f"{value} is not a canonical element of {self!r}")
        return FieldElement(self, value)

    def __call__(self, value: IntOrElement) -> "FieldElement":
        return self.element(value)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        if len(coeffs) > self.l:
            raise ParameterError(f"{len(coeffs)} coordinates for a degree-{self.l} field")
        return FieldElement(self, self._from_digits([int(c) % self.p for c in coeffs]))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def to_json(self) -> dict:
        return {"p": self.p, "l": self.l, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FieldSpec":
        l = int(data.get("l", 1))
        modulus = tuple(data.get("modulus") or ()) if l > 1 else ()
        return cls(int(data["p"]), l, modulus)

    # ----- canonical-integer arithmetic -----
    def _digits(self, v: int) -> List[int]:
        p = self.p
        out = []
        for _ in range(self.l):
            v, d = divmod(v, p)
            out.append(d)
        return out

    def _from_digits(self, digits: Iterable[int]) -> int:
        v = 0
        for d in reversed(list(digits)):
            v = v * self.p + d
        return v

    def _add(self, a: int, b: int) -> int:
        if self.l == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        return self._from_digits((x + y) % p for x, y in zip(self._digits(a), self._digits(b)))

    def _neg(self, a: int) -> int:
        if self.l == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        return self._from_digits((-x) % p for x in self._digits(a))

    def _mul(self, a: int, b: int) -> int:
        if self.l == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self.p == 2:
            return self._mul_binary(a, b)
        prod = _pmul(_trim(self._digits(a)), _trim(self._digits(b)), self.p)
        return self._from_digits(_pmod(prod, self.modulus, self.p))

    def _mul_binary(self, a: int, b: int) -> int:
        # carry-less product, then reduce by the modulus bit pattern
        r = 0
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            b >>= 1
        mod = self._from_digits(self.modulus)
        top = self.l
        while r.bit_length() - 1 >= top:
            r ^= mod << (r.bit_length() - 1 - top)
        return r

    def _pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul(result, a)
            a = self._mul(a, a)
            e >>= 1
        return result

    def _inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        if self.l == 1:
            return pow(a, self.p - 2, self.p)
        return self._pow(a, self.q - 2)


# ===============================
# FieldElement
# ===============================

class FieldElement:
    """Immutable element of a FieldSpec, identified by its canonical integer."""

    __slots__ = ("_field", "_value")

    def __init__(self, field: FieldSpec, value: int):
        object.__setattr__(self, "_field", field)
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def field(self) -> FieldSpec:
        return self._field

    @property
    def value(self) -> int:
        return self._value

    @property
    def coeffs(self) -> List[int]:
        return self._field._digits(self._value)

    def is_zero(self) -> bool:
        return self._value == 0

    def _coerce(self, other: IntOrElement) -> int:
        if isinstance(other, FieldElement):
            if other._field is not self._field and other._field != self._field:
                raise FieldMismatchError(f"{self._field!r} vs {other._field!r}")
            return other._value
        if isinstance(other, int):
            if self._field.l == 1:
                return other % self._field.p
            return self._field.element(other)._value
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: IntOrElement) -> "FieldElement":
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self._field, self._field._add(self._value, b))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self._field, self._field._neg(self._value))

    def __sub__(self, other: IntOrElement) -> "FieldElement":
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        f = self._field
        return FieldElement(f, f._add(self._value, f._neg(b)))

    def __rsub__(self, other: IntOrElement) -> "FieldElement":
        return (-self) + other

    def __mul__(self, other: IntOrElement) -> "FieldElement":
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self._field, self._field._mul(self._value, b))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return FieldElement(self._field, self._field._inv(self._value))

    def __truediv__(self, other: IntOrElement) -> "FieldElement":
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        f = self._field
        return FieldElement(f, f._mul(self._value, f._inv(b)))

    def __rtruediv__(self, other: IntOrElement) -> "FieldElement":
        return self._field.element(other) / self

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self._field, self._field._pow(self._value, e))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self._value == other._value and (self._field is other._field or self._field == other._field)

    def __hash__(self) -> int:
        return hash((self._field.p, self._field.l, self._value))

    def __lt__(self, other: "FieldElement") -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other._field != self._field:
            raise FieldMismatchError(f"cannot order {self!r} against {other!r}")
        return self._value < other._value

    def __bool__(self) -> bool:
        return self._value != 0

    def __int__(self) -> int:
        return self._value

    def __index__(self) -> int:
        return self._value

    def __repr__(self) -> str:
        return f"{self._field!r}({self._value})"

    def __str__(self) -> str:
        return str(self._value)


# ===============================
# module-level operations
# ===============================

def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises ZeroDivisionError on zero."""
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    """a^e by square-and-multiply. 0^0 = 1 so constant terms evaluate uniformly at 0."""
    if e < 0:
        raise ParameterError("exponent must be nonnegative")
    return a ** e


def multiplicative_order(a: FieldElement) -> int:
    if a.is_zero():
        raise ParameterError("zero has no multiplicative order")
    e = a.field.q - 1
    for f in prime_factors(e):
        while e % f == 0 and (a ** (e // f)).value == 1:
            e //= f
    return e


def enumerate_elements(spec: FieldSpec) -> List[FieldElement]:
    """All q elements in canonical-integer order."""
    cap = config.field_cap()
    if spec.q > cap:
        raise EnumerationCapError(f"q={spec.q} exceeds field cap {cap}")
    return [FieldElement(spec, v) for v in range(spec.q)]


def primitive_element(spec: FieldSpec) -> FieldElement:
    """Smallest canonical generator of F_q^*."""
    return smallest_element_of_order(spec, spec.q - 1)


def smallest_element_of_order(spec: FieldSpec, order: int) -> FieldElement:
    if order < 1 or (spec.q - 1) % order:
        raise ParameterError(f"no element of order {order} in {spec!r}")
    for v in range(1, spec.q):
        a = FieldElement(spec, v)
        if (a ** order).value == 1 and multiplicative_order(a) == order:
            return a
    raise ParameterError(f"no element of order {order} in {spec!r}")


def subfield_elements(spec: FieldSpec, l: int) -> List[FieldElement]:
    """Elements of the subfield F_{p^l}, i.e. the roots of x^{p^l} - x."""
    if spec.l % l:
        raise ParameterError(f"F_{spec.p}^{l} is not a subfield of {spec!r}")
    size = spec.p ** l
    return [a for a in enumerate_elements(spec) if a ** size == a]


def field_of_order(q: int) -> FieldSpec:
    """GF(q) with the default modulus; q must be a prime power."""
    if q < 2:
        raise ParameterError(f"q={q} is not a prime power")
    p = prime_factors(q)[0]
    l, rest = 0, q
    while rest % p == 0:
        rest //= p
        l += 1
    if rest != 1:
        raise ParameterError(f"q={q} is not a prime power")
    return FieldSpec(p, l)
