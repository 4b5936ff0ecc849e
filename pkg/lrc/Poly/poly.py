"""lrc.Poly.poly

Univariate polynomials over a FieldSpec.

Coefficients are stored low-to-high with no trailing zeros; the zero
polynomial has an empty coefficient tuple and degree `NEG_INF`.

Provides:
- `Polynomial` value type (supports +, -, *, divmod(), %, //, and call).
- `evaluate`, `interpolate`, `annihilator`, `poly_divmod`, `gcd`,
  `crt_combine`, `compose`, `monomial`, `from_ints`, `echelon_basis`.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, List, Sequence, Tuple, Union

from lrc.errors import FieldMismatchError, ParameterError
from lrc.Field.gf import FieldElement, FieldSpec
from lrc.Field.linalg import rref

NEG_INF = float("-inf")

Scalar = Union[FieldElement, int]


class Polynomial:
    """Immutable polynomial; `coeffs[i]` multiplies x^i."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable[Scalar] = ()):
        cs = [field.element(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs: Tuple[FieldElement, ...] = tuple(cs)

    # ----- structure -----
    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ParameterError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def monic(self) -> "Polynomial":
        return self.scale(self.leading.inverse())

    def scale(self, c: Scalar) -> "Polynomial":
        c = self.field.element(c)
        return Polynomial(self.field, (a * c for a in self.coeffs))

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Polynomial(self.field, [self.field.zero] * k + list(self.coeffs))

    def to_ints(self) -> List[int]:
        return [c.value for c in self.coeffs]

    def to_text(self) -> str:
        return " ".join(str(c.value) for c in self.coeffs)

    # ----- arithmetic -----
    def _check(self, other: "Polynomial") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial(self.field, [other])

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        zero = self.field.zero
        return Polynomial(self.field, (a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=zero)))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, (-a for a in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        result = Polynomial(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        return poly_divmod(self, other)

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return poly_divmod(self, other)[1]

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return poly_divmod(self, other)[0]

    def __call__(self, x: Scalar) -> FieldElement:
        return evaluate(self, self.field.element(x))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(c.value for c in self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c.value == 1:
                terms.append(mono)
            else:
                terms.append(f"{c.value}{'*' if mono else ''}{mono}")
        return "Polynomial(" + " + ".join(terms) + ")"


# ===============================
# constructors
# ===============================

def from_ints(field: FieldSpec, ints: Sequence[int]) -> Polynomial:
    """Prime fields reduce the integers mod p; extension fields take canonical values."""
    if field.l == 1:
        ints = [int(c) % field.p for c in ints]
    return Polynomial(field, ints)


def monomial(field: FieldSpec, degree: int, coeff: Scalar = 1) -> Polynomial:
    return Polynomial(field, [0] * degree + [coeff])


def constant(field: FieldSpec, c: Scalar) -> Polynomial:
    return Polynomial(field, [c])


# ===============================
# operations
# ===============================

def evaluate(f: Polynomial, x: FieldElement) -> FieldElement:
    """Horner evaluation."""
    if x.field != f.field:
        raise FieldMismatchError(f"{x!r} is not in {f.field!r}")
    acc = f.field.zero
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def annihilator(field: FieldSpec, points: Iterable[FieldElement]) -> Polynomial:
    """Monic product of (x - a) over the points."""
    result = Polynomial(field, [1])
    for a in points:
        result = result * Polynomial(field, [-a, 1])
    return result


def _divide_linear(f: Polynomial, a: FieldElement) -> Polynomial:
    # synthetic division of f by (x - a), assuming f(a) = 0
    n = len(f.coeffs) - 1
    out = [f.field.zero] * n
    carry = f.field.zero
    for i in range(n, 0, -1):
        carry = f.coeffs[i] + carry * a
        out[i - 1] = carry
    return Polynomial(f.field, out)


def interpolate(field: FieldSpec, points: Sequence[Tuple[FieldElement, FieldElement]]) -> Polynomial:
    """Lagrange interpolation: the unique polynomial of degree < len(points)."""
    if not points:
        raise ParameterError("interpolation needs at least one point")
    xs = [field.element(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ParameterError("duplicate abscissa in interpolation points")
    full = annihilator(field, xs)
    result = Polynomial(field)
    for i, (xi, (_, yi)) in enumerate(zip(xs, points)):
        yi = field.element(yi)
        if yi.is_zero():
            continue
        basis = _divide_linear(full, xi)
        denom = field.one
        for j, xj in enumerate(xs):
            if j != i:
                denom = denom * (xi - xj)
        result = result + basis.scale(yi / denom)
    return result


def poly_divmod(f: Polynomial, g: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """(quotient, remainder) with f = q*g + r and deg r < deg g."""
    if g.field != f.field:
        raise FieldMismatchError(f"{f.field!r} vs {g.field!r}")
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    field = f.field
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lead_inv = g.leading.inverse()
    quot = [field.zero] * max(len(rem) - dg, 0)
    for shift in range(len(rem) - 1 - dg, -1, -1):
        factor = rem[shift + dg] * lead_inv
        if factor.is_zero():
            continue
        quot[shift] = factor
        for i, gc in enumerate(g.coeffs):
            rem[shift + i] = rem[shift + i] - factor * gc
    return Polynomial(field, quot), Polynomial(field, rem[:dg])


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    if f.is_zero() and g.is_zero():
        raise ParameterError("gcd of two zero polynomials")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def ext_gcd(f: Polynomial, g: Polynomial) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """(d, s, t) with s*f + t*g = d and d monic."""
    field = f.field
    r0, r1 = f, g
    s0, s1 = Polynomial(field, [1]), Polynomial(field)
    t0, t1 = Polynomial(field), Polynomial(field, [1])
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lead = r0.leading.inverse()
    return r0.scale(lead), s0.scale(lead), t0.scale(lead)


def crt_combine(residues: Sequence[Polynomial], moduli: Sequence[Polynomial]) -> Polynomial:
    """The unique f of degree < sum(deg G_i) with f = M_i mod G_i."""
    if len(residues) != len(moduli) or not moduli:
        raise ParameterError("need one residue per modulus")
    field = moduli[0].field
    for i, (m, g) in enumerate(zip(residues, moduli)):
        if g.is_zero() or g.degree < 1:
            raise ParameterError(f"modulus {i} must have positive degree")
        if m.degree >= g.degree:
            raise ParameterError(f"residue {i} has degree {m.degree} >= {g.degree}")
    for i in range(len(moduli)):
        for j in range(i + 1, len(moduli)):
            if gcd(moduli[i], moduli[j]).degree != 0:
                raise ParameterError(f"moduli {i} and {j} are not coprime")
    total = Polynomial(field, [1])
    for g in moduli:
        total = total * g
    result = Polynomial(field)
    for m, g in zip(residues, moduli):
        if m.is_zero():
            continue
        others = total // g
        _, s, _ = ext_gcd(others % g, g)
        result = result + others * ((m * s) % g)
    return result % total


def compose(f: Polynomial, g: Polynomial) -> Polynomial:
    """f(g(x)) by Horner's rule over polynomials."""
    acc = Polynomial(f.field)
    for c in reversed(f.coeffs):
        acc = acc * g + c
    return acc


def echelon_basis(field: FieldSpec, polys: Sequence[Polynomial]) -> List[Polynomial]:
    """Canonical basis of the span of `polys`.

    Every returned polynomial is monic, has a distinct degree, and has a zero
    coefficient at the degree of every other basis element. Sorted by
    increasing degree, so the result depends only on the span.
    """
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        return []
    width = max(len(f.coeffs) for f in polys)
    matrix = [[f.coeff(i) for i in range(width)] for f in polys]
    rows, _ = rref(matrix, field, column_order=range(width - 1, -1, -1))
    return sorted((Polynomial(field, row) for row in rows), key=lambda f: f.degree)
