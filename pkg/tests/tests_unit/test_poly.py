"""Unit tests for the polynomial module.

Tests normalisation, arithmetic, Horner evaluation, annihilators, Lagrange
interpolation, division, gcd, CRT combination, composition and the
canonical echelon basis, with hypothesis round-trip properties.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrc.errors import FieldMismatchError, ParameterError
from lrc.Field.gf import FieldSpec
from lrc.Poly.poly import (NEG_INF, Polynomial, annihilator, compose, crt_combine, echelon_basis,
                           evaluate, ext_gcd, from_ints, gcd, interpolate, monomial, poly_divmod)

F13 = FieldSpec(13)
GF16 = FieldSpec(2, 4)


def P(*coeffs, field=F13):
    return from_ints(field, list(coeffs))


# ---------------------------------------------------------------------------
# Structure
# ---------------------------------------------------------------------------

def test_trailing_zeros_are_dropped():
    """Coefficients are normalised on construction."""
    assert P(1, 2, 0, 0).coeffs == (F13(1), F13(2))
    assert P(1, 2, 0, 0).degree == 1


def test_zero_polynomial_degree():
    """The zero polynomial has degree -inf."""
    zero = Polynomial(F13)
    assert zero.is_zero()
    assert zero.degree == NEG_INF
    with pytest.raises(ParameterError):
        zero.leading


def test_repr():
    """repr lists nonzero terms low to high."""
    assert repr(P(2, 2)) == "Polynomial(2 + 2*x)"
    assert repr(Polynomial(F13)) == "Polynomial(0)"


def test_monic_and_shift():
    """monic divides by the leading coefficient; shift multiplies by x^k."""
    assert P(2, 4).monic() == P(7, 1)
    assert P(1, 1).shift(2) == P(0, 0, 1, 1)


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------

def test_add_sub_mul():
    """(x + 1)(x - 1) = x^2 - 1."""
    assert P(1, 1) * P(-1, 1) == P(-1, 0, 1)
    assert P(1, 1) + P(-1, 1) == P(0, 2)
    assert P(1, 1) - P(1, 1) == Polynomial(F13)


def test_scalar_lift():
    """Scalars combine with polynomials as constants."""
    assert P(0, 1) + 3 == P(3, 1)
    assert P(0, 1) * 2 == P(0, 2)


def test_power():
    """(x + 1)^2 = x^2 + 2x + 1."""
    assert P(1, 1) ** 2 == P(1, 2, 1)
    assert P(1, 1) ** 0 == P(1)


def test_field_mismatch():
    """Polynomials over different fields do not mix."""
    with pytest.raises(FieldMismatchError):
        P(1, 1) + P(1, 1, field=GF16)


# ---------------------------------------------------------------------------
# Evaluation and interpolation
# ---------------------------------------------------------------------------

def test_evaluate_horner():
    """f = 1 + x + x^3 + x^4 at 3 is 8 in F13."""
    assert evaluate(P(1, 1, 0, 1, 1), F13(3)) == F13(8)
    assert P(1, 1, 0, 1, 1)(1) == F13(4)


def test_evaluate_wrong_field():
    """Evaluation point must belong to the polynomial's field."""
    with pytest.raises(FieldMismatchError):
        evaluate(P(1, 1), GF16(1))


def test_annihilator_vanishes_on_points():
    """prod (x - a) is monic and zero on every a."""
    points = [F13(v) for v in (1, 3, 9)]
    h = annihilator(F13, points)
    assert h.degree == 3
    assert h.leading == F13.one
    assert all(evaluate(h, a).is_zero() for a in points)


def test_annihilator_of_cube_roots_is_x3_minus_1():
    """The subgroup {1, 3, 9} is the root set of x^3 - 1."""
    assert annihilator(F13, [F13(1), F13(3), F13(9)]) == P(-1, 0, 0, 1)


def test_annihilator_gf16_subspace():
    """Roots {0, 1, a, a + 1} give x^4 + 7x^2 + 6x."""
    g = annihilator(GF16, [GF16(v) for v in range(4)])
    assert g.to_ints() == [0, 6, 7, 0, 1]


def test_interpolate_line_through_block():
    """Points (3, 8) and (9, 7) lie on 2x + 2."""
    delta = interpolate(F13, [(F13(3), F13(8)), (F13(9), F13(7))])
    assert delta == P(2, 2)
    assert evaluate(delta, F13(1)) == F13(4)


def test_interpolate_duplicate_abscissa():
    """Repeated x values are rejected."""
    with pytest.raises(ParameterError):
        interpolate(F13, [(F13(1), F13(2)), (F13(1), F13(3))])


def test_interpolate_needs_points():
    """The empty set has no interpolant."""
    with pytest.raises(ParameterError):
        interpolate(F13, [])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=12), min_size=1, max_size=8))
def test_interpolate_evaluate_round_trip(coeffs):
    """Interpolating f on deg f + 1 distinct points gives f back."""
    f = P(*coeffs)
    n = len(coeffs)
    points = [(F13(x), evaluate(f, F13(x))) for x in range(1, n + 1)]
    assert interpolate(F13, points) == f


# ---------------------------------------------------------------------------
# Division, gcd, CRT
# ---------------------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=12), max_size=9),
       st.lists(st.integers(min_value=0, max_value=12), min_size=1, max_size=5).filter(lambda c: any(c)))
def test_divmod_reconstruction(f_coeffs, g_coeffs):
    """f = q g + r with deg r < deg g."""
    f, g = P(*f_coeffs), P(*g_coeffs)
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_divide_by_zero_polynomial():
    """Division by the zero polynomial raises ZeroDivisionError."""
    with pytest.raises(ZeroDivisionError):
        poly_divmod(P(1, 1), Polynomial(F13))


def test_floordiv_and_mod_operators():
    """x^3 - 1 = (x - 1)(x^2 + x + 1)."""
    assert P(-1, 0, 0, 1) // P(-1, 1) == P(1, 1, 1)
    assert P(-1, 0, 0, 1) % P(-1, 1) == Polynomial(F13)


def test_gcd_is_monic():
    """gcd((x-1)(x-2), 2(x-1)(x-3)) = x - 1."""
    a = P(-1, 1) * P(-2, 1)
    b = (P(-1, 1) * P(-3, 1)).scale(2)
    assert gcd(a, b) == P(-1, 1)


def test_gcd_of_zeros():
    """gcd(0, 0) is undefined."""
    with pytest.raises(ParameterError):
        gcd(Polynomial(F13), Polynomial(F13))


def test_ext_gcd_bezout():
    """s f + t g = gcd."""
    f, g = P(-1, 0, 1), P(-2, 1)
    d, s, t = ext_gcd(f, g)
    assert s * f + t * g == d
    assert d == P(1)


def test_crt_combine_residues():
    """The combination reduces to each residue modulo its modulus."""
    g1 = annihilator(F13, [F13(1), F13(3)])
    g2 = annihilator(F13, [F13(2), F13(5)])
    m1, m2 = P(4, 1), P(7)
    f = crt_combine([m1, m2], [g1, g2])
    assert f.degree < 4
    assert f % g1 == m1
    assert f % g2 == m2


def test_crt_combine_rejects_common_factor():
    """Moduli sharing a root are not coprime."""
    g1 = annihilator(F13, [F13(1), F13(3)])
    g2 = annihilator(F13, [F13(3), F13(5)])
    with pytest.raises(ParameterError, match="coprime"):
        crt_combine([P(1), P(2)], [g1, g2])


def test_crt_combine_rejects_high_residue():
    """Residues must have degree below their modulus."""
    g1 = annihilator(F13, [F13(1)])
    with pytest.raises(ParameterError):
        crt_combine([P(0, 1)], [g1])


# ---------------------------------------------------------------------------
# Composition and echelon basis
# ---------------------------------------------------------------------------

def test_compose():
    """(y + 1) at y = x^3 is x^3 + 1."""
    assert compose(P(1, 1), monomial(F13, 3)) == P(1, 0, 0, 1)


def test_echelon_basis_is_canonical():
    """Two spanning sets of the same space give the same basis."""
    a = echelon_basis(F13, [P(1, 1), P(0, 1, 1)])
    b = echelon_basis(F13, [P(1, 2, 1), P(2, 2), P(3, 3)])
    assert a == b
    assert [f.degree for f in a] == [1, 2]
    assert a == [P(1, 1), P(-1, 0, 1)]
    assert all(f.leading == F13.one for f in a)


def test_echelon_basis_drops_zero():
    """Zero polynomials contribute nothing."""
    assert echelon_basis(F13, [Polynomial(F13)]) == []
