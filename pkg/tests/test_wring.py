from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from surf610.fields import GF, QQ
from surf610.hilbert import weight_series
from surf610.wring import (
    P11235, X0, Y0, Y1, Z0, U0, BinaryForm, GradedSubstitution, PolyParseError, WPoly,
    binary_gcd, binary_resultant, gcd_many, monomial_basis, parse_poly, restrict_to_line, substitute,
)
from oracles import count_weighted_monomials

coeffs = st.integers(-5, 5)


def homogeneous(d, field=QQ):
    basis = monomial_basis(d)
    return st.lists(coeffs, min_size=len(basis), max_size=len(basis)).map(
        lambda cs: WPoly(field, dict(zip(basis, cs)), deg=d)
    )


def binary(d):
    return st.lists(coeffs, min_size=d + 1, max_size=d + 1).map(BinaryForm)


def test_degree_two_basis():
    assert monomial_basis(2) == [(2, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0)]
    assert monomial_basis(1) == [(1, 0, 0, 0, 0)]


def test_degree_six_basis_has_fifteen_monomials():
    assert len(monomial_basis(6)) == 15


@pytest.mark.parametrize("d", range(21))
def test_basis_size_matches_series_and_enumeration(d):
    assert len(monomial_basis(d)) == weight_series(20)[d] == count_weighted_monomials(d)


def test_product_example():
    p = (WPoly.parse("X0^2 + Y0")) * WPoly.parse("Y1")
    assert p == WPoly.parse("X0^2*Y1 + Y0*Y1")
    assert p.degree == 4
    assert (WPoly.var(Z0) * WPoly.var(Z0)).degree == 6


def test_additive_inverse_is_zero():
    f = WPoly.parse("Z0^2 + 3*X0*U0 - Y1^3")
    assert (f + f.scale(-1)).is_zero()


def test_parse_rationals_and_unicode_minus():
    p = parse_poly("3/4*X0^2*Y0 − Y1^2")
    assert p.coeff((2, 1, 0, 0, 0)) == Fraction(3, 4)
    assert p.coeff((0, 0, 2, 0, 0)) == -1


def test_parse_error_reports_position():
    with pytest.raises(PolyParseError) as exc:
        parse_poly("X0^2 + * Y0")
    assert exc.value.pos == 7
    with pytest.raises(PolyParseError):
        parse_poly("X0 + W1")


def test_field_mismatch_rejected():
    with pytest.raises(ValueError):
        WPoly.parse("X0") + WPoly.parse("X0", GF(7))


@given(homogeneous(6), homogeneous(4))
def test_degree_additivity(f, g):
    if not f.is_zero() and not g.is_zero():
        assert (f * g).degree == 10
        assert (f * g).is_homogeneous()


@given(homogeneous(7))
def test_print_parse_round_trip(f):
    assert parse_poly(str(f)) == f


@given(homogeneous(5), homogeneous(5), st.integers(1, 9))
def test_reduction_commutes_with_arithmetic(f, g, den):
    F = GF(11)
    f = f.scale(Fraction(1, den))
    assert (f * g).reduce(F) == f.reduce(F) * g.reduce(F)
    assert (f + g).reduce(F) == f.reduce(F) + g.reduce(F)


def _triangular(a, b, c):
    """A unipotent graded change of variables and its inverse."""
    v = [WPoly.var(i) for i in range(5)]
    ims = list(v)
    inv = list(v)
    shift_y = v[X0] * v[X0] * a
    shift_z = v[X0] * v[Y1] * b
    shift_u = v[Y0] * v[Z0] * c
    ims[Y0] = v[Y0] + shift_y
    ims[Z0] = v[Z0] + shift_z
    ims[U0] = v[U0] + shift_u
    inv[Y0] = v[Y0] - shift_y
    inv[Z0] = v[Z0] - shift_z
    inv[U0] = v[U0] - v[Y0] * v[Z0] * c + shift_y * v[Z0] * c + (v[Y0] - shift_y) * shift_z * c
    return GradedSubstitution(ims, inv)


@given(homogeneous(8), coeffs, coeffs, coeffs)
def test_substitution_inverse_round_trip(f, a, b, c):
    s = _triangular(a, b, c)
    assert substitute(substitute(f, s), s.inverse()) == f
    assert substitute(f, s).degree == f.degree or f.is_zero()


def test_identity_substitution():
    f = WPoly.parse("Z0^2 + X0*U0 + Y0^3")
    assert substitute(f, GradedSubstitution.identity()) == f


@given(homogeneous(10), st.integers(1, 5))
def test_scaling_substitution_multiplies_by_power(f, a):
    assert substitute(f, GradedSubstitution.scaling(a)) == f.scale(Fraction(a) ** 10)


def test_bad_inverse_rejected():
    v = [WPoly.var(i) for i in range(5)]
    ims = list(v)
    ims[Z0] = v[Z0] + v[X0] ** 3
    with pytest.raises(ValueError):
        GradedSubstitution(ims, v)


def test_non_graded_substitution_rejected():
    v = [WPoly.var(i) for i in range(5)]
    ims = list(v)
    ims[Z0] = v[Z0] + v[X0]
    with pytest.raises(ValueError):
        GradedSubstitution(ims)


def test_z0u0_elimination_example():
    # g10 with a Z0*U0*(c*Y0) term loses every monomial divisible by Z0*U0
    from surf610.surface import z0u0_elimination
    c = 3
    g = parse_poly(f"U0^2 + {c}*Y0*Z0*U0 + X0*Y0^3*Z0 + Y1^5")
    beta1 = parse_poly(f"{c}*Y0")
    s = z0u0_elimination(2, beta1)
    h = substitute(g, s)
    assert all(not (m[Z0] and m[U0]) for m in h.terms)


def _from_poly(text):
    return restrict_to_line(parse_poly(text))


def test_resultant_examples():
    a = _from_poly("Y0^3 + Y1^3")
    assert binary_resultant(a, _from_poly("Y0^5 + Y1^5")) == 0
    assert binary_resultant(a, _from_poly("Y0^5 + 2*Y1^5")) != 0
    assert binary_resultant(_from_poly("Y0^3"), _from_poly("Y1^5")) != 0


def test_gcd_examples():
    g = binary_gcd(_from_poly("Y0^3 + Y1^3"), _from_poly("Y0^5 + Y1^5"))
    assert g == BinaryForm([1, 1])
    assert binary_gcd(BinaryForm([1, 0]), BinaryForm([0, 1])) == BinaryForm([1])
    f = BinaryForm([2, -3, 0, 4])
    assert binary_gcd(f, f).exact_div(f).degree == 0
    # shared zero at infinity T1 = 0
    assert binary_gcd(BinaryForm([0, 1, 0]), BinaryForm([0, 0, 1])) == BinaryForm([0, 1])


@given(binary(3), binary(2))
def test_resultant_vanishes_iff_gcd_nontrivial(f, g):
    if f.is_zero() or g.is_zero():
        return
    assert (binary_resultant(f, g) == 0) == (binary_gcd(f, g).degree >= 1)


@given(binary(2), binary(1), binary(1), st.tuples(coeffs, coeffs).filter(lambda t: t != (0, 0)))
def test_constructed_common_root_detected(f, g, h, root):
    ell = BinaryForm.from_roots([root])
    ff, gg = f * ell, g * ell
    if ff.is_zero() or gg.is_zero():
        return
    assert binary_resultant(ff, gg) == 0
    assert binary_gcd(ff, gg).evaluate(*map(Fraction, root)) == 0


def test_gcd_many_skips_zeros():
    assert gcd_many([BinaryForm([0, 0]), BinaryForm([1, 1]) * BinaryForm([1, 0]), BinaryForm([1, 1])]) == BinaryForm([1, 1])
    assert gcd_many([BinaryForm([0, 0])]) is None
