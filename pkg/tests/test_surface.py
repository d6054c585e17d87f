import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from surf610.fields import GF, QQ
from surf610.hilbert import quotient_dim_oracle
from surf610.sampling import random_normal_form, random_pair
from surf610.surface import (
    NormalFormParams, SurfacePair, ValidationError, base_locus_empty, base_locus_report,
    canonical_image, canonical_map_degree, normalize, pullback, ternary_monomials, validate_pair,
)
from surf610.wring import P3, WPoly, parse_poly


def test_validate_flags(diagonal_pair):
    rep = validate_pair(diagonal_pair)
    assert rep.ok and rep.z0sq_nonzero and rep.u0sq_nonzero and rep.degrees_ok
    assert not validate_pair(SurfacePair.parse("X0*U0 + Y0^3", "U0^2")).z0sq_nonzero
    assert not validate_pair(SurfacePair.parse("Z0^2", "Y0^5 + Z0^2*Y0^2")).u0sq_nonzero


def test_pair_file_format(diagonal_pair):
    text = "# comment\nf6: Z0^2 + Y0^3 + Y1^3 + X0^6\n\ng10: U0^2 + Y0^5 + Y1^5 + X0^10\n"
    assert SurfacePair.from_text(text) == diagonal_pair
    assert SurfacePair.from_text(diagonal_pair.to_text()) == diagonal_pair
    with pytest.raises(ValueError):
        SurfacePair.from_text("f6: Z0^2\n")
    with pytest.raises(ValidationError):
        SurfacePair.parse("Z0^2 + X0", "U0^2")


def test_base_locus(diagonal_pair, shifted_pair):
    rep = base_locus_report(diagonal_pair)
    assert not rep.empty and rep.common_factor == "Y0 + Y1"
    assert base_locus_empty(shifted_pair)
    assert base_locus_empty(SurfacePair.parse("Z0^2 + Y0^3", "U0^2 + Y1^5"))


def test_base_locus_needs_valid_pair():
    with pytest.raises(ValidationError):
        base_locus_empty(SurfacePair.parse("Y0^3", "U0^2"))


def test_normal_form_sizes():
    assert NormalFormParams.sizes() == {"alpha0": 1, "alpha3": 10, "beta3": 10, "beta5": 21}
    assert ternary_monomials(3)[:4] == ((3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0))


def test_already_normal_gives_identity(diagonal_pair):
    nf, cert = normalize(diagonal_pair)
    assert cert.is_identity()
    assert nf.expand() == diagonal_pair


def test_linear_z0_term_is_completed_away():
    pair = SurfacePair.parse("Z0^2 + 2*X0*Y0*Z0 + Y0^3 + X0^6", "U0^2 + Y1^5")
    nf, cert = normalize(pair)
    assert cert.verify(pair, nf.expand())
    assert nf.expand().f6.coeff((1, 1, 0, 1, 0)) == 0


def test_z0u0_term_is_removed():
    pair = SurfacePair.parse("Z0^2 + X0*U0 + Y0^3 + Y1^3", "U0^2 + 3*Y0*Z0*U0 + Y1^5 + X0*Y0^3*Z0")
    nf, cert = normalize(pair)
    g = nf.expand().g10
    assert all(not (m[3] and m[4]) for m in g.terms)
    assert cert.verify(pair, nf.expand())
    assert not cert.is_identity()


def test_normalize_rejects_invalid():
    with pytest.raises(ValidationError):
        normalize(SurfacePair.parse("X0*U0", "U0^2"))


@pytest.mark.parametrize("field", [QQ, GF(7), GF(13)])
def test_normalize_random_pairs(field):
    rng = random.Random(42)
    for _ in range(4):
        pair = random_pair(rng, field)
        nf, cert = normalize(pair)
        assert cert.verify(pair, nf.expand())
        nf2, cert2 = normalize(nf.expand())
        assert nf2 == nf and cert2.is_identity()


def test_normalization_preserves_quotient_dimensions():
    rng = random.Random(3)
    pair = random_pair(rng)
    nf, _ = normalize(pair)
    out = nf.expand()
    for n in range(13):
        assert quotient_dim_oracle(pair, n) == quotient_dim_oracle(out, n)


def test_params_json_round_trip():
    nf = random_normal_form(random.Random(1), QQ)
    assert NormalFormParams.from_json(nf.to_json()) == nf
    nf7 = nf.reduce(GF(7))
    assert NormalFormParams.from_json(nf7.to_json(), GF(7)) == nf7


def test_from_pair_rejects_off_shape():
    with pytest.raises(ValidationError):
        NormalFormParams.from_pair(SurfacePair.parse("Z0^2 + X0^3*Z0", "U0^2"))


def test_cubic_image():
    nf = random_normal_form(random.Random(2), QQ, alpha0=0)
    img = canonical_image(nf)
    assert img.degree == 3
    expected = parse_poly("xi0*zeta0^2", ring=P3)
    assert img.poly - expected == WPoly(QQ, {(i, j, k, 0): c for c, (i, j, k) in zip(nf.alpha3, ternary_monomials(3))}, ring=P3)
    assert img.verify(nf.expand())
    assert canonical_map_degree(nf) == (2, 3)


def test_sextic_image_matches_displayed_formula():
    nf = random_normal_form(random.Random(4), QQ, alpha0=1)
    img = canonical_image(nf)
    assert img.degree == 6 and img.verify(nf.expand())
    assert canonical_map_degree(nf) == (1, 6)
    # rebuild the sextic from its textual shape P^2 + a0^2 (beta3 xi0^2 zeta0 + beta5 xi0)
    def form(coeffs, d, tail=""):
        out = ""
        for c, (i, j, k) in zip(coeffs, ternary_monomials(d)):
            out += f" {'-' if c < 0 else '+'} {abs(c)}*xi0^{i}*eta0^{j}*eta1^{k}{tail}"
        return out
    text_sq = parse_poly("xi0*zeta0^2" + form(nf.alpha3, 3), ring=P3)
    rest = parse_poly(form(nf.beta3, 3, "*xi0^2*zeta0") + form(nf.beta5, 5, "*xi0"), ring=P3)
    assert img.poly == text_sq * text_sq + rest


def test_single_alpha0_power_does_not_close():
    # the membership identity needs alpha0^2 in front of the beta part
    nf = random_normal_form(random.Random(9), QQ, alpha0=3)
    img = canonical_image(nf)
    pair = nf.expand()
    xi = parse_poly("xi0", ring=P3)
    P = parse_poly("xi0*zeta0^2", ring=P3) + WPoly(QQ, {(i, j, k, 0): c for c, (i, j, k) in zip(nf.alpha3, ternary_monomials(3))}, ring=P3)
    beta_part = (img.poly - P * P).scale(QQ(1) / 9)
    wrong = P * P + beta_part.scale(QQ(3))
    x = parse_poly("X0")
    lhs = pullback(wrong)
    assert lhs != img.cofactor_f * pair.f6 + img.cofactor_g * pair.g10
    assert lhs != img.cofactor_f * pair.f6 + (x ** 8).scale(QQ(3)) * pair.g10


@given(st.integers(0, 10_000), st.sampled_from([QQ, GF(7), GF(11), GF(13)]))
def test_canonical_image_certificate(seed, field):
    nf = random_normal_form(random.Random(seed), field)
    img = canonical_image(nf)
    assert img.verify(nf.expand())
    d, e = canonical_map_degree(nf)
    assert d * e <= 9 and e == img.degree
