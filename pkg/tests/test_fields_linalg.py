from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from surf610 import linalg
from surf610.fields import GF, QQ, FieldMismatch, ModP, check_scan_prime, is_prime
from oracles import naive_det, naive_rank

small = st.integers(-6, 6)
fracs = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


def matrices(elem, max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(elem, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_modp_basic_arithmetic():
    F = GF(7)
    a, b = F(3), F(5)
    assert a + b == 1 and a * b == 1 and a / b == a * 3 and -a == 4
    assert F(Fraction(1, 2)) * 2 == 1
    assert a ** -1 == 5
    assert str(F(-1)) == "6"


def test_modp_rejects_mixing_primes():
    with pytest.raises(FieldMismatch):
        GF(7)(1) + GF(11)(1)


def test_modp_fraction_with_bad_denominator():
    with pytest.raises(ZeroDivisionError):
        GF(7)(Fraction(1, 7))


def test_rationals_lowest_terms():
    x = QQ(Fraction(4, -6))
    assert x.numerator == -2 and x.denominator == 3


def test_cube_root_of_unity():
    assert GF(7).cube_root_of_unity() == 2
    w = GF(13).cube_root_of_unity()
    assert w != 1 and w ** 3 == 1
    with pytest.raises(ValueError):
        GF(11).cube_root_of_unity()


@pytest.mark.parametrize("p", [2, 3, 5, 9, 1])
def test_scan_prime_rejects(p):
    with pytest.raises(ValueError):
        check_scan_prime(p)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(matrices(fracs))
def test_rank_matches_naive_over_q(m):
    assert linalg.rank(m) == naive_rank(m)


@given(matrices(st.integers(0, 6)))
def test_rank_mod7_matches_brute_lift(m):
    # rank over F_7 never exceeds the rank over Q of an integer lift
    F = GF(7)
    r = linalg.rank([[F(x) for x in row] for row in m], F)
    assert r <= naive_rank(m)
    assert r == linalg.rank(m, F)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(fracs, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_cofactor_expansion(m):
    assert linalg.det(m) == naive_det(m)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_mod_p_is_reduction(m):
    F = GF(11)
    assert linalg.det(m, F) == F(int(naive_det(m)))


@given(small, small, st.integers(1, 6), st.integers(1, 6))
def test_reduction_is_a_homomorphism(a, b, c, d):
    F = GF(13)
    x, y = Fraction(a, c), Fraction(b, d)
    assert F(x) + F(y) == F(x + y)
    assert F(x) * F(y) == F(x * y)
