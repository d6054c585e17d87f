import random

import pytest

from surf610.fields import GF
from surf610.sampling import random_pair
from surf610.scan import (
    count_points, enumerate_cone_singularities, is_singular_point, multi_prime_scan,
)
from surf610.surface import SurfacePair
from surf610.wring import WPoly
from oracles import brute_force_orbits, brute_force_singular_points

DIAGONAL_P7_SINGULAR = [
    (0, t, (-t) % 7, 0, 0) for t in range(1, 7)
] + [
    (x, 0, (-x * x) % 7, 0, 0) for x in range(1, 7)
] + [
    (x, (-x * x) % 7, 0, 0, 0) for x in range(1, 7)
]


def test_diagonal_singular_points_match_brute_force(diagonal_pair):
    rep = enumerate_cone_singularities(diagonal_pair, 7)
    assert rep.singular_points == sorted(brute_force_singular_points(diagonal_pair, 7))
    assert rep.singular_points == sorted(DIAGONAL_P7_SINGULAR)
    assert rep.scanned == 7 ** 5 - 1


def test_diagonal_singularities_lie_on_three_orbits(diagonal_pair):
    rep = enumerate_cone_singularities(diagonal_pair, 7)
    line_points = [pt for pt in rep.singular_points if pt[0] == 0]
    assert line_points == [(0, t, 7 - t, 0, 0) for t in range(1, 7)]
    assert len(rep.singular_points) == 18


def test_reported_points_recheck(diagonal_pair):
    rep = enumerate_cone_singularities(diagonal_pair, 11)
    assert rep.singular_points
    assert all(is_singular_point(diagonal_pair, pt, 11) for pt in rep.singular_points)
    rng = random.Random(0)
    reported = set(rep.singular_points)
    for _ in range(300):
        pt = tuple(rng.randrange(11) for _ in range(5))
        if pt not in reported:
            assert not is_singular_point(diagonal_pair, pt, 11)


def test_random_pair_matches_brute_force():
    pair = random_pair(random.Random(12), GF(7))
    rep = enumerate_cone_singularities(pair, 7)
    assert rep.singular_points == sorted(brute_force_singular_points(pair, 7))


def test_parallel_scan_is_identical(diagonal_pair):
    a = enumerate_cone_singularities(diagonal_pair, 11, jobs=1)
    b = enumerate_cone_singularities(diagonal_pair, 11, jobs=3)
    assert a.to_json() == b.to_json()


def test_report_json_timing_flag(diagonal_pair):
    rep = enumerate_cone_singularities(diagonal_pair, 7)
    assert set(rep.to_json()) == {"prime", "scanned", "singular_points"}
    assert "elapsed_ms" in rep.to_json(timing=True)


@pytest.mark.parametrize("p", [2, 3, 5, 8])
def test_bad_primes(diagonal_pair, p):
    with pytest.raises(ValueError):
        enumerate_cone_singularities(diagonal_pair, p)


def test_denominator_divisible_by_prime():
    pair = SurfacePair.parse("Z0^2 + 1/7*Y0^3", "U0^2")
    with pytest.raises(ValueError):
        enumerate_cone_singularities(pair, 7)


def test_point_count_matches_orbit_enumeration(diagonal_pair):
    pc = count_points(diagonal_pair, 7)
    assert pc.points == brute_force_orbits(diagonal_pair, 7) == 58
    assert pc.points == pc.affine_patch + pc.boundary


def test_ambient_space_count():
    zero = SurfacePair(WPoly.zero(deg=6), WPoly.zero(deg=10))
    pc = count_points(zero, 7)
    assert pc.cone_points == 7 ** 5 - 1
    assert pc.points == brute_force_orbits(zero, 7)
    assert pc.affine_patch == 7 ** 4


def test_multi_prime_flag(diagonal_pair, shifted_pair):
    summary = multi_prime_scan(diagonal_pair)
    assert summary.likely_singular_over_q
    assert all(n > 0 for n in summary.counts.values())
