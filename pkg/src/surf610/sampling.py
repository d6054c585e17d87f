"""Seeded generators for pairs, normal-form parameters and test surfaces."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fields import QQ, PrimeField
from .hilbert import regular_sequence_check
from .surface import (
    ALPHA3_DEGREE, BETA3_DEGREE, BETA5_DEGREE, NormalFormParams, SurfacePair,
    base_locus_empty, ternary_monomials, validate_pair,
)
from .wring import WPoly, monomial_basis


@dataclass
class SamplerConfig:
    coeff_range: int = 5
    max_tries: int = 200
    regular_sequence_degree: int = 12


def _coeff(rng: random.Random, field, bound: int):
    if isinstance(field, PrimeField):
        return field(rng.randrange(field.p))
    return field(rng.randint(-bound, bound))


def random_pair(rng: random.Random, field=QQ, bound: int = 3) -> SurfacePair:
    """Dense random f6, g10 with nonzero Z0^2 and U0^2 coefficients."""
    while True:
        f = WPoly(field, {m: _coeff(rng, field, bound) for m in monomial_basis(6)}, 6)
        g = WPoly(field, {m: _coeff(rng, field, bound) for m in monomial_basis(10)}, 10)
        pair = SurfacePair(f, g)
        if validate_pair(pair).ok:
            return pair


def random_normal_form(rng: random.Random, field=QQ, bound: int = 3, alpha0=None) -> NormalFormParams:
    def vec(d):
        return tuple(_coeff(rng, field, bound) for _ in ternary_monomials(d))

    a0 = _coeff(rng, field, bound) if alpha0 is None else field(alpha0)
    return NormalFormParams(field, a0, vec(ALPHA3_DEGREE), vec(BETA3_DEGREE), vec(BETA5_DEGREE))


def surface_checks(pair: SurfacePair, max_degree: int = 12) -> dict[str, bool]:
    rep = validate_pair(pair)
    out = rep.to_json()
    out["base_locus_empty"] = rep.ok and base_locus_empty(pair)
    out["regular_sequence"] = rep.ok and regular_sequence_check(pair, max_degree)
    return out


def random_surface(seed: int, prime: int | None = None, config: SamplerConfig | None = None):
    """Seeded normal-form pair over Q passing validation, base-locus and regular-sequence checks.

    With ``prime`` the accepted pair is reduced mod p afterwards; returns (pair, params, checks).
    """
    cfg = config or SamplerConfig()
    rng = random.Random(seed)
    for _ in range(cfg.max_tries):
        nf = random_normal_form(rng, QQ, cfg.coeff_range)
        pair = nf.expand()
        checks = surface_checks(pair, cfg.regular_sequence_degree)
        if all(checks.values()):
            if prime is not None:
                F = PrimeField(prime)
                nf = nf.reduce(F)
                pair = nf.expand()
                checks = surface_checks(pair, cfg.regular_sequence_degree)
            return pair, nf, checks
    raise RuntimeError(f"no valid surface after {cfg.max_tries} draws (seed {seed})")
