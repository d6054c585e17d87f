"""Parameter counts, the 34-parameter family V', and its finite symmetry group.

V' consists of pairs

    f6 = Z0^2 + X0*U0 + Y0^3 + Y1^3 + a0*X0^2*Y0*Y1 + X0^4*(a1*Y0 + a2*Y1) + X0^6
    g10 = U0^2 + beta3(X0^2, Y0, Y1)*X0*Z0 + beta5(X0^2, Y0, Y1)

The group acting on it is generated by

    sigma: Y0 -> w*Y0, Y1 -> w^2*Y1        tau: Y0 <-> Y1
    Psi(l0, l1, m0, a): X0 -> a*X0, Y0 -> w^l0*a^2*Y0, Y1 -> w^l1*a^2*Y1,
                        Z0 -> (-1)^m0*a^3*Z0, U0 -> a^5*U0

with w a primitive cube root of unity.  Elements are written rho o Psi with
rho = sigma^t o tau^e.  Enumerating (t, e, l0, l1, m0) gives 6*9*2 = 108
formal products; since sigma itself equals Psi(1, 2, 0, 1), only 36 of them are
distinct substitutions, and orbits on V' have at most 36 elements.

Group elements act on polynomials as ring maps, f -> f(g(X0), ..., g(U0)),
and g*h is the composite ring map g o h, so apply(g*h, v) = apply(g, apply(h, v)).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .fields import QQ, GF, PrimeField
from .surface import (
    BETA3_DEGREE, BETA5_DEGREE, ALPHA3_DEGREE, NormalFormParams, SurfacePair, ValidationError,
    _scalar_from_json, _scalar_json, _ternary_to_wpoly, ternary_monomials,
)
from .wring import P11235, WPoly, X0, Y0, Y1, Z0, U0

# f6 monomials carrying the three free V' parameters, and the fixed part.
A0_MONO = (2, 1, 1, 0, 0)
A1_MONO = (4, 1, 0, 0, 0)
A2_MONO = (4, 0, 1, 0, 0)
F6_FIXED = ((0, 0, 0, 2, 0), (1, 0, 0, 0, 1), (0, 3, 0, 0, 0), (0, 0, 3, 0, 0), (6, 0, 0, 0, 0))
Z0SQ, U0SQ = (0, 0, 0, 2, 0), (0, 0, 0, 0, 2)


@dataclass(frozen=True)
class VPrimeParams:
    field: object
    a0: object
    a1: object
    a2: object
    beta3: tuple
    beta5: tuple

    def __post_init__(self):
        F = self.field
        for name in ("a0", "a1", "a2"):
            object.__setattr__(self, name, F(getattr(self, name)))
        for name, d in (("beta3", BETA3_DEGREE), ("beta5", BETA5_DEGREE)):
            v = tuple(F(c) for c in getattr(self, name))
            if len(v) != len(ternary_monomials(d)):
                raise ValueError(f"{name} needs {len(ternary_monomials(d))} coefficients")
            object.__setattr__(self, name, v)

    def expand(self) -> SurfacePair:
        F = self.field
        f = {m: F.one() for m in F6_FIXED}
        f[A0_MONO] = self.a0
        f[A1_MONO] = self.a1
        f[A2_MONO] = self.a2
        g = (
            WPoly.monomial(U0SQ, 1, F)
            + _ternary_to_wpoly(self.beta3, BETA3_DEGREE, F, extra=(1, 0, 0, 1, 0))
            + _ternary_to_wpoly(self.beta5, BETA5_DEGREE, F)
        )
        return SurfacePair(WPoly(F, f, 6), WPoly(F, g.terms, 10))

    def normal_form(self) -> NormalFormParams:
        return NormalFormParams.from_pair(self.expand())

    @classmethod
    def from_pair(cls, p: SurfacePair) -> "VPrimeParams":
        nf = NormalFormParams.from_pair(p)
        f = p.f6
        allowed = set(F6_FIXED) | {A0_MONO, A1_MONO, A2_MONO}
        bad = [m for m in f.terms if m not in allowed]
        if bad or any(f.coeff(m) != 1 for m in F6_FIXED):
            raise ValidationError("not_vprime", "f6 is not in the V' shape")
        return cls(p.field, f.coeff(A0_MONO), f.coeff(A1_MONO), f.coeff(A2_MONO), nf.beta3, nf.beta5)

    def vector(self) -> tuple:
        return (self.a0, self.a1, self.a2) + self.beta3 + self.beta5

    def to_json(self) -> dict:
        return {
            "a0": _scalar_json(self.a0),
            "a1": _scalar_json(self.a1),
            "a2": _scalar_json(self.a2),
            "beta3": [_scalar_json(c) for c in self.beta3],
            "beta5": [_scalar_json(c) for c in self.beta5],
        }

    @classmethod
    def from_json(cls, data, field=QQ) -> "VPrimeParams":
        """Accepts the keyed object of ``to_json`` or a flat list of 34 values."""
        if isinstance(data, list):
            n3 = len(ternary_monomials(BETA3_DEGREE))
            if len(data) != 3 + n3 + len(ternary_monomials(BETA5_DEGREE)):
                raise ValueError("flat V' vector must have 34 entries")
            vals = [_scalar_from_json(x, field) for x in data]
            return cls(field, vals[0], vals[1], vals[2], vals[3:3 + n3], vals[3 + n3:])
        return cls(
            field,
            _scalar_from_json(data["a0"], field),
            _scalar_from_json(data["a1"], field),
            _scalar_from_json(data["a2"], field),
            tuple(_scalar_from_json(x, field) for x in data["beta3"]),
            tuple(_scalar_from_json(x, field) for x in data["beta5"]),
        )


# substitutions of the form var_i -> s_i * var_perm(i) -------------------

@dataclass(frozen=True)
class Transformation:
    perm: tuple[int, ...]
    scales: tuple

    @classmethod
    def identity(cls, field):
        return cls(tuple(range(5)), (field.one(),) * 5)

    def then_apply(self, other: "Transformation") -> "Transformation":
        """Ring map self o other: var -> self(other(var))."""
        perm = tuple(self.perm[other.perm[i]] for i in range(5))
        scales = tuple(other.scales[i] * self.scales[other.perm[i]] for i in range(5))
        return Transformation(perm, scales)

    def images(self, field) -> list[WPoly]:
        return [WPoly.var(self.perm[i], field).scale(self.scales[i]) for i in range(5)]


def _omega(field):
    if not isinstance(field, PrimeField):
        raise ValueError("the group action needs a primitive cube root of unity; use a prime field with p = 1 mod 3")
    return field.cube_root_of_unity()


def sigma(field) -> Transformation:
    w = _omega(field)
    one = field.one()
    return Transformation(tuple(range(5)), (one, w, w * w, one, one))


def tau(field) -> Transformation:
    one = field.one()
    return Transformation((X0, Y1, Y0, Z0, U0), (one,) * 5)


def psi(lambda0: int, lambda1: int, mu0: int, a, field) -> Transformation:
    w = _omega(field)
    a = field(a)
    return Transformation(
        tuple(range(5)),
        (a, w ** lambda0 * a ** 2, w ** lambda1 * a ** 2, (-1) ** mu0 * a ** 3, a ** 5),
    )


@dataclass(frozen=True)
class GroupElement:
    """rho o Psi(lambda0, lambda1, mu0, a) with rho = sigma^t o tau^e."""

    t: int
    e: int
    lambda0: int
    lambda1: int
    mu0: int
    a: object
    field: object

    def __post_init__(self):
        if self.field.characteristic != 0 and self.field(self.a) == 0:
            raise ValueError("a must be nonzero")
        object.__setattr__(self, "t", self.t % 3)
        object.__setattr__(self, "e", self.e % 2)
        object.__setattr__(self, "lambda0", self.lambda0 % 3)
        object.__setattr__(self, "lambda1", self.lambda1 % 3)
        object.__setattr__(self, "mu0", self.mu0 % 2)
        object.__setattr__(self, "a", self.field(self.a))

    @classmethod
    def identity(cls, field):
        return cls(0, 0, 0, 0, 0, 1, field)

    def transformation(self) -> Transformation:
        F = self.field
        rho = Transformation.identity(F)
        for _ in range(self.t):
            rho = rho.then_apply(sigma(F))
        if self.e:
            rho = rho.then_apply(tau(F))
        return rho.then_apply(psi(self.lambda0, self.lambda1, self.mu0, self.a, F))

    @classmethod
    def from_transformation(cls, tr: Transformation, field) -> "GroupElement":
        """Write a group substitution as Psi or tau o Psi (t = 0 always suffices)."""
        e = 1 if tr.perm[Y0] == Y1 else 0
        a = tr.scales[X0]
        w = _omega(field)
        powers = {field.one(): 0, w: 1, w * w: 2}
        try:
            l0 = powers[tr.scales[Y0] / a ** 2]
            l1 = powers[tr.scales[Y1] / a ** 2]
        except KeyError as exc:
            raise ValueError("substitution is not in the group") from exc
        mu = 0 if tr.scales[Z0] == a ** 3 else 1
        g = cls(0, e, l0, l1, mu, a, field)
        if g.transformation() != tr:
            raise ValueError("substitution is not in the group")
        return g

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement.from_transformation(self.transformation().then_apply(other.transformation()), self.field)

    def to_json(self) -> dict:
        return {"t": self.t, "e": self.e, "lambda0": self.lambda0, "lambda1": self.lambda1,
                "mu0": self.mu0, "a": _scalar_json(self.a)}


def apply_group(g: GroupElement, v: VPrimeParams) -> VPrimeParams:
    """Coefficients of the transformed pair, renormalized by a^-6 and a^-10."""
    F = v.field
    if g.field != F:
        raise ValueError("group element and parameters live over different fields")
    pair = v.expand()
    ims = g.transformation().images(F)
    a = g.a
    f = WPoly(F, pair.f6.compose(ims).scale(1 / a ** 6).terms, 6)
    h = WPoly(F, pair.g10.compose(ims).scale(1 / a ** 10).terms, 10)
    try:
        return VPrimeParams.from_pair(SurfacePair(f, h))
    except ValidationError as exc:
        raise AssertionError(f"group element {g.to_json()} left the V' shape") from exc


def finite_part(field) -> list[GroupElement]:
    """All 108 formal products sigma^t o tau^e o Psi(l0, l1, m0, 1)."""
    return [GroupElement(t, e, l0, l1, m0, 1, field)
            for t, e, l0, l1, m0 in product(range(3), range(2), range(3), range(3), range(2))]


def distinct_transformations(field) -> int:
    return len({g.transformation() for g in finite_part(field)})


def _closure(gens, field) -> set:
    seen = {Transformation.identity(field)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = x.then_apply(s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def param_counts(field=None) -> dict[str, int]:
    """Free parameters of the normal form and of V', and the number of formal group products."""
    field = field or GF(7)
    sizes = NormalFormParams.sizes()
    full = sum(sizes.values())
    n_alpha3 = len(ternary_monomials(ALPHA3_DEGREE))
    # alpha3 in V' keeps only a0, a1, a2 free; the other seven entries are fixed
    fixed_alpha3 = n_alpha3 - 3
    vprime = full - sizes["alpha0"] - fixed_alpha3
    rho = len(_closure([sigma(field), tau(field)], field))
    lam = len(list(product(range(3), range(3))))
    mu = 2
    return {"full": full, "vprime": vprime, "finite_group": rho * lam * mu}


@dataclass(frozen=True)
class OrbitReport:
    orbit: frozenset
    formal_elements: int
    distinct_transformations: int

    @property
    def size(self) -> int:
        return len(self.orbit)

    def to_json(self) -> dict:
        return {
            "orbit_size": self.size,
            "formal_group_elements": self.formal_elements,
            "distinct_transformations": self.distinct_transformations,
            "divides_formal_order": self.formal_elements % self.size == 0,
            "orbit": sorted((_vec_json(v) for v in self.orbit)),
        }


def _vec_json(v: VPrimeParams) -> list:
    return [_scalar_json(c) for c in v.vector()]


def orbit(v: VPrimeParams) -> OrbitReport:
    elems = finite_part(v.field)
    pts = frozenset(apply_group(g, v) for g in elems)
    return OrbitReport(pts, len(elems), distinct_transformations(v.field))


def random_vprime(rng: random.Random, field, tau_symmetric: bool = False) -> VPrimeParams:
    def r():
        return field(rng.randrange(field.p) if isinstance(field, PrimeField) else rng.randint(-5, 5))

    def form(d):
        mons = ternary_monomials(d)
        vals = {m: r() for m in mons}
        if tau_symmetric:
            vals = {(i, j, k): vals[(i, min(j, k), max(j, k))] for i, j, k in mons}
        return tuple(vals[m] for m in mons)

    a0, a1 = r(), r()
    a2 = a1 if tau_symmetric else r()
    return VPrimeParams(field, a0, a1, a2, form(BETA3_DEGREE), form(BETA5_DEGREE))
