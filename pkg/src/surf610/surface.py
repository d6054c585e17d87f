"""Candidate pairs (f6, g10): validation, normal form, base locus, canonical image.

Normal form.  Every pair with nonzero Z0^2 and U0^2 coefficients can be moved
by a graded coordinate change psi, rescalings u, v and a multiple h of f6 to

    f6' = Z0^2 + alpha0*X0*U0 + alpha3(X0^2, Y0, Y1)
    g10' = U0^2 + beta3(X0^2, Y0, Y1)*X0*Z0 + beta5(X0^2, Y0, Y1)

with f6' = u*(f6 o psi) and g10' = v*(g10 o psi) + h*(f6 o psi).  Forms in
(X0^2, Y0, Y1) are stored as coefficient vectors over the monomials
x^i*y0^j*y1^k (i+j+k = d) in descending lexicographic order of (i, j, k).

Canonical image.  With xi0 = X0^3, eta_i = X0*Y_i, zeta0 = Z0 the canonical
map lands on the cubic xi0*zeta0^2 + alpha3 when alpha0 = 0, and otherwise on
the sextic P^2 + alpha0^2*(beta3*xi0^2*zeta0 + beta5*xi0), P = xi0*zeta0^2 + alpha3.
Both come with cofactors (a, b) such that the pullback equals a*f6 + b*g10.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fields import QQ, ModP
from .wring import (
    P3, P11235, X0, Y0, Y1, Z0, U0, GradedSubstitution, WPoly,
    binary_gcd, binary_resultant, parse_poly, restrict_to_line, substitute,
)

ALPHA3_DEGREE, BETA3_DEGREE, BETA5_DEGREE = 3, 3, 5
MAX_NORMALIZE_ROUNDS = 12


class ValidationError(ValueError):
    """A pair fails a precondition; ``reason`` is a short machine-readable tag."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail


@lru_cache(maxsize=None)
def ternary_monomials(d: int) -> tuple[tuple[int, int, int], ...]:
    """Exponents (i, j, k) of x^i*y0^j*y1^k with i+j+k = d, descending lex."""
    return tuple(sorted(((i, j, d - i - j) for i in range(d + 1) for j in range(d + 1 - i)), reverse=True))


def _ternary_to_wpoly(coeffs, d: int, field, extra=(0, 0, 0, 0, 0)) -> WPoly:
    """sum c*(X0^2)^i*Y0^j*Y1^k times the monomial ``extra``."""
    terms = {}
    for c, (i, j, k) in zip(coeffs, ternary_monomials(d)):
        terms[(2 * i + extra[X0], j + extra[Y0], k + extra[Y1], extra[Z0], extra[U0])] = c
    return WPoly(field, terms, deg=2 * d + P11235.degree(extra))


def _ternary_to_p3(coeffs, d: int, field) -> WPoly:
    """The same coefficients read as a form of degree d in (xi0, eta0, eta1)."""
    return WPoly(field, {(i, j, k, 0): c for c, (i, j, k) in zip(coeffs, ternary_monomials(d))}, deg=d, ring=P3)


def _scalar_json(c):
    if isinstance(c, ModP):
        return c.v
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else str(c)


def _scalar_from_json(x, field):
    return field(Fraction(x)) if isinstance(x, str) else field(x)


# pairs -----------------------------------------------------------------

@dataclass(frozen=True)
class SurfacePair:
    f6: WPoly
    g10: WPoly

    def __post_init__(self):
        for name, p, d in (("f6", self.f6, 6), ("g10", self.g10, 10)):
            if not p.is_zero() and p.degree != d:
                raise ValidationError("degree", f"{name} is not homogeneous of degree {d}")
        if self.f6.field != self.g10.field:
            raise ValidationError("field", "f6 and g10 have different coefficient fields")

    @property
    def field(self):
        return self.f6.field

    @classmethod
    def parse(cls, f6: str, g10: str, field=QQ) -> "SurfacePair":
        return cls(parse_poly(f6, field), parse_poly(g10, field))

    @classmethod
    def from_text(cls, text: str, field=QQ) -> "SurfacePair":
        """Read the two-line format ``f6: <poly>`` / ``g10: <poly>``."""
        found = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, body = line.partition(":")
            key = key.strip()
            if not sep or key not in ("f6", "g10"):
                raise ValueError(f"expected a line starting with 'f6:' or 'g10:', got {line!r}")
            if key in found:
                raise ValueError(f"duplicate {key} line")
            found[key] = body
        missing = [k for k in ("f6", "g10") if k not in found]
        if missing:
            raise ValueError(f"missing {', '.join(missing)} line")
        return cls.parse(found["f6"], found["g10"], field)

    def to_text(self) -> str:
        return f"f6: {self.f6}\ng10: {self.g10}\n"

    def reduce(self, field) -> "SurfacePair":
        return SurfacePair(self.f6.reduce(field), self.g10.reduce(field))

    def to_json(self) -> dict:
        return {"f6": str(self.f6), "g10": str(self.g10)}


@dataclass(frozen=True)
class ValidationReport:
    degrees_ok: bool
    z0sq_nonzero: bool
    u0sq_nonzero: bool

    @property
    def ok(self) -> bool:
        return self.degrees_ok and self.z0sq_nonzero and self.u0sq_nonzero

    @property
    def reason(self) -> str | None:
        if not self.degrees_ok:
            return "degrees"
        if not self.z0sq_nonzero:
            return "z0sq_vanishes"
        if not self.u0sq_nonzero:
            return "u0sq_vanishes"
        return None

    def to_json(self) -> dict:
        return {
            "degrees_ok": self.degrees_ok,
            "z0sq_nonzero": self.z0sq_nonzero,
            "u0sq_nonzero": self.u0sq_nonzero,
            "valid": self.ok,
        }


Z0SQ = (0, 0, 0, 2, 0)
U0SQ = (0, 0, 0, 0, 2)


def validate_pair(p: SurfacePair) -> ValidationReport:
    degrees_ok = p.f6.degree == 6 and p.g10.degree == 10
    return ValidationReport(degrees_ok, p.f6.coeff(Z0SQ) != 0, p.g10.coeff(U0SQ) != 0)


def require_valid(p: SurfacePair) -> None:
    rep = validate_pair(p)
    if not rep.ok:
        raise ValidationError(rep.reason, "pair fails validation")


# base locus ------------------------------------------------------------

@dataclass(frozen=True)
class BaseLocusReport:
    empty: bool
    resultant: object
    common_factor: str

    def to_json(self) -> dict:
        return {"empty": self.empty, "resultant": str(self.resultant), "common_factor": self.common_factor}


def base_locus_report(p: SurfacePair) -> BaseLocusReport:
    """Resultant of the restrictions to the line X0 = Z0 = U0 = 0, with the gcd alongside."""
    require_valid(p)
    a = restrict_to_line(p.f6)
    b = restrict_to_line(p.g10)
    res = binary_resultant(a, b)
    if a.is_zero() and b.is_zero():
        common = "0"
    else:
        common = str(binary_gcd(a, b).to_wpoly())
    return BaseLocusReport(res != 0, res, common)


def base_locus_empty(p: SurfacePair) -> bool:
    return base_locus_report(p).empty


# normal form -------------------------------------------------------------

@dataclass(frozen=True)
class NormalFormParams:
    field: object
    alpha0: object
    alpha3: tuple
    beta3: tuple
    beta5: tuple

    def __post_init__(self):
        F = self.field
        object.__setattr__(self, "alpha0", F(self.alpha0))
        for name, d in (("alpha3", ALPHA3_DEGREE), ("beta3", BETA3_DEGREE), ("beta5", BETA5_DEGREE)):
            v = tuple(F(c) for c in getattr(self, name))
            if len(v) != len(ternary_monomials(d)):
                raise ValueError(f"{name} needs {len(ternary_monomials(d))} coefficients, got {len(v)}")
            object.__setattr__(self, name, v)

    @staticmethod
    def sizes() -> dict[str, int]:
        return {
            "alpha0": 1,
            "alpha3": len(ternary_monomials(ALPHA3_DEGREE)),
            "beta3": len(ternary_monomials(BETA3_DEGREE)),
            "beta5": len(ternary_monomials(BETA5_DEGREE)),
        }

    def alpha3_poly(self) -> WPoly:
        return _ternary_to_wpoly(self.alpha3, ALPHA3_DEGREE, self.field)

    def beta3_poly(self) -> WPoly:
        return _ternary_to_wpoly(self.beta3, BETA3_DEGREE, self.field)

    def beta5_poly(self) -> WPoly:
        return _ternary_to_wpoly(self.beta5, BETA5_DEGREE, self.field)

    def expand(self) -> SurfacePair:
        F = self.field
        f6 = (
            WPoly.monomial(Z0SQ, 1, F)
            + WPoly.monomial((1, 0, 0, 0, 1), self.alpha0, F)
            + self.alpha3_poly()
        )
        g10 = (
            WPoly.monomial(U0SQ, 1, F)
            + _ternary_to_wpoly(self.beta3, BETA3_DEGREE, F, extra=(1, 0, 0, 1, 0))
            + self.beta5_poly()
        )
        return SurfacePair(WPoly(F, f6.terms, 6), WPoly(F, g10.terms, 10))

    @classmethod
    def from_pair(cls, p: SurfacePair) -> "NormalFormParams":
        """Read off parameters from a pair already in normal shape; raise otherwise."""
        F = p.field
        f, g = p.f6, p.g10
        a3 = {(2 * i, j, k, 0, 0): (i, j, k) for i, j, k in ternary_monomials(ALPHA3_DEGREE)}
        b3 = {(2 * i + 1, j, k, 1, 0): (i, j, k) for i, j, k in ternary_monomials(BETA3_DEGREE)}
        b5 = {(2 * i, j, k, 0, 0): (i, j, k) for i, j, k in ternary_monomials(BETA5_DEGREE)}
        if f.coeff(Z0SQ) != 1 or g.coeff(U0SQ) != 1:
            raise ValidationError("not_normal", "leading Z0^2 / U0^2 coefficients must be 1")
        for m in f.terms:
            if m not in a3 and m not in (Z0SQ, (1, 0, 0, 0, 1)):
                raise ValidationError("not_normal", f"f6 has a term outside the normal shape: {m}")
        for m in g.terms:
            if m not in b3 and m not in b5 and m != U0SQ:
                raise ValidationError("not_normal", f"g10 has a term outside the normal shape: {m}")
        return cls(
            F,
            f.coeff((1, 0, 0, 0, 1)),
            tuple(f.coeff(m) for m in a3),
            tuple(g.coeff(m) for m in b3),
            tuple(g.coeff(m) for m in b5),
        )

    def to_json(self) -> dict:
        return {
            "alpha0": _scalar_json(self.alpha0),
            "alpha3": [_scalar_json(c) for c in self.alpha3],
            "beta3": [_scalar_json(c) for c in self.beta3],
            "beta5": [_scalar_json(c) for c in self.beta5],
        }

    @classmethod
    def from_json(cls, data: dict, field=QQ) -> "NormalFormParams":
        return cls(
            field,
            _scalar_from_json(data["alpha0"], field),
            tuple(_scalar_from_json(x, field) for x in data["alpha3"]),
            tuple(_scalar_from_json(x, field) for x in data["beta3"]),
            tuple(_scalar_from_json(x, field) for x in data["beta5"]),
        )

    def reduce(self, field) -> "NormalFormParams":
        return NormalFormParams(field, field(self.alpha0), self.alpha3, self.beta3, self.beta5)


@dataclass
class NormalizationCertificate:
    """f6' = u*(f6 o psi) and g10' = v*(g10 o psi) + h*(f6 o psi)."""

    substitution: GradedSubstitution
    u: object
    v: object
    h: WPoly

    def apply(self, p: SurfacePair) -> SurfacePair:
        fs = substitute(p.f6, self.substitution)
        gs = substitute(p.g10, self.substitution)
        return SurfacePair(WPoly(p.field, fs.scale(self.u).terms, 6),
                           WPoly(p.field, (gs.scale(self.v) + self.h * fs).terms, 10))

    def verify(self, original: SurfacePair, normalized: SurfacePair) -> bool:
        return self.apply(original) == normalized and self.substitution.invertible

    def is_identity(self) -> bool:
        return self.substitution.is_identity() and self.u == 1 and self.v == 1 and self.h.is_zero()

    def to_json(self) -> dict:
        return {
            "substitution": {n: str(img) for n, img in zip(P11235.names, self.substitution.images)},
            "u": str(self.u),
            "v": str(self.v),
            "h": str(self.h),
        }


def _var(i, F):
    return WPoly.var(i, F)


def z0u0_elimination(alpha0, beta1: WPoly) -> GradedSubstitution:
    """Z0 -> Z0 + alpha0*beta1*X0/4, U0 -> U0 - beta1*Z0/2 - alpha0*beta1^2*X0/4.

    Removes a Z0*U0*beta1 term from g10 while keeping f6 in normal shape
    (after one more reduction of g10 by f6).
    """
    F = beta1.field
    x = _var(X0, F)
    z = _var(Z0, F)
    u = _var(U0, F)
    a = beta1 * x
    ims = [_var(i, F) for i in range(5)]
    inv = [_var(i, F) for i in range(5)]
    ims[Z0] = z + a.scale(F(alpha0) / 4)
    ims[U0] = u - (beta1 * z).scale(F(1) / 2) - (beta1 * a).scale(F(alpha0) / 4)
    inv[Z0] = z - a.scale(F(alpha0) / 4)
    inv[U0] = u + (beta1 * z).scale(F(1) / 2) + (beta1 * a).scale(F(alpha0) / 8)
    return GradedSubstitution(ims, inv)


def _shift(var: int, delta: WPoly, F) -> GradedSubstitution:
    """var -> var + delta, inverse var -> var - delta (delta free of var)."""
    ims = [_var(i, F) for i in range(5)]
    inv = [_var(i, F) for i in range(5)]
    ims[var] = ims[var] + delta
    inv[var] = inv[var] - delta
    return GradedSubstitution(ims, inv)


def _linear_part(p: WPoly, var: int) -> WPoly:
    """Coefficient of var^1 in p, as a polynomial (terms with exponent exactly one)."""
    terms = {}
    for m, c in p.terms.items():
        if m[var] == 1:
            e = list(m)
            e[var] = 0
            terms[tuple(e)] = c
    return WPoly(p.field, terms)


class _Normalizer:
    def __init__(self, pair: SurfacePair):
        self.F = pair.field
        self.orig = pair
        self.psi = GradedSubstitution.identity(self.F)
        self.u = self.F.one()
        self.v = self.F.one()
        self.h = WPoly.zero(self.F, 4)
        self.f = pair.f6
        self.g = pair.g10

    def change(self, phi: GradedSubstitution):
        self.psi = self.psi.then(phi)
        self.f = substitute(self.f, phi)
        self.g = substitute(self.g, phi)
        self.h = substitute(self.h, phi) if not self.h.is_zero() else self.h

    def scale_f(self, c):
        if c != 1:
            self.u = self.u * c
            self.f = self.f.scale(c)

    def scale_g(self, c):
        if c != 1:
            self.v = self.v * c
            self.h = self.h.scale(c)
            self.g = self.g.scale(c)

    def subtract_multiple(self, q: WPoly):
        """g -= q*f, where f = u*(f6 o psi)."""
        self.g = self.g - q * self.f
        self.h = self.h - q.scale(self.u)

    def complete_square(self):
        self.scale_f(1 / self.f.coeff(Z0SQ))
        lin = _linear_part(self.f, Z0)
        if not lin.is_zero():
            self.change(_shift(Z0, lin.scale(self.F(-1) / 2), self.F))

    def reduce_z0sq(self):
        while True:
            hit = next(((m, c) for m, c in self.g.items() if m[Z0] >= 2), None)
            if hit is None:
                return
            m, c = hit
            e = list(m)
            e[Z0] -= 2
            self.subtract_multiple(WPoly.monomial(e, c, self.F))

    def clear_u0_linear(self):
        self.scale_g(1 / self.g.coeff(U0SQ))
        lin = _linear_part(self.g, U0)
        pure = WPoly(self.F, {m: c for m, c in lin.terms.items() if m[Z0] == 0})
        if not pure.is_zero():
            self.change(_shift(U0, pure.scale(self.F(-1) / 2), self.F))
            lin = _linear_part(self.g, U0)
        beta1 = WPoly(self.F, {(m[0], m[1], m[2], 0, 0): c for m, c in lin.terms.items() if m[Z0] == 1})
        if not beta1.is_zero():
            alpha0 = self.f.coeff((1, 0, 0, 0, 1))
            self.change(z0u0_elimination(alpha0, WPoly(self.F, beta1.terms, 2)))

    def in_shape(self) -> bool:
        try:
            NormalFormParams.from_pair(SurfacePair(self.f, self.g))
            return True
        except ValidationError:
            return False

    def run(self):
        for _ in range(MAX_NORMALIZE_ROUNDS):
            if self.in_shape():
                break
            self.complete_square()
            self.reduce_z0sq()
            self.clear_u0_linear()
            self.complete_square()
            self.reduce_z0sq()
        else:
            raise RuntimeError("normal form reduction did not converge")
        cert = NormalizationCertificate(self.psi, self.u, self.v, WPoly(self.F, self.h.terms, 4))
        out = SurfacePair(WPoly(self.F, self.f.terms, 6), WPoly(self.F, self.g.terms, 10))
        return NormalFormParams.from_pair(out), cert


def normalize(p: SurfacePair) -> tuple[NormalFormParams, NormalizationCertificate]:
    """Reduce a valid pair to normal shape and return the parameters with a checked certificate."""
    require_valid(p)
    if p.field.characteristic == 2:
        raise ValidationError("characteristic", "normal form needs 2 to be invertible")
    params, cert = _Normalizer(p).run()
    if not cert.verify(p, params.expand()):
        raise AssertionError("normalization certificate failed to verify")
    return params, cert


# canonical image -------------------------------------------------------

PULLBACK_DEGREE = 3


def _pullback_images(F):
    x = WPoly.var(X0, F)
    return [x ** 3, x * WPoly.var(Y0, F), x * WPoly.var(Y1, F), WPoly.var(Z0, F)]


def pullback(P: WPoly) -> WPoly:
    """xi0 -> X0^3, eta0 -> X0*Y0, eta1 -> X0*Y1, zeta0 -> Z0."""
    return P.compose(_pullback_images(P.field))


@dataclass
class P3Hypersurface:
    """Surface {poly = 0} in P^3 with pullback(poly) = cofactor_f*f6 + cofactor_g*g10."""

    poly: WPoly
    cofactor_f: WPoly
    cofactor_g: WPoly

    @property
    def degree(self) -> int:
        return self.poly.degree

    def verify(self, pair: SurfacePair) -> bool:
        return pullback(self.poly) == self.cofactor_f * pair.f6 + self.cofactor_g * pair.g10

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "equation": str(self.poly),
            "cofactor_f6": str(self.cofactor_f),
            "cofactor_g10": str(self.cofactor_g),
        }


def canonical_image(nf: NormalFormParams) -> P3Hypersurface:
    F = nf.field
    xi = WPoly.var(0, F, P3)
    zeta = WPoly.var(3, F, P3)
    P = xi * zeta * zeta + _ternary_to_p3(nf.alpha3, ALPHA3_DEGREE, F)
    pair = nf.expand()
    x = WPoly.var(X0, F)
    if nf.alpha0 == 0:
        return P3Hypersurface(P, x ** 3, WPoly.zero(F, 0))
    a0 = nf.alpha0
    sextic = P * P + (
        _ternary_to_p3(nf.beta3, BETA3_DEGREE, F) * xi * xi * zeta
        + _ternary_to_p3(nf.beta5, BETA5_DEGREE, F) * xi
    ).scale(a0 * a0)
    xu = WPoly.monomial((1, 0, 0, 0, 1), 1, F)
    cof_f = x ** 6 * (pair.f6 - xu.scale(2 * a0))
    cof_g = (x ** 8).scale(a0 * a0)
    return P3Hypersurface(sextic, cof_f, cof_g)


def canonical_map_degree(nf: NormalFormParams) -> tuple[int, int]:
    """(degree of the canonical map, degree of its image); the product is at most K^2 = 9."""
    return (1, 6) if nf.alpha0 != 0 else (2, 3)
