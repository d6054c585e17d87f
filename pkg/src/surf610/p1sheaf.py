"""Vector bundles on P^1 and the genus-3 pencil rule-out.

A bundle is recorded by its splitting type.  A morphism between two split
bundles is a matrix of binary forms, and the splitting type of a locally free
cokernel is recovered from the dimensions h^0(Cok(-k)), which are computed by
exact linear algebra on monomial bases.

H^1 is handled through Serre duality: H^1(O(d)) is dual to H^0(O(-d-2)), and
multiplication by a form on H^1 is the transpose of multiplication by the same
form on the dual H^0.  Only ranks are used, so the sign and the choice of
dual basis do not matter.

The second half builds the map gamma: O(4) -> O(4)+O(5)+O(6)^2+O(7)+O(8)
from the normalized 3x3 block A' of the multiplication map S^2(V_1) -> V_2
and classifies it into the six terminal cases of the pencil analysis.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from . import linalg
from .fields import QQ, PrimeField
from .hilbert import pencil_h0
from .wring import BinaryForm, gcd_many

# Hom(L4', Cok gamma) with L4' = det(V_1) + O(tau) = O(7 + 3).
HOM_THRESHOLD = 10
TAU_DEGREE = 3

GAMMA_SOURCE = (4,)
GAMMA_TARGET = (4, 5, 6, 6, 7, 8)
GAMMA_TARGET_LABELS = ("S0^2", "S0*S1", "S1^2", "S0*S2", "S1*S2", "S2^2")

CASES = ("1", "2-1-1", "2-1-2", "2-2-1", "2-2-2-1", "2-2-2-2")

# Splittings the case analysis allows for Cok gamma.
EXPECTED_SPLITTINGS = {
    "1": {(5, 6, 6, 7, 8)},
    "2-1-1": {(4, 6, 7, 7, 8)},
    "2-1-2": {(4, 6, 6, 8, 8), (4, 6, 6, 7, 9)},
    "2-2-1": {(4, 5, 7, 7, 9), (4, 5, 7, 8, 8)},
    "2-2-2-1": {(4, 5, 7, 7, 9), (4, 5, 7, 8, 8)},
    "2-2-2-2": {(4, 5, 6, 8, 9)},
}


class TorsionDetected(ValueError):
    """Dimension profile is not that of a vector bundle."""


class NonInjectiveMap(ValueError):
    pass


@dataclass(frozen=True)
class SplittingType:
    """Multiset {a_1 <= ... <= a_r} standing for O(a_1) + ... + O(a_r)."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(int(a) for a in self.degrees)))

    @classmethod
    def of(cls, *degrees: int) -> "SplittingType":
        return cls(tuple(degrees))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    def h0(self, k: int) -> int:
        """h^0(E(-k))."""
        return sum(max(0, a - k + 1) for a in self.degrees)

    def h1(self, k: int) -> int:
        """h^1(E(-k))."""
        return sum(max(0, k - a - 1) for a in self.degrees)

    def profile(self, ks: Iterable[int]) -> dict[int, int]:
        return {k: self.h0(k) for k in ks}

    def max_degree(self) -> int | None:
        return self.degrees[-1] if self.degrees else None

    def __str__(self):
        if not self.degrees:
            return "0"
        return " + ".join(f"O({a})" if n == 1 else f"O({a})^{n}" for a, n in sorted(Counter(self.degrees).items()))


def _mult_matrix(form: BinaryForm, src_deg: int) -> list[list]:
    """Matrix of H^0(O(src_deg)) -> H^0(O(src_deg + deg form)) on monomial bases."""
    e = form.degree
    zero = form.field.zero()
    rows = [[zero] * (src_deg + 1) for _ in range(src_deg + e + 1)]
    for i in range(src_deg + 1):
        for l, c in enumerate(form.coeffs):
            if c != 0:
                rows[l + i][i] = c
    return rows


def _block_matrix(entries, row_degs, col_degs, zero):
    """Assemble multiplication blocks; entries[r][c] is a form or None."""
    nrows = sum(max(0, d + 1) for d in row_degs)
    ncols = sum(max(0, d + 1) for d in col_degs)
    mat = [[zero] * ncols for _ in range(nrows)]
    r0 = 0
    for r, rd in enumerate(row_degs):
        if rd < 0:
            continue
        c0 = 0
        for c, cd in enumerate(col_degs):
            if cd < 0:
                continue
            form = entries[r][c]
            if form is not None and not form.is_zero():
                blk = _mult_matrix(form, cd)
                for i, row in enumerate(blk):
                    mat[r0 + i][c0:c0 + cd + 1] = [
                        x if x != 0 else mat[r0 + i][c0 + j] for j, x in enumerate(row)
                    ]
            c0 += cd + 1
        r0 += rd + 1
    return mat


@dataclass
class BundleMap:
    """Morphism O(a_1)+...+O(a_s) -> O(b_1)+...+O(b_t).

    ``matrix[j][i]`` is a binary form of degree b_j - a_i, or None when that
    degree is negative (the entry is forced to be zero).
    """

    source: tuple[int, ...]
    target: tuple[int, ...]
    matrix: list[list[BinaryForm | None]]
    field: object = QQ

    def __post_init__(self):
        self.source = tuple(self.source)
        self.target = tuple(self.target)
        if len(self.matrix) != len(self.target) or any(len(r) != len(self.source) for r in self.matrix):
            raise ValueError("matrix shape does not match source/target")
        fixed = []
        for j, b in enumerate(self.target):
            row = []
            for i, a in enumerate(self.source):
                ent = self.matrix[j][i]
                d = b - a
                if ent is None or (not isinstance(ent, BinaryForm) and ent == 0):
                    ent = BinaryForm.zero(d, self.field) if d >= 0 else None
                elif d < 0:
                    if not ent.is_zero():
                        raise ValueError(f"entry ({j},{i}) must vanish: O({a}) -> O({b})")
                    ent = None
                elif ent.degree != d:
                    raise ValueError(f"entry ({j},{i}) has degree {ent.degree}, expected {d}")
                row.append(ent)
            fixed.append(row)
        self.matrix = fixed

    @property
    def source_type(self) -> SplittingType:
        return SplittingType(self.source)

    @property
    def target_type(self) -> SplittingType:
        return SplittingType(self.target)

    def h0_map(self, k: int) -> list[list]:
        """H^0(E(-k)) -> H^0(F(-k))."""
        return _block_matrix(
            self.matrix, [b - k for b in self.target], [a - k for a in self.source], self.field.zero()
        )

    def h1_dual_map(self, k: int) -> list[list]:
        """H^0(F^v(k-2)) -> H^0(E^v(k-2)); its transpose is H^1(E(-k)) -> H^1(F(-k))."""
        transposed = [[self.matrix[j][i] for j in range(len(self.target))] for i in range(len(self.source))]
        return _block_matrix(
            transposed, [k - 2 - a for a in self.source], [k - 2 - b for b in self.target], self.field.zero()
        )

    def generic_rank(self) -> int:
        """Rank over the function field, by evaluation at enough points of P^1."""
        bound = sum(
            max((e.degree for e in col if e is not None and not e.is_zero()), default=0)
            for col in zip(*self.matrix)
        ) if self.matrix else 0
        pts = []
        if isinstance(self.field, PrimeField):
            pts = [(t, 1) for t in range(self.field.p)] + [(1, 0)]
        else:
            pts = [(t, 1) for t in range(bound + 1)]
        full = min(len(self.source), len(self.target))
        best = 0
        for t0, t1 in pts:
            ev = [
                [self.field.zero() if e is None else e.evaluate(self.field(t0), self.field(t1)) for e in row]
                for row in self.matrix
            ]
            best = max(best, linalg.rank(ev, self.field))
            if best == full:
                return best
        if isinstance(self.field, PrimeField) and self.field.p + 1 <= bound:
            raise ValueError(f"F_{self.field.p} has too few points to certify the generic rank")
        return best

    def is_injective(self) -> bool:
        return self.generic_rank() == len(self.source)


def twisted_section_dims(m: BundleMap, ks: Iterable[int]) -> dict[int, int]:
    """d_k = h^0(Cok(m)(-k)) for each k, from the long exact cohomology sequence."""
    if not m.is_injective():
        raise NonInjectiveMap("map is not injective as a map of sheaves")
    src, tgt = m.source_type, m.target_type
    out = {}
    for k in ks:
        r0 = linalg.rank(m.h0_map(k), m.field) if src.h0(k) and tgt.h0(k) else 0
        coker = tgt.h0(k) - r0
        r1 = linalg.rank(m.h1_dual_map(k), m.field) if src.h1(k) and tgt.h1(k) else 0
        ker = src.h1(k) - r1
        out[k] = coker + ker
    return out


def splitting_from_dims(profile: Mapping[int, int], rank: int, degree: int) -> SplittingType:
    """Recover {b_i} from d_k = h^0(E(-k)) on a contiguous range of k.

    #{i : b_i >= k} = d_k - d_(k+1).  The range must end where d vanishes; at
    most one summand may lie below its start, and that one is fixed by the degree.
    """
    ks = sorted(profile)
    if not ks:
        raise ValueError("empty profile")
    if ks != list(range(ks[0], ks[-1] + 1)):
        raise ValueError("profile must cover a contiguous range of twists")
    lo, hi = ks[0], ks[-1]
    d = dict(profile)
    if d[hi] != 0:
        raise TorsionDetected(f"h^0(Cok(-{hi})) = {d[hi]} != 0 at the top of the scan range")
    at_least = {k: d[k] - d[k + 1] for k in range(lo, hi)}
    at_least[hi] = 0
    prev = None
    for k in range(lo, hi + 1):
        n = at_least[k]
        if n < 0 or (prev is not None and n > prev):
            raise TorsionDetected(f"inconsistent profile near k={k}: {dict(profile)}")
        prev = n
    found = []
    for k in range(lo, hi):
        found += [k] * (at_least[k] - at_least[k + 1])
    below = rank - at_least[lo]
    if below < 0:
        raise TorsionDetected(f"profile shows {at_least[lo]} summands but rank is {rank}")
    if below == 0:
        if sum(found) != degree:
            raise TorsionDetected(f"degree mismatch: summands add to {sum(found)}, expected {degree}")
    elif below == 1:
        b = degree - sum(found)
        if b >= lo:
            raise TorsionDetected(f"remaining summand O({b}) should lie below k={lo}")
        found.append(b)
    else:
        raise ValueError(f"{below} summands lie below the scanned range; extend it downward")
    st = SplittingType(tuple(found))
    if st.profile(ks) != {k: d[k] for k in ks}:
        raise TorsionDetected("recovered splitting does not reproduce the profile")
    return st


def cokernel_splitting(m: BundleMap) -> tuple[SplittingType, dict[int, int]]:
    """Splitting type of Cok(m) and the profile it was read from."""
    rank = len(m.target) - len(m.source)
    degree = sum(m.target) - sum(m.source)
    if rank < 0:
        raise NonInjectiveMap("source rank exceeds target rank")
    if rank == 0:
        if not m.is_injective():
            raise NonInjectiveMap("map is not injective as a map of sheaves")
        if degree != 0:
            raise TorsionDetected("cokernel of an equal-rank map with nonzero degree is torsion")
        return SplittingType(()), {}
    kmin = min(m.target)
    kmax = degree - (rank - 1) * kmin
    ks = range(kmin, kmax + 2)
    profile = twisted_section_dims(m, ks)
    return splitting_from_dims(profile, rank, degree), profile


# direct images of the relative canonical sheaf -------------------------

def relative_canonical_rank(n: int) -> int:
    return 3 if n == 1 else 4 * n - 2


def relative_canonical_degree(n: int) -> int:
    return 7 + 12 * n * (n - 1)


def relative_canonical_profile(n: int) -> dict[int, int]:
    """h^0(V_n(-k)) = h^0(S, (5n-k)L) for k >= n, in the pencil case."""
    return {k: pencil_h0(5 * n - k) for k in range(n, 5 * n + 2)}


def relative_canonical_splitting(n: int) -> SplittingType:
    return splitting_from_dims(relative_canonical_profile(n), relative_canonical_rank(n), relative_canonical_degree(n))


# the gamma map -----------------------------------------------------------

@dataclass(frozen=True)
class GammaData:
    """Normalized block A' = [[a0, 1, a2], [alpha0, 0, alpha2], [beta0, 0, beta2]].

    Columns correspond to X0^2, X0*X1, X1^2 and rows to S0, S1, S2.
    """

    a0: object
    a2: object
    alpha0: BinaryForm
    alpha2: BinaryForm
    beta0: BinaryForm
    beta2: BinaryForm

    def __post_init__(self):
        for name, d in (("alpha0", 1), ("alpha2", 1), ("beta0", 2), ("beta2", 2)):
            if getattr(self, name).degree != d:
                raise ValueError(f"{name} must have degree {d}")

    @property
    def field(self):
        return self.alpha0.field

    def a_prime(self) -> list[list[BinaryForm]]:
        F = self.field
        one = BinaryForm([1], F)
        return [
            [BinaryForm([self.a0], F), one, BinaryForm([self.a2], F)],
            [self.alpha0, BinaryForm.zero(1, F), self.alpha2],
            [self.beta0, BinaryForm.zero(2, F), self.beta2],
        ]

    def normalized(self) -> "GammaData":
        """Rescale X0, X1 so that a0 = a2 = 1; only meaningful when a0*a2 = 1."""
        if self.a0 * self.a2 != 1:
            raise ValueError("normalization to a0 = a2 = 1 needs a0*a2 = 1")
        return GammaData(
            self.field.one(), self.field.one(),
            self.alpha0 * self.a2, self.alpha2 * self.a0,
            self.beta0 * self.a2, self.beta2 * self.a0,
        )

    def rescaled(self, s) -> "GammaData":
        """Effect of X0 -> s*X0, X1 -> X1/s (gamma is unchanged)."""
        s2 = self.field(s) ** 2
        return GammaData(
            self.a0 * s2, self.a2 / s2,
            self.alpha0 * s2, self.alpha2 * (1 / s2),
            self.beta0 * s2, self.beta2 * (1 / s2),
        )


def gamma_components(g: GammaData) -> BundleMap:
    """gamma: O(4) -> S^2(V_2)^(L), the image of X0^2.X1^2 - (X0.X1)^2 under S^2(A')."""
    F = g.field
    comps = [
        BinaryForm([g.a0 * g.a2 - 1], F),
        g.alpha2 * g.a0 + g.alpha0 * g.a2,
        g.alpha0 * g.alpha2,
        g.beta2 * g.a0 + g.beta0 * g.a2,
        g.alpha0 * g.beta2 + g.alpha2 * g.beta0,
        g.beta0 * g.beta2,
    ]
    return BundleMap(GAMMA_SOURCE, GAMMA_TARGET, [[c] for c in comps], F)


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


@dataclass(frozen=True)
class Sigma2Verdict:
    valid: bool
    reason: str | None = None

    def __bool__(self):
        return self.valid


def validate_sigma2(g: GammaData) -> Sigma2Verdict:
    """A' must have rank 3 generically and rank >= 2 at every point of P^1.

    The cokernel of S^2(V_1) -> V_2 is O_tau, so the rank of sigma_2 can drop by
    at most one at any point.
    """
    A = g.a_prime()
    if _det3(A).is_zero():
        return Sigma2Verdict(False, "det A' vanishes identically (generic rank < 3)")
    minors = []
    for r1, r2 in ((0, 1), (0, 2), (1, 2)):
        for c1, c2 in ((0, 1), (0, 2), (1, 2)):
            minors.append(A[r1][c1] * A[r2][c2] - A[r1][c2] * A[r2][c1])
    common = gcd_many(minors)
    if common is None:
        return Sigma2Verdict(False, "all 2x2 minors of A' vanish")
    if common.degree > 0:
        return Sigma2Verdict(False, f"rank of A' drops by 2 where {common} = 0")
    return Sigma2Verdict(True)


@dataclass(frozen=True)
class CaseLabel:
    name: str
    a: object = None
    lam: BinaryForm | None = None
    c: object = None

    def to_json(self) -> dict:
        out = {"name": self.name}
        if self.a is not None:
            out["a"] = str(self.a)
        if self.lam is not None:
            out["lambda"] = [str(x) for x in self.lam.coeffs]
        if self.c is not None:
            out["c"] = str(self.c)
        return out


def _ratio(num: BinaryForm, den: BinaryForm):
    """Scalar r with num = r*den, or None."""
    i = next(i for i, x in enumerate(den.coeffs) if x != 0)
    r = num.coeffs[i] / den.coeffs[i]
    return r if den * r == num else None


def _coprime(*forms: BinaryForm) -> bool:
    common = gcd_many(forms)
    return common is not None and common.degree == 0


def classify_case(g: GammaData) -> CaseLabel:
    """Place g in the case tree: a0*a2 != 1, then alpha0+alpha2, then common zeros."""
    if g.a0 * g.a2 != 1:
        return CaseLabel("1")
    n = g.normalized()
    s = n.alpha0 + n.alpha2
    prod = n.alpha0 * n.alpha2
    t = n.beta0 + n.beta2
    if not s.is_zero():
        if _coprime(s, prod, t):
            return CaseLabel("2-1-1")
        pivot, other = (n.alpha0, n.alpha2) if not n.alpha0.is_zero() else (n.alpha2, n.alpha0)
        a = _ratio(other, pivot)
        lam = t.exact_div(pivot)
        return CaseLabel("2-1-2", a=a, lam=lam)
    if _coprime(prod, t):
        return CaseLabel("2-2-1")
    lam = t.exact_div(n.alpha0)
    if _coprime(n.alpha0, lam):
        return CaseLabel("2-2-2-1", lam=lam)
    return CaseLabel("2-2-2-2", lam=lam, c=_ratio(lam, n.alpha0))


@dataclass(frozen=True)
class PencilVerdict:
    case: CaseLabel
    cok_gamma: SplittingType
    profile: dict
    ruled_out: bool

    def to_json(self) -> dict:
        return {
            "case": self.case.name,
            "case_parameters": self.case.to_json(),
            "cok_gamma": list(self.cok_gamma.degrees),
            "max_summand": self.cok_gamma.max_degree(),
            "hom_threshold": HOM_THRESHOLD,
            "ruled_out": self.ruled_out,
        }


def pencil_case_verdict(g: GammaData) -> PencilVerdict:
    """Cok gamma and whether Hom(O(10), Cok gamma) = 0, which rules the case out."""
    check = validate_sigma2(g)
    if not check:
        raise ValueError(f"invalid sigma_2 data: {check.reason}")
    case = classify_case(g)
    cok, profile = cokernel_splitting(gamma_components(g))
    return PencilVerdict(case, cok, profile, ruled_out=cok.max_degree() < HOM_THRESHOLD)


# seeded samplers, one per terminal case --------------------------------

def _rand_form(rng: random.Random, d: int, field, lo=-4, hi=4) -> BinaryForm:
    return BinaryForm([rng.randint(lo, hi) for _ in range(d + 1)], field)


def _rand_nonzero(rng, field, lo=-4, hi=4):
    while True:
        x = rng.randint(lo, hi)
        if field(x) != 0:
            return field(x)


def _nonzero_form(rng, d, field):
    while True:
        f = _rand_form(rng, d, field)
        if not f.is_zero():
            return f


def _draw_case(case: str, rng: random.Random, field) -> GammaData:
    one = field.one()
    if case == "1":
        while True:
            a0, a2 = field(rng.randint(-4, 4)), field(rng.randint(-4, 4))
            if a0 * a2 != 1:
                break
        return GammaData(a0, a2, _rand_form(rng, 1, field), _rand_form(rng, 1, field),
                         _rand_form(rng, 2, field), _rand_form(rng, 2, field))
    alpha0 = _nonzero_form(rng, 1, field)
    beta0 = _rand_form(rng, 2, field)
    if case == "2-1-1":
        alpha2 = _rand_form(rng, 1, field)
        beta2 = _rand_form(rng, 2, field)
    elif case == "2-1-2":
        while True:
            a = field(rng.randint(-4, 4))
            if a != -1:
                break
        alpha2 = alpha0 * a
        beta2 = _rand_form(rng, 1, field) * alpha0 - beta0
    elif case == "2-2-1":
        alpha2 = -alpha0
        beta2 = _rand_form(rng, 2, field)
    elif case == "2-2-2-1":
        alpha2 = -alpha0
        beta2 = _nonzero_form(rng, 1, field) * alpha0 - beta0
    elif case == "2-2-2-2":
        alpha2 = -alpha0
        c = _rand_nonzero(rng, field)
        beta2 = alpha0 * alpha0 * c - beta0
    else:
        raise ValueError(f"unknown case {case!r}")
    g = GammaData(one, one, alpha0, alpha2, beta0, beta2)
    return g.rescaled(_rand_nonzero(rng, field, 1, 3))


def random_gamma(case: str, rng: random.Random, field=QQ, max_tries: int = 1000) -> GammaData:
    """Seeded sample of valid sigma_2 data lying in the requested terminal case."""
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES}")
    for _ in range(max_tries):
        g = _draw_case(case, rng, field)
        if validate_sigma2(g) and classify_case(g).name == case:
            return g
    raise RuntimeError(f"no valid sample for case {case} after {max_tries} tries")
