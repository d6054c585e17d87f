"""Exhaustive F_p scans of the affine cone over {f6 = g10 = 0}.

A nonzero cone point is reported as singular when f6 and g10 vanish there and
the 2x5 Jacobian has rank at most one, i.e. all ten 2x2 minors vanish.  The
scan is vectorized with numpy over the p^4 points of each slice x0 = const;
slices can be farmed out to worker processes and are merged in slice order,
so the output does not depend on the worker count.

Finite-field results are evidence about the surface over Q, never proof.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .fields import GF, ModP, check_scan_prime
from .surface import SurfacePair
from .wring import P11235, WPoly

WEIGHTS = P11235.weights
DEFAULT_PRIMES = (7, 11, 13)


def _terms_mod_p(poly: WPoly, p: int) -> list[tuple[int, tuple[int, ...]]]:
    """(coefficient residue, exponents) pairs; rejects denominators divisible by p."""
    F = GF(p)
    out = []
    for m, c in poly.terms.items():
        if isinstance(c, ModP) and c.p != p:
            raise ValueError(f"polynomial lives over F_{c.p}, not F_{p}")
        try:
            r = F(c).v
        except ZeroDivisionError as exc:
            raise ValueError(f"coefficient {c} is not defined mod {p}") from exc
        if r:
            out.append((r, m))
    return out


@dataclass(frozen=True)
class _Program:
    """Everything a worker needs: residues of f, g and their ten partials."""

    p: int
    f: tuple
    g: tuple
    df: tuple
    dg: tuple

    @classmethod
    def build(cls, pair: SurfacePair, p: int) -> "_Program":
        def t(poly):
            return tuple(_terms_mod_p(poly, p))
        return cls(
            p,
            t(pair.f6),
            t(pair.g10),
            tuple(t(pair.f6.diff(i)) for i in range(5)),
            tuple(t(pair.g10.diff(i)) for i in range(5)),
        )


def _power_table(p: int, max_e: int) -> np.ndarray:
    tab = np.ones((max_e + 1, p), dtype=np.int64)
    base = np.arange(p, dtype=np.int64)
    for e in range(1, max_e + 1):
        tab[e] = tab[e - 1] * base % p
    return tab


def _eval(terms, cols, tab, p, n) -> np.ndarray:
    acc = np.zeros(n, dtype=np.int64)
    for c, m in terms:
        t = np.full(n, c, dtype=np.int64)
        for col, e in zip(cols, m):
            if e:
                t = t * tab[e][col] % p
        acc = (acc + t) % p
    return acc


def _slice_grid(p: int, x0: int) -> list[np.ndarray]:
    """Columns (x0, y0, y1, z0, u0) of the slice, in lexicographic order."""
    rest = np.indices((p, p, p, p), dtype=np.int64).reshape(4, -1)
    return [np.full(rest.shape[1], x0, dtype=np.int64)] + [rest[i] for i in range(4)]


def _scan_slice(prog: _Program, x0: int) -> list[tuple[int, ...]]:
    p = prog.p
    cols = _slice_grid(p, x0)
    tab = _power_table(p, 10)
    n = cols[0].shape[0]
    on = (_eval(prog.f, cols, tab, p, n) == 0) & (_eval(prog.g, cols, tab, p, n) == 0)
    if x0 == 0:
        on[0] = False  # the cone vertex
    idx = np.nonzero(on)[0]
    if idx.size == 0:
        return []
    sub = [c[idx] for c in cols]
    m = idx.size
    df = [_eval(t, sub, tab, p, m) for t in prog.df]
    dg = [_eval(t, sub, tab, p, m) for t in prog.dg]
    sing = np.ones(m, dtype=bool)
    for i, j in combinations(range(5), 2):
        sing &= (df[i] * dg[j] - df[j] * dg[i]) % p == 0
    pts = np.stack(sub, axis=1)[sing]
    return [tuple(int(v) for v in row) for row in pts]


def _scan_slice_star(args):
    return _scan_slice(*args)


@dataclass
class SingularityReport:
    prime: int
    scanned: int
    singular_points: list[tuple[int, ...]] = field(default_factory=list)
    elapsed_ms: float | None = None

    @property
    def count(self) -> int:
        return len(self.singular_points)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "prime": self.prime,
            "scanned": self.scanned,
            "singular_points": [list(pt) for pt in self.singular_points],
        }
        if timing and self.elapsed_ms is not None:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def enumerate_cone_singularities(pair: SurfacePair, prime: int, jobs: int = 1) -> SingularityReport:
    """All nonzero cone points over F_prime where f6 = g10 = 0 and rank J <= 1, sorted."""
    check_scan_prime(prime)
    start = time.perf_counter()
    prog = _Program.build(pair, prime)
    tasks = [(prog, x0) for x0 in range(prime)]
    if jobs <= 1:
        chunks = [_scan_slice(*t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_scan_slice_star, tasks))
    points = sorted(pt for chunk in chunks for pt in chunk)
    elapsed = (time.perf_counter() - start) * 1000.0
    return SingularityReport(prime, prime ** 5 - 1, points, elapsed)


def is_singular_point(pair: SurfacePair, point, prime: int) -> bool:
    """Plain re-evaluation of the singularity conditions at one point, without numpy."""
    F = GF(prime)
    f, g = pair.f6.reduce(F), pair.g10.reduce(F)
    pt = [F(x) for x in point]
    if all(x == 0 for x in pt):
        return False
    if f.evaluate(pt) != 0 or g.evaluate(pt) != 0:
        return False
    jf = [f.diff(i).evaluate(pt) for i in range(5)]
    jg = [g.diff(i).evaluate(pt) for i in range(5)]
    return all(jf[i] * jg[j] - jf[j] * jg[i] == 0 for i, j in combinations(range(5), 2))


# point counts ------------------------------------------------------------

def _cone_solutions(prog: _Program, x0_values) -> np.ndarray:
    p = prog.p
    tab = _power_table(p, 10)
    rows = []
    for x0 in x0_values:
        cols = _slice_grid(p, x0)
        n = cols[0].shape[0]
        on = (_eval(prog.f, cols, tab, p, n) == 0) & (_eval(prog.g, cols, tab, p, n) == 0)
        if x0 == 0:
            on[0] = False
        idx = np.nonzero(on)[0]
        rows.append(np.stack([c[idx] for c in cols], axis=1))
    return np.concatenate(rows) if rows else np.zeros((0, 5), dtype=np.int64)


def _orbit_codes(points: np.ndarray, p: int) -> np.ndarray:
    """Smallest base-p code of each point's G_m-orbit under lambda.(x_i) = (lambda^w_i x_i)."""
    place = np.array([p ** (4 - i) for i in range(5)], dtype=np.int64)
    best = None
    for lam in range(1, p):
        scale = np.array([pow(lam, w, p) for w in WEIGHTS], dtype=np.int64)
        code = (points * scale % p) @ place
        best = code if best is None else np.minimum(best, code)
    return best


@dataclass(frozen=True)
class PointCount:
    prime: int
    points: int
    cone_points: int
    affine_patch: int
    boundary: int

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "points": self.points,
            "cone_points": self.cone_points,
            "x0_nonzero_patch": self.affine_patch,
            "x0_zero_stratum": self.boundary,
        }


def count_points(pair: SurfacePair, prime: int) -> PointCount:
    """F_p-points of {f6 = g10 = 0} in P(1,2,2,3,5), as weighted G_m-orbits on the punctured cone."""
    check_scan_prime(prime)
    prog = _Program.build(pair, prime)
    sols = _cone_solutions(prog, range(prime))
    orbits = int(np.unique(_orbit_codes(sols, prime)).size) if len(sols) else 0
    patch = int(len(_cone_solutions(prog, [1])))
    boundary_sols = sols[sols[:, 0] == 0]
    boundary = int(np.unique(_orbit_codes(boundary_sols, prime)).size) if len(boundary_sols) else 0
    return PointCount(prime, orbits, int(len(sols)), patch, boundary)


# several primes ----------------------------------------------------------

@dataclass(frozen=True)
class MultiPrimeSummary:
    counts: dict
    likely_singular_over_q: bool

    def to_json(self) -> dict:
        return {
            "singular_counts": {str(p): n for p, n in sorted(self.counts.items())},
            "likely_singular_over_q": self.likely_singular_over_q,
            "note": "heuristic: singular at every scanned prime",
        }


def multi_prime_scan(pair: SurfacePair, primes=DEFAULT_PRIMES, jobs: int = 1) -> MultiPrimeSummary:
    counts = {p: enumerate_cone_singularities(pair, p, jobs).count for p in primes}
    return MultiPrimeSummary(counts, all(n > 0 for n in counts.values()))
