"""Slow, obviously-correct reference implementations used only by the tests."""

from fractions import Fraction
from itertools import product


def naive_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def naive_det(rows):
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    return sum(
        (-1) ** j * Fraction(rows[0][j]) * naive_det([r[:j] + r[j + 1:] for r in rows[1:]])
        for j in range(n)
    )


def count_weighted_monomials(d, weights=(1, 2, 2, 3, 5)):
    ranges = [range(d // w + 1) for w in weights]
    return sum(1 for e in product(*ranges) if sum(a * w for a, w in zip(e, weights)) == d)


def _int_terms(poly, p):
    out = []
    for m, c in poly.terms.items():
        c = Fraction(int(c)) if hasattr(c, "p") else Fraction(c)
        out.append((c.numerator * pow(c.denominator, -1, p) % p, m))
    return out


def _ev(terms, pt, p):
    s = 0
    for c, m in terms:
        t = c
        for x, e in zip(pt, m):
            t = t * pow(x, e, p) % p
        s += t
    return s % p


def brute_force_singular_points(pair, p):
    """Every nonzero cone point with f = g = 0 and rank J <= 1, by plain loops."""
    f = _int_terms(pair.f6, p)
    g = _int_terms(pair.g10, p)
    df = [_int_terms(pair.f6.diff(i), p) for i in range(5)]
    dg = [_int_terms(pair.g10.diff(i), p) for i in range(5)]
    out = []
    for pt in product(range(p), repeat=5):
        if not any(pt) or _ev(f, pt, p) or _ev(g, pt, p):
            continue
        a = [_ev(t, pt, p) for t in df]
        b = [_ev(t, pt, p) for t in dg]
        if all((a[i] * b[j] - a[j] * b[i]) % p == 0 for i in range(5) for j in range(i + 1, 5)):
            out.append(pt)
    return out


def brute_force_orbits(pair, p, weights=(1, 2, 2, 3, 5)):
    """Number of weighted G_m-orbits of nonzero cone solutions, by explicit orbit sets."""
    f = _int_terms(pair.f6, p)
    g = _int_terms(pair.g10, p)
    seen = set()
    orbits = 0
    for pt in product(range(p), repeat=5):
        if not any(pt) or pt in seen or _ev(f, pt, p) or _ev(g, pt, p):
            continue
        orbits += 1
        for lam in range(1, p):
            seen.add(tuple(x * pow(lam, w, p) % p for x, w in zip(pt, weights)))
    return orbits
