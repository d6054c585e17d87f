"""Exact rank and determinant over Q and F_p.

Over Q each row is scaled to integers and eliminated fraction-free (Bareiss),
so no rational arithmetic happens inside the loop.  Over F_p we eliminate on
plain residues.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .fields import ModP, QQ, PrimeField


def _integer_rows(rows):
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _residue_rows(rows, p):
    return [[(x.v if isinstance(x, ModP) else int(x)) % p for x in row] for row in rows]


def _bareiss_rank(m: list[list[int]]) -> int:
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        for r in range(rank + 1, nrows):
            rr = m[r]
            f = rr[c]
            top = m[rank]
            if f == 0:
                for j in range(c + 1, ncols):
                    rr[j] = rr[j] * pv // prev
            else:
                for j in range(c + 1, ncols):
                    rr[j] = (rr[j] * pv - f * top[j]) // prev
            rr[c] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def _modp_rank(m: list[list[int]], p: int) -> int:
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        top = [x * inv % p for x in m[rank]]
        m[rank] = top
        for r in range(rank + 1, nrows):
            f = m[r][c]
            if f:
                rr = m[r]
                for j in range(c, ncols):
                    rr[j] = (rr[j] - f * top[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(rows, field=QQ) -> int:
    """Rank of a matrix given as a list of rows of field elements."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    if isinstance(field, PrimeField):
        return _modp_rank(_residue_rows(rows, field.p), field.p)
    return _bareiss_rank(_integer_rows(rows))


def det(rows, field=QQ):
    """Determinant of a square matrix, returned as a field element."""
    n = len(rows)
    if n == 0:
        return field.one()
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if isinstance(field, PrimeField):
        p = field.p
        m = _residue_rows(rows, p)
        d = 1
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                return field.zero()
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = -d
            d = d * m[c][c] % p
            inv = pow(m[c][c], -1, p)
            for r in range(c + 1, n):
                f = m[r][c] * inv % p
                if f:
                    for j in range(c, n):
                        m[r][j] = (m[r][j] - f * m[c][j]) % p
        return field(d)
    scale = Fraction(1)
    m = []
    for row in rows:
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        scale /= den
        m.append([int(Fraction(x) * den) for x in row])
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        pv = m[c][c]
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                m[r][j] = (m[r][j] * pv - m[r][c] * m[c][j]) // prev
            m[r][c] = 0
        prev = pv
    return Fraction(sign * m[n - 1][n - 1]) * scale
