"""Hilbert series of a (6,10) complete intersection in P(1,2,2,3,5).

Three independent routes to dim R_n:

* the closed-form series (1-t^6)(1-t^10) / prod_i (1-t^w_i),
* Riemann-Roch, chi(nL) = chi(O_S) + n(n-3)/2 for L^2 = 1, K = 3L, chi = 5,
* row reduction of the degree-n slice of the ideal (f6, g10).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .wring import P11235, WPoly, monomial_basis

WEIGHTS = P11235.weights
RELATION_DEGREES = (6, 10)
CHI = 5
ORACLE_MAX_DEGREE = 20


def _series_mul(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def _inverse_one_minus(w: int, n: int) -> list[int]:
    return [1 if k % w == 0 else 0 for k in range(n + 1)]


def weight_series(n: int, weights=WEIGHTS) -> list[int]:
    """Coefficients of 1 / prod (1 - t^w) through t^n."""
    out = [1] + [0] * n
    for w in weights:
        out = _series_mul(out, _inverse_one_minus(w, n), n)
    return out


@dataclass(frozen=True)
class HilbertData:
    coefficients: tuple[int, ...]
    weights: tuple[int, ...] = WEIGHTS
    relation_degrees: tuple[int, ...] = RELATION_DEGREES

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        return self.coefficients[n]

    def gorenstein_symmetric(self) -> bool:
        """c_n + c_(3-n) = chi(nL) on the whole stored range."""
        return all(self[n] + self[3 - n] == chi_riemann_roch(n) for n in range(len(self.coefficients)))


def ci_hilbert_series(N: int, weights=WEIGHTS, relations=RELATION_DEGREES) -> HilbertData:
    if N < 0:
        raise ValueError("N must be non-negative")
    num = [1] + [0] * N
    for d in relations:
        factor = [0] * (N + 1)
        factor[0] = 1
        if d <= N:
            factor[d] = -1
        num = _series_mul(num, factor, N)
    coeffs = _series_mul(num, weight_series(N, weights), N)
    return HilbertData(tuple(coeffs), tuple(weights), tuple(relations))


def chi_riemann_roch(n: int) -> int:
    """chi(O_S(nL)) = 5 + n(n-3)/2; n(n-3) is always even."""
    return CHI + n * (n - 3) // 2


def pencil_h0(n: int) -> int:
    """h^0(nL) in the hypothetical case where |2L| is composite with a pencil.

    Uses h^0(L) = 2, h^0(2L) = 3, h^0(3L) = 4 and Riemann-Roch for n >= 4.
    """
    if n < 0:
        return 0
    if n <= 3:
        return n + 1
    return chi_riemann_roch(n)


def _slice_rows(pair_f6: WPoly, pair_g10: WPoly, n: int):
    basis = monomial_basis(n)
    col = {m: i for i, m in enumerate(basis)}
    zero = pair_f6.field.zero()
    rows = []
    for rel in (pair_f6, pair_g10):
        for m in monomial_basis(n - rel.degree):
            row = [zero] * len(basis)
            for e, c in rel.terms.items():
                row[col[tuple(a + b for a, b in zip(m, e))]] = c
            rows.append(row)
    return basis, rows


def quotient_dim_oracle(pair, n: int, bound: int = ORACLE_MAX_DEGREE) -> int:
    """dim of the degree-n part of k[X0,Y0,Y1,Z0,U0] / (f6, g10) by exact elimination."""
    f6, g10 = pair.f6, pair.g10
    if f6.degree != 6 or g10.degree != 10:
        raise ValueError("quotient oracle needs homogeneous f6 of degree 6 and g10 of degree 10")
    if n > bound:
        raise ValueError(f"degree {n} above the oracle bound {bound}")
    if n < 0:
        return 0
    basis, rows = _slice_rows(f6, g10, n)
    if not rows:
        return len(basis)
    return len(basis) - linalg.rank(rows, f6.field)


def regular_sequence_check(pair, max_degree: int = 12) -> bool:
    """True when the oracle matches the complete-intersection series up to ``max_degree``."""
    series = ci_hilbert_series(max_degree)
    return all(quotient_dim_oracle(pair, n) == series[n] for n in range(max_degree + 1))
