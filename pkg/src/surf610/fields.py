"""Exact coefficient fields: the rationals and prime fields F_p.

Rational elements are plain :class:`fractions.Fraction` values.  Prime-field
elements are :class:`ModP` instances that carry their modulus, so ordinary
Python arithmetic (``a * b + c``) works the same way in both fields.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class FieldMismatch(ValueError):
    """Operands live in different coefficient fields."""


class ModP:
    """Residue class modulo a prime ``p``, stored reduced to ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            den = other.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator {other.denominator} not invertible mod {self.p}")
            return other.numerator * pow(den, -1, self.p) % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o, self.p) / self

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return ModP(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return ModP(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, (int, Fraction)):
            try:
                return self.v == self._coerce(other)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class RationalField:
    """The field Q; elements are ``Fraction``."""

    characteristic = 0
    name = "QQ"

    def __call__(self, x) -> Fraction:
        if isinstance(x, ModP):
            raise FieldMismatch("cannot lift an F_p element to Q")
        return Fraction(x)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """The field F_p for a prime ``p``."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, x) -> ModP:
        if isinstance(x, ModP):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} element given to F_{self.p}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} not invertible mod {self.p}")
            return ModP(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return ModP(int(x), self.p)

    def zero(self):
        return ModP(0, self.p)

    def one(self):
        return ModP(1, self.p)

    def contains(self, x) -> bool:
        return isinstance(x, ModP) and x.p == self.p

    def elements(self):
        return [ModP(i, self.p) for i in range(self.p)]

    def cube_root_of_unity(self) -> ModP:
        """Smallest residue of multiplicative order 3; requires ``p = 1 mod 3``."""
        if self.p % 3 != 1:
            raise ValueError(f"F_{self.p} has no primitive cube root of unity")
        for w in range(2, self.p):
            if pow(w, 3, self.p) == 1:
                return ModP(w, self.p)
        raise AssertionError("unreachable")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_of(x):
    """Best-effort field of a bare scalar."""
    if isinstance(x, ModP):
        return GF(x.p)
    return QQ


def check_scan_prime(p: int) -> None:
    """Primes usable for weighted (1,2,2,3,5) work: odd, and not 2, 3 or 5."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p in (2, 3, 5):
        raise ValueError(f"prime {p} divides a weight or relation degree; use p >= 7")
