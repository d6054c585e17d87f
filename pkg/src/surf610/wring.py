"""Weighted graded polynomial rings over Q and F_p.

The main ring is C[X0, Y0, Y1, Z0, U0] with weights (1, 2, 2, 3, 5), replaced
by an exact field.  Polynomials are sparse maps from exponent tuples to nonzero
coefficients.  Monomials are ordered by (weighted degree, exponent tuple);
listings use the descending version of that order, so degree 2 reads
X0^2, Y0, Y1.

Binary forms (sections of O(d) on P^1) live here too, together with the
Sylvester resultant and a Euclidean gcd.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import linalg
from .fields import QQ, FieldMismatch, ModP


@dataclass(frozen=True)
class Ring:
    """Variable names and weights of a graded polynomial ring."""

    names: tuple[str, ...]
    weights: tuple[int, ...]

    @property
    def nvars(self) -> int:
        return len(self.names)

    def degree(self, exps: Sequence[int]) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def index(self, name: str) -> int:
        return self.names.index(name)


P11235 = Ring(("X0", "Y0", "Y1", "Z0", "U0"), (1, 2, 2, 3, 5))
P3 = Ring(("xi0", "eta0", "eta1", "zeta0"), (1, 1, 1, 1))

X0, Y0, Y1, Z0, U0 = range(5)


def _mono_key(ring: Ring, exps):
    return (ring.degree(exps), exps)


@lru_cache(maxsize=None)
def _monomials(weights: tuple[int, ...], d: int) -> tuple[tuple[int, ...], ...]:
    if not weights:
        return ((),) if d == 0 else ()
    w, rest = weights[0], weights[1:]
    out = []
    for e in range(d // w, -1, -1):
        for tail in _monomials(rest, d - e * w):
            out.append((e,) + tail)
    return tuple(out)


def monomial_basis(d: int, ring: Ring = P11235) -> list[tuple[int, ...]]:
    """All monomials of weighted degree ``d``, in descending exponent order."""
    if d < 0:
        return []
    return list(_monomials(ring.weights, d))


class WPoly:
    """Sparse polynomial in a weighted ring with exact coefficients.

    ``deg`` is an optional homogeneity tag; when given, every term must have
    that weighted degree.  The tag survives cancellation, so ``f - f`` is the
    zero polynomial of degree ``f.deg``.
    """

    __slots__ = ("field", "ring", "terms", "deg")

    def __init__(self, field, terms: Mapping[tuple, object] | None = None,
                 deg: int | None = None, ring: Ring = P11235):
        self.field = field
        self.ring = ring
        clean = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != ring.nvars or any(e < 0 for e in m):
                    raise ValueError(f"bad exponent vector {m}")
                c = field(c)
                if c != 0:
                    clean[m] = clean.get(m, field.zero()) + c
                    if clean[m] == 0:
                        del clean[m]
        self.terms = clean
        if deg is not None:
            for m in clean:
                if ring.degree(m) != deg:
                    raise ValueError(f"term {m} is not of weighted degree {deg}")
        self.deg = deg

    # construction -----------------------------------------------------

    @classmethod
    def _raw(cls, field, terms, deg, ring):
        obj = cls.__new__(cls)
        obj.field, obj.terms, obj.deg, obj.ring = field, terms, deg, ring
        return obj

    @classmethod
    def zero(cls, field=QQ, deg=None, ring=P11235):
        return cls._raw(field, {}, deg, ring)

    @classmethod
    def const(cls, c, field=QQ, ring=P11235):
        return cls(field, {(0,) * ring.nvars: c}, deg=0, ring=ring)

    @classmethod
    def var(cls, name: str | int, field=QQ, ring=P11235):
        i = ring.index(name) if isinstance(name, str) else name
        e = [0] * ring.nvars
        e[i] = 1
        return cls._raw(field, {tuple(e): field.one()}, ring.weights[i], ring)

    @classmethod
    def monomial(cls, exps, coeff=1, field=QQ, ring=P11235):
        exps = tuple(exps)
        return cls(field, {exps: coeff}, deg=ring.degree(exps), ring=ring)

    @classmethod
    def parse(cls, text: str, field=QQ, ring=P11235) -> "WPoly":
        return parse_poly(text, field, ring)

    # queries ------------------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Weighted degree if homogeneous (or tagged), else None."""
        if self.deg is not None:
            return self.deg
        degs = {self.ring.degree(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.deg is not None or len({self.ring.degree(m) for m in self.terms}) <= 1

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps) -> object:
        return self.terms.get(tuple(exps), self.field.zero())

    def monomials(self) -> list[tuple[int, ...]]:
        return sorted(self.terms, key=lambda m: _mono_key(self.ring, m), reverse=True)

    def items(self):
        for m in self.monomials():
            yield m, self.terms[m]

    def max_exponent(self, var: int) -> int:
        return max((m[var] for m in self.terms), default=0)

    # arithmetic ---------------------------------------------------------

    def _check(self, other: "WPoly"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def _lift(self, other):
        if isinstance(other, WPoly):
            self._check(other)
            return other
        return WPoly.const(other, self.field, self.ring)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        d1, d2 = self.degree, other.degree
        deg = d1 if d1 is not None and d1 == d2 else None
        return WPoly._raw(self.field, out, deg, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return WPoly._raw(self.field, {m: -c for m, c in self.terms.items()}, self.deg, self.ring)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "WPoly":
        c = self.field(c)
        if c == 0:
            return WPoly.zero(self.field, self.deg, self.ring)
        return WPoly._raw(self.field, {m: v * c for m, v in self.terms.items()}, self.deg, self.ring)

    def __mul__(self, other):
        if not isinstance(other, WPoly):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m)
                out[m] = c1 * c2 if s is None else s + c1 * c2
        out = {m: c for m, c in out.items() if c != 0}
        d1, d2 = self.degree, other.degree
        deg = d1 + d2 if d1 is not None and d2 is not None else None
        return WPoly._raw(self.field, out, deg, self.ring)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = WPoly.const(1, self.field, self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, WPoly):
            return self.field == other.field and self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, ModP)):
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # maps ---------------------------------------------------------------

    def diff(self, var: int) -> "WPoly":
        out = {}
        for m, c in self.terms.items():
            if m[var]:
                n = list(m)
                n[var] -= 1
                out[tuple(n)] = c * m[var]
        out = {m: c for m, c in out.items() if c != 0}
        d = self.degree
        deg = d - self.ring.weights[var] if d is not None else None
        return WPoly._raw(self.field, out, deg, self.ring)

    def evaluate(self, point: Sequence) -> object:
        total = self.field.zero()
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t = t * x ** e
            total = total + t
        return total

    def compose(self, images: Sequence["WPoly"]) -> "WPoly":
        """Substitute ``images[i]`` for variable ``i`` (images may live in another ring)."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        target = images[0]
        powers: list[dict[int, WPoly]] = [{0: WPoly.const(1, target.field, target.ring)} for _ in images]

        def pw(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = pw(i, e - 1) * images[i]
            return cache[e]

        out = WPoly.zero(target.field, ring=target.ring)
        for m, c in self.terms.items():
            t = WPoly.const(c, target.field, target.ring)
            for i, e in enumerate(m):
                if e:
                    t = t * pw(i, e)
            out = out + t
        d = self.degree
        img_degs = [img.degree for img in images]
        if d is not None and all(x is not None for x in img_degs):
            ratios = {Fraction(x, w) for x, w in zip(img_degs, self.ring.weights)}
            if len(ratios) == 1:
                r = ratios.pop()
                if (d * r).denominator == 1:
                    out = WPoly(target.field, out.terms, deg=int(d * r), ring=target.ring)
        return out

    def reduce(self, field) -> "WPoly":
        """Image of this polynomial in another field (e.g. Q -> F_p)."""
        return WPoly(field, {m: field(c) for m, c in self.terms.items()}, self.deg, self.ring)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"WPoly({format_poly(self)!r}, {self.field!r})"


# text format ------------------------------------------------------------

class PolyParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()−]))")


def _tokenize(text: str):
    pos = 0
    toks = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolyParseError("unexpected character", text, pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        val = m.group(kind)
        if val == "−":
            val = "-"
        toks.append((kind, val, start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


def parse_poly(text: str, field=QQ, ring: Ring = P11235) -> WPoly:
    """Parse ``3/4*X0^2*Y0 - Y1 + 2``-style text into a :class:`WPoly`."""
    toks = _tokenize(text)
    i = 0
    terms: dict = {}

    def peek():
        return toks[i]

    def take(kind=None, val=None):
        nonlocal i
        t = toks[i]
        if (kind and t[0] != kind) or (val and t[1] != val):
            want = val or kind
            raise PolyParseError(f"expected {want!r}, found {t[1] or 'end of input'!r}", text, t[2])
        i += 1
        return t

    def number():
        num = int(take("num")[1])
        if peek()[1] == "/" and toks[i + 1][0] == "num":
            take(val="/")
            den_tok = take("num")
            if int(den_tok[1]) == 0:
                raise PolyParseError("zero denominator", text, den_tok[2])
            return Fraction(num, int(den_tok[1]))
        return Fraction(num)

    def factor(coeff, exps):
        kind, val, pos = peek()
        if kind == "num":
            return coeff * number(), exps
        if kind == "name":
            take()
            if val not in ring.names:
                raise PolyParseError(f"unknown variable {val!r}", text, pos)
            e = 1
            if peek()[1] == "^":
                take(val="^")
                e = int(take("num")[1])
            exps[ring.index(val)] += e
            return coeff, exps
        raise PolyParseError(f"expected a number or variable, found {val or 'end of input'!r}", text, pos)

    def term(sign):
        coeff, exps = Fraction(sign), [0] * ring.nvars
        coeff, exps = factor(coeff, exps)
        while peek()[1] == "*":
            take(val="*")
            coeff, exps = factor(coeff, exps)
        return coeff, tuple(exps)

    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take()[1] == "-" else 1
    while True:
        c, m = term(sign)
        terms[m] = terms.get(m, Fraction(0)) + c
        kind, val, pos = peek()
        if kind == "end":
            break
        if val in ("+", "-"):
            take()
            sign = -1 if val == "-" else 1
            continue
        raise PolyParseError(f"unexpected {val!r}", text, pos)
    out = {m: field(c) for m, c in terms.items() if c != 0}
    poly = WPoly(field, out, ring=ring)
    if poly.terms and poly.is_homogeneous():
        poly.deg = poly.degree
    return poly


def _format_coeff(c) -> str:
    return str(c)


def format_poly(p: WPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for m, c in p.items():
        mono = "*".join(
            (name if e == 1 else f"{name}^{e}") for name, e in zip(p.ring.names, m) if e
        )
        if isinstance(c, ModP):
            neg, mag = False, str(c.v)
        else:
            neg, mag = c < 0, str(abs(c))
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


# graded substitutions -------------------------------------------------

class GradedSubstitution:
    """Degree-preserving change of variables with a recorded inverse.

    ``images[i]`` replaces variable ``i`` and must be homogeneous of the weight
    of that variable.  When ``inverse`` is supplied the two maps are checked to
    compose to the identity on every variable.
    """

    def __init__(self, images: Sequence[WPoly], inverse: Sequence[WPoly] | None = None):
        images = list(images)
        ring = images[0].ring
        if len(images) != ring.nvars:
            raise ValueError("need one image per variable")
        for i, img in enumerate(images):
            if img.ring != ring:
                raise ValueError("images must live in the source ring")
            if not img.is_zero() and img.degree != ring.weights[i]:
                raise ValueError(
                    f"image of {ring.names[i]} is not homogeneous of weight {ring.weights[i]}: {img}"
                )
        self.images = [WPoly(img.field, img.terms, ring.weights[i], ring) for i, img in enumerate(images)]
        self.ring = ring
        self.field = images[0].field
        self.inverse_images = None
        if inverse is not None:
            inv = [WPoly(img.field, img.terms, ring.weights[i], ring) for i, img in enumerate(inverse)]
            for i in range(ring.nvars):
                v = WPoly.var(i, self.field, ring)
                if v.compose(images).compose(inv) != v or v.compose(inv).compose(images) != v:
                    raise ValueError("recorded inverse does not invert the substitution")
            self.inverse_images = inv

    @classmethod
    def identity(cls, field=QQ, ring=P11235):
        vs = [WPoly.var(i, field, ring) for i in range(ring.nvars)]
        return cls(vs, vs)

    @classmethod
    def scaling(cls, a, field=QQ, ring=P11235):
        a = field(a)
        ims = [WPoly.var(i, field, ring).scale(a ** w) for i, w in enumerate(ring.weights)]
        inv = [WPoly.var(i, field, ring).scale((1 / a) ** w) for i, w in enumerate(ring.weights)]
        return cls(ims, inv)

    @property
    def invertible(self) -> bool:
        return self.inverse_images is not None

    def inverse(self) -> "GradedSubstitution":
        if self.inverse_images is None:
            raise ValueError("no recorded inverse")
        return GradedSubstitution(self.inverse_images, self.images)

    def then(self, other: "GradedSubstitution") -> "GradedSubstitution":
        """Substitution equal to applying ``self`` first, then ``other``."""
        ims = [img.compose(other.images) for img in self.images]
        inv = None
        if self.inverse_images is not None and other.inverse_images is not None:
            inv = [img.compose(self.inverse_images) for img in other.inverse_images]
        return GradedSubstitution(ims, inv)

    def is_identity(self) -> bool:
        return all(img == WPoly.var(i, self.field, self.ring) for i, img in enumerate(self.images))

    def __call__(self, p: WPoly) -> WPoly:
        return substitute(p, self)

    def __repr__(self):
        body = ", ".join(f"{n} -> {img}" for n, img in zip(self.ring.names, self.images))
        return f"GradedSubstitution({body})"


def substitute(p: WPoly, s: GradedSubstitution) -> WPoly:
    if p.ring != s.ring:
        raise ValueError("substitution from a different ring")
    out = p.compose(s.images)
    d = p.degree
    if d is not None:
        out = WPoly(out.field, out.terms, d, out.ring)
    return out


# binary forms ---------------------------------------------------------

class BinaryForm:
    """Homogeneous form of degree ``d`` in (T0, T1).

    ``coeffs[i]`` is the coefficient of ``T0^(d-i) * T1^i``.  The degree tag is
    fixed even when leading or trailing coefficients vanish.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs: Sequence, field=QQ):
        if len(coeffs) == 0:
            raise ValueError("a binary form of degree d needs d+1 coefficients")
        self.field = field
        self.coeffs = tuple(field(c) for c in coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, d: int, field=QQ):
        return cls([0] * (d + 1), field)

    @classmethod
    def from_roots(cls, roots: Iterable[Sequence], field=QQ) -> "BinaryForm":
        """Product of the linear forms ``b*T0 - a*T1`` vanishing at points (a:b)."""
        out = cls([1], field)
        for a, b in roots:
            out = out * cls([field(b), -field(a)], field)
        return out

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "BinaryForm"):
        if other.degree != self.degree:
            raise ValueError("adding binary forms of different degrees")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)], self.field)

    def __neg__(self):
        return BinaryForm([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            c = self.field(other)
            return BinaryForm([x * c for x in self.coeffs], self.field)
        if self.field != other.field:
            raise FieldMismatch("binary forms over different fields")
        out = [self.field.zero()] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BinaryForm(out, self.field)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, t0, t1):
        d = self.degree
        return sum((c * t0 ** (d - i) * t1 ** i for i, c in enumerate(self.coeffs)), self.field.zero())

    def dehomogenize(self) -> list:
        """Coefficients in ascending powers of t = T0/T1 (T1 = 1), trimmed."""
        asc = list(reversed(self.coeffs))
        while asc and asc[-1] == 0:
            asc.pop()
        return asc

    def t1_valuation(self) -> int:
        """Multiplicity of the zero at (1:0), i.e. the power of T1 dividing the form."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return self.degree + 1

    def exact_div(self, other: "BinaryForm") -> "BinaryForm":
        """Quotient of an exact division ``self / other``; raises if inexact."""
        q, r = _poly_divmod(self.dehomogenize(), other.dehomogenize())
        qd = self.degree - other.degree
        if any(c != 0 for c in r) or qd < 0:
            raise ValueError("inexact division of binary forms")
        asc = q + [self.field.zero()] * (qd + 1 - len(q))
        if len(asc) > qd + 1:
            raise ValueError("inexact division of binary forms")
        out = BinaryForm(list(reversed(asc)), self.field)
        if out * other != self:
            raise ValueError("inexact division of binary forms")
        return out

    def to_wpoly(self, ring=P11235, vars=(Y0, Y1)) -> WPoly:
        d = self.degree
        out = {}
        for i, c in enumerate(self.coeffs):
            if c != 0:
                e = [0] * ring.nvars
                e[vars[0]] += d - i
                e[vars[1]] += i
                out[tuple(e)] = c
        return WPoly(self.field, out, ring=ring)

    def __str__(self):
        d = self.degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "*".join(
                x for x in (f"T0^{d - i}" if d - i > 1 else ("T0" if d - i == 1 else ""),
                            f"T1^{i}" if i > 1 else ("T1" if i == 1 else "")) if x
            )
            if not mono:
                parts.append(f"{c}")
            elif c == 1:
                parts.append(mono)
            elif c == -1 and not isinstance(c, ModP):
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"BinaryForm({[str(c) for c in self.coeffs]}, {self.field!r})"


def restrict_to_line(p: WPoly, vars=(Y0, Y1)) -> BinaryForm:
    """Binary form obtained by setting every variable except ``vars`` to zero.

    Both kept variables must share a weight ``w``; ``p`` must have degree divisible by ``w``.
    """
    w = p.ring.weights[vars[0]]
    if p.ring.weights[vars[1]] != w:
        raise ValueError("line variables must have equal weight")
    d = p.degree
    if d is None or d % w:
        raise ValueError("restriction needs a homogeneous polynomial of degree divisible by the line weight")
    n = d // w
    coeffs = [p.field.zero()] * (n + 1)
    for m, c in p.terms.items():
        if all(e == 0 for k, e in enumerate(m) if k not in vars):
            coeffs[m[vars[1]]] = c
    return BinaryForm(coeffs, p.field)


def sylvester_matrix(f: BinaryForm, g: BinaryForm) -> list[list]:
    m, n = f.degree, g.degree
    size = m + n
    zero = f.field.zero()
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(f.coeffs) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(g.coeffs) + [zero] * (size - n - 1 - i))
    return rows


def binary_resultant(f: BinaryForm, g: BinaryForm):
    """Sylvester resultant of forms with degree tags m, n >= 1.

    Vanishes exactly when f and g share a zero on P^1 over the algebraic closure
    (a zero at (1:0) counts, i.e. both leading coefficients vanishing).
    """
    if f.field != g.field:
        raise FieldMismatch("binary forms over different fields")
    if f.degree < 1 or g.degree < 1:
        raise ValueError("resultant needs degree tags >= 1")
    return linalg.det(sylvester_matrix(f, g), f.field)


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a, b):
    """Division of ascending coefficient lists; b must be nonzero."""
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    q = [b[0] * 0] * (len(a) - len(b) + 1)
    r = list(a)
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] * inv
        q[k] = c
        if c != 0:
            for j, bj in enumerate(b):
                r[k + j] = r[k + j] - c * bj
    return q, _trim(r[: len(b) - 1])


def _poly_gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def binary_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Monic gcd of two binary forms, not both zero.

    Computed by the Euclidean algorithm on the dehomogenizations T1 = 1, then
    multiplied by the common power of T1 (shared zero at (1:0)).  Monic means
    the coefficient of the highest power of T0 is 1.
    """
    if f.field != g.field:
        raise FieldMismatch("binary forms over different fields")
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero forms")
    field = f.field
    if f.is_zero():
        f, g = g, f
    if g.is_zero():
        h, v = f.dehomogenize(), f.t1_valuation()
        lead = h[-1]
        h = [c / lead for c in h]
    else:
        h = _poly_gcd(f.dehomogenize(), g.dehomogenize())
        v = min(f.t1_valuation(), g.t1_valuation())
    return BinaryForm([field.zero()] * v + list(reversed(h)), field)


def gcd_many(forms: Iterable[BinaryForm]) -> BinaryForm | None:
    """gcd of several forms, skipping zero ones; None if all are zero."""
    acc = None
    for f in forms:
        if f.is_zero():
            continue
        acc = f if acc is None else binary_gcd(acc, f)
    if acc is not None:
        acc = binary_gcd(acc, BinaryForm.zero(acc.degree, acc.field))
    return acc
