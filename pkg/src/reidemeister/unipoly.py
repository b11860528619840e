"""Univariate polynomials with exact coefficients, Sturm root counting,
and rational / Gaussian-rational root search.

Coefficients are stored lowest degree first.  The zero polynomial has an
empty coefficient tuple and degree -1.  Coefficients are Fraction for
polynomials over Q and GaussRational for polynomials over Q(i); all the
arithmetic is generic over both.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .errors import ZeroPolynomial
from .scalars import GaussRational


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @staticmethod
    def constant(c) -> "UniPoly":
        return UniPoly([c])

    @staticmethod
    def x_power(k, one=Fraction(1)) -> "UniPoly":
        return UniPoly([one * 0] * k + [one])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            [self.coefficient(k) - other.coefficient(k) for k in range(n)]
        )

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            return UniPoly([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [self.coeffs[0] * other.coeffs[0] * 0] * (
            len(self.coeffs) + len(other.coeffs) - 1
        )
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        """Exact polynomial division over a field (coefficients must divide)."""
        if not isinstance(other, UniPoly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.leading
        while len(rem) >= len(other.coeffs):
            c = rem[-1] / lead
            k = len(rem) - len(other.coeffs)
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
            while rem and not rem[-1]:
                rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        lead = self.leading
        return UniPoly([c / lead for c in self.coeffs])

    def __eq__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficient(k)
            if not c:
                continue
            neg = _is_negative(c)
            mag = -c if neg else c
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)


def _is_negative(c) -> bool:
    if isinstance(c, GaussRational):
        # Only used for display; order Gaussian values by (re, im).
        return (c.re, c.im) < (0, 0)
    return c < 0


def _as_poly(value):
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, (int, Fraction, GaussRational)):
        return UniPoly([value])
    return None


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd via the Euclidean algorithm over the coefficient field."""
    while not b.is_zero:
        a, b = b, divmod(a, b)[1]
    return a.monic() if not a.is_zero else a


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.is_zero:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    d = p.derivative()
    if d.is_zero:
        return UniPoly([p.leading * 0 + 1])
    g = poly_gcd(p, d)
    if g.degree <= 0:
        return p
    q, r = divmod(p, g)
    assert r.is_zero
    return q


def to_primitive_int_coeffs(p: UniPoly) -> list[int]:
    """Scale a rational polynomial to primitive integer coefficients (sign kept)."""
    dens = [Fraction(c).denominator for c in p.coeffs]
    scale = 1
    for d in dens:
        scale = scale * d // gcd(scale, d)
    ints = [int(Fraction(c) * scale) for c in p.coeffs]
    content = 0
    for v in ints:
        content = gcd(content, abs(v))
    return [v // content for v in ints] if content > 1 else ints


def _int_deg(coeffs: list[int]) -> int:
    return len(coeffs) - 1


def _sturm_next(a: list[int], b: list[int]) -> list[int]:
    """Negated pseudo-remainder of a by b, scaled by a positive factor only.

    Stays in integer arithmetic: repeatedly replace a by lc(b)*a - lc(a)*x^d*b.
    If the accumulated multiplier lc(b)^steps is negative, flip the sign back
    so the result is a positive multiple of -rem(a, b).
    """
    lead_b = b[-1]
    r = list(a)
    steps = 0
    while r and _int_deg(r) >= _int_deg(b):
        shift = _int_deg(r) - _int_deg(b)
        lead_r = r[-1]
        r = [lead_b * c for c in r]
        for j, bc in enumerate(b):
            r[shift + j] -= lead_r * bc
        steps += 1
        while r and r[-1] == 0:
            r.pop()
    if lead_b < 0 and steps % 2:
        r = [-c for c in r]
    r = [-c for c in r]
    content = 0
    for v in r:
        content = gcd(content, abs(v))
    return [v // content for v in r] if content > 1 else r


def _sign_variations(signs: list[int]) -> int:
    flips = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            flips += 1
        prev = s
    return flips


def sturm_real_root_count(p: UniPoly, squarefree: bool = False) -> int:
    """Number of distinct real roots, by Sturm sign variations at -inf/+inf.

    The chain is computed with integer pseudo-remainders.  Unless the caller
    asserts squarefreeness, p is first divided by gcd(p, p').
    """
    if p.is_zero:
        raise ZeroPolynomial("root count of the zero polynomial")
    if p.degree == 0:
        return 0
    if not squarefree:
        p = squarefree_part(p)
        if p.degree == 0:
            return 0
    chain = [to_primitive_int_coeffs(p)]
    chain.append(to_primitive_int_coeffs(p.derivative()))
    while _int_deg(chain[-1]) > 0:
        nxt = _sturm_next(chain[-2], chain[-1])
        if not nxt:
            break
        chain.append(nxt)
    def sgn(v):
        return (v > 0) - (v < 0)
    at_plus = [sgn(c[-1]) for c in chain]
    at_minus = [sgn(c[-1]) * (-1 if _int_deg(c) % 2 else 1) for c in chain]
    return _sign_variations(at_minus) - _sign_variations(at_plus)


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: UniPoly) -> list[Fraction]:
    """All roots of p in Q, found by the rational root theorem.

    Sorted ascending; multiplicities are not repeated.
    """
    if p.is_zero:
        raise ZeroPolynomial("roots of the zero polynomial")
    ints = to_primitive_int_coeffs(p)
    roots = set()
    k = 0
    while ints[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
        ints = ints[k:]
    if len(ints) > 1:
        for num in _int_divisors(ints[0]):
            for den in _int_divisors(ints[-1]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if cand not in roots and p(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


# -- Gaussian-rational root search -------------------------------------------
#
# Rational root theorem over the Euclidean domain Z[i]: for a polynomial with
# Gaussian-integer coefficients, any root p/q in lowest terms has p | c_0 and
# q | c_n.  Divisors of a Gaussian integer are enumerated through the integer
# divisors of its norm.


def _zi_divides(d, z) -> bool:
    (a, b), (x, y) = d, z
    n = a * a + b * b
    re = x * a + y * b
    im = y * a - x * b
    return re % n == 0 and im % n == 0


def _zi_divisors(z) -> list[tuple[int, int]]:
    x, y = z
    n = x * x + y * y
    if n == 0:
        return []
    found = []
    for m in _int_divisors(n):
        for a in range(isqrt(m) + 1):
            b2 = m - a * a
            b = isqrt(b2)
            if b * b != b2:
                continue
            for cand in {(a, b), (a, -b), (b, a), (-b, a)}:
                if cand != (0, 0) and _zi_divides(cand, z):
                    found.append(cand)
    return found


def gaussian_rational_roots(p: UniPoly) -> list[GaussRational]:
    """All roots of p in Q(i); coefficients may be Fraction or GaussRational."""
    if p.is_zero:
        raise ZeroPolynomial("roots of the zero polynomial")
    coeffs = [GaussRational.of(c) for c in p.coeffs]
    scale = 1
    for c in coeffs:
        for d in (c.re.denominator, c.im.denominator):
            scale = scale * d // gcd(scale, d)
    ints = [(int(c.re * scale), int(c.im * scale)) for c in coeffs]
    roots = set()
    k = 0
    while ints[k] == (0, 0):
        k += 1
    if k:
        roots.add(GaussRational(Fraction(0)))
        ints = ints[k:]
    if len(ints) > 1:
        units = [GaussRational.of(1), GaussRational.of(-1),
                 GaussRational(0, 1), GaussRational(0, -1)]
        seen = set()
        for (na, nb) in _zi_divisors(ints[0]):
            for (da, db) in _zi_divisors(ints[-1]):
                base = GaussRational(Fraction(na), Fraction(nb)) / GaussRational(
                    Fraction(da), Fraction(db)
                )
                for u in units:
                    cand = base * u
                    key = (cand.re, cand.im)
                    if key in seen:
                        continue
                    seen.add(key)
                    if p(cand) == 0:
                        roots.add(cand)
    return sorted(roots, key=lambda r: (r.re, r.im))


def field_roots(p: UniPoly, field: str):
    """Roots of p in the given base field ("Q" or "Qi")."""
    if field == "Q":
        return rational_roots(p)
    return gaussian_rational_roots(p)


def strip_field_roots(p: UniPoly, field: str) -> UniPoly:
    """Divide out every linear factor with a root in the field.

    The result has no roots in the field; it certifies non-splitness when its
    degree is positive.
    """
    one = p.leading / p.leading
    for r in field_roots(p, field):
        factor = UniPoly([-r * one, one])
        while True:
            q, rem = divmod(p, factor)
            if rem.is_zero and not q.is_zero:
                p = q
            else:
                break
            if p.degree == 0:
                return p
    return p
