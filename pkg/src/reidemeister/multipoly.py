"""Multivariate polynomials over Q and the rational functions they generate.

Just enough symbolic machinery for 2x2 matrix identities over a function
field: ring arithmetic, content normalization, graded-lexicographic display,
and rational-function equality decided by cross-multiplication.  There is no
multivariate gcd; fractions are only reduced by content.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        clean = {}
        for expo, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff:
                clean[tuple(expo)] = coeff
        self.terms = clean

    @staticmethod
    def constant(value, vars) -> "MultiPoly":
        value = Fraction(value)
        zero_expo = (0,) * len(vars)
        return MultiPoly(vars, {zero_expo: value} if value else {})

    @staticmethod
    def variable(name, vars) -> "MultiPoly":
        vars = tuple(vars)
        expo = tuple(1 if v == name else 0 for v in vars)
        if sum(expo) != 1:
            raise ValueError(f"unknown variable {name!r} among {vars}")
        return MultiPoly(vars, {expo: Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError("mixed variable sets")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.vars)
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for expo, c in other.terms.items():
            terms[expo] = terms.get(expo, Fraction(0)) + c
        return MultiPoly(self.vars, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                terms[expo] = terms.get(expo, Fraction(0)) + c1 * c2
        return MultiPoly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.constant(1, self.vars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive with integer coefficients;
        the sign is carried by the graded-lex leading coefficient."""
        if self.is_zero:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        c = Fraction(num, den)
        lead = self.terms[self.leading_monomial()]
        return -c if lead < 0 else c

    def leading_monomial(self):
        return max(self.terms, key=lambda e: (sum(e), e))

    def scale(self, factor) -> "MultiPoly":
        factor = Fraction(factor)
        return MultiPoly(self.vars, {e: c * factor for e, c in self.terms.items()})

    def evaluate(self, values: dict):
        point = [Fraction(values[v]) for v in self.vars]
        total = Fraction(0)
        for expo, c in self.terms.items():
            term = c
            for base, k in zip(point, expo):
                for _ in range(k):
                    term *= base
            total += term
        return total

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for expo in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[expo]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.vars, expo) if k
            )
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self})"


class RationalFunction:
    """Quotient of multivariate polynomials, reduced by content only.

    Equality is decided by cross-multiplication, so representatives need not
    share a normal form beyond content and denominator sign.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.constant(1, num.vars)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.vars != den.vars:
            raise ValueError("mixed variable sets")
        c = den.content()
        self.num = num.scale(1 / c)
        self.den = den.scale(1 / c)

    @staticmethod
    def constant(value, vars) -> "RationalFunction":
        return RationalFunction(MultiPoly.constant(value, vars))

    @staticmethod
    def variable(name, vars) -> "RationalFunction":
        return RationalFunction(MultiPoly.variable(name, vars))

    @property
    def vars(self):
        return self.num.vars

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerce(self, other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            if other.vars != self.vars:
                raise ValueError("mixed variable sets")
            return other
        if isinstance(other, (int, Fraction, MultiPoly)):
            if isinstance(other, MultiPoly):
                return RationalFunction(other)
            return RationalFunction.constant(other, self.vars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # semantic equality has no cheap canonical hash

    def one(self) -> "RationalFunction":
        return RationalFunction.constant(1, self.vars)

    def evaluate(self, values: dict) -> Fraction:
        den = self.den.evaluate(values)
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes at {values}")
        return self.num.evaluate(values) / den

    def __str__(self):
        if self.den == MultiPoly.constant(1, self.vars):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"
