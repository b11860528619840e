"""Exact scalars: rationals over Q and Gaussian rationals over Q(i).

Plain rationals are fractions.Fraction (always reduced, positive denominator,
zero is 0/1).  GaussRational adds the field Q(i) with exact arithmetic; it is
needed to split rotation-type ad-actions whose eigenvalues are imaginary.

The module also owns the scalar wire format used by matrix and algebra files:
rationals as "p/q" or "p", Gaussian values as "p/q+r/si" (either part may be
absent, a bare "i" means 1i).  Formatting and parsing round-trip bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError

Rational = Fraction

FIELD_Q = "Q"
FIELD_QI = "Qi"


@dataclass(frozen=True)
class GaussRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def of(value) -> "GaussRational":
        if isinstance(value, GaussRational):
            return value
        return GaussRational(Fraction(value))

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Field norm re^2 + im^2 (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        conj = other.conjugate()
        prod = self * conj
        return GaussRational(prod.re / n, prod.im / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)


def _coerce(value):
    if isinstance(value, GaussRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussRational(Fraction(value))
    return None


GAUSS_ZERO = GaussRational(Fraction(0))
GAUSS_ONE = GaussRational(Fraction(1))
GAUSS_I = GaussRational(Fraction(0), Fraction(1))


def field_zero(field: str):
    return Fraction(0) if field == FIELD_Q else GAUSS_ZERO


def field_one(field: str):
    return Fraction(1) if field == FIELD_Q else GAUSS_ONE


def coerce_to_field(value, field: str):
    """Coerce an int/Fraction/GaussRational into the given field's scalar type."""
    if field == FIELD_Q:
        if isinstance(value, GaussRational):
            if value.im != 0:
                raise ValueError(f"{value} is not rational")
            return value.re
        return Fraction(value)
    return GaussRational.of(value)


def format_scalar(value) -> str:
    """Canonical text form of a scalar; inverse of parse_scalar."""
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    re, im = value.re, value.im
    if im == 0:
        return str(re)
    imag = "i" if abs(im) == 1 else f"{abs(im)}i"
    if re == 0:
        return ("-" if im < 0 else "") + imag
    sign = "+" if im > 0 else "-"
    return f"{re}{sign}{imag}"


def parse_scalar(text: str, field: str = FIELD_Q, line=None):
    """Parse "p/q", "p", or Gaussian "p/q+r/si" into the field's scalar type."""
    raw = text.strip().replace(" ", "")
    if not raw:
        raise ParseError("empty scalar", line)
    if raw.endswith("i"):
        if field != FIELD_QI:
            raise ParseError(f"Gaussian value {text!r} in a Q context", line)
        return _parse_gauss(raw, line)
    try:
        value = Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}", line) from None
    return coerce_to_field(value, field)


def _parse_gauss(raw: str, line) -> GaussRational:
    body = raw[:-1]  # strip trailing 'i'
    # Split real from imaginary at the last top-level sign (never inside p/q).
    split = None
    for pos in range(len(body) - 1, 0, -1):
        if body[pos] in "+-" and body[pos - 1] not in "+-/":
            split = pos
            break
    if split is None:
        re_part, im_part = "", body
    else:
        re_part, im_part = body[:split], body[split:]
    try:
        if im_part in ("", "+"):
            im = Fraction(1)
        elif im_part == "-":
            im = Fraction(-1)
        else:
            im = Fraction(im_part)
        re = Fraction(re_part) if re_part else Fraction(0)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad Gaussian rational {raw!r}: {exc}", line) from None
    return GaussRational(re, im)
