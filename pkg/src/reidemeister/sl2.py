"""Symbolic verification of the twisted-conjugacy computation in SL(2, R).

Work in the rational function field Q(a, b, c, r) with the determinant
constraint folded in as d = (1 + b*c)/a.  For the swap involution
phi(g) = xi g xi^{-1} (xi the antidiagonal unit) and the unipotent
x_r = [[1, r], [0, 1]], the product g * x_r * phi(g^{-1}) is computed
symbolically; its off-diagonal entries always sum to r.  Membership of the
product in the unipotent subgroup therefore forces the (1,2) entry back to
r, so distinct r land in distinct twisted classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrix import Matrix
from .multipoly import MultiPoly, RationalFunction

VARS = ("a", "b", "c", "r")


def _rf(name: str) -> RationalFunction:
    return RationalFunction.variable(name, VARS)


def _const(v) -> RationalFunction:
    return RationalFunction.constant(v, VARS)


@dataclass(frozen=True, eq=False)
class SymbolicMatrix2:
    """2x2 matrix over Q(a, b, c, r), with 1-based entry access."""

    m: Matrix

    def entry(self, i: int, j: int) -> RationalFunction:
        return self.m.entry(i - 1, j - 1)

    def __eq__(self, other):
        if not isinstance(other, SymbolicMatrix2):
            return NotImplemented
        return self.m == other.m

    __hash__ = None

    def evaluate(self, values: dict) -> Matrix:
        return Matrix(
            2, 2, [e.evaluate(values) for e in self.m.entries]
        )


def _generic_sl2_element():
    a, b, c = _rf("a"), _rf("b"), _rf("c")
    d = (_const(1) + b * c) / a
    return a, b, c, d


def sl2_twisted_product() -> SymbolicMatrix2:
    """g * x_r * phi(g^{-1}) for generic g in SL(2), phi = conjugation by the
    antidiagonal swap."""
    a, b, c, d = _generic_sl2_element()
    r = _rf("r")
    one, zero = _const(1), _const(0)
    g = Matrix.from_rows([[a, b], [c, d]])
    x_r = Matrix.from_rows([[one, r], [zero, one]])
    g_inv = Matrix.from_rows([[d, -b], [-c, a]])  # adjugate; det g = 1
    phi_g_inv = _swap_conjugate(g_inv)
    return SymbolicMatrix2(g * x_r * phi_g_inv)


def _swap_conjugate(m: Matrix) -> Matrix:
    """xi m xi^{-1} with xi = [[0,1],[1,0]]: swap both indices."""
    return Matrix.from_rows([
        [m.entry(1, 1), m.entry(1, 0)],
        [m.entry(0, 1), m.entry(0, 0)],
    ])


def displayed_twisted_product() -> SymbolicMatrix2:
    """The closed form [[a^2-b^2-abr, bd-ac+adr], [ac-bd-bcr, d^2-c^2+cdr]]
    with d = (1+bc)/a substituted."""
    a, b, c, d = _generic_sl2_element()
    r = _rf("r")
    return SymbolicMatrix2(Matrix.from_rows([
        [a * a - b * b - a * b * r, b * d - a * c + a * d * r],
        [a * c - b * d - b * c * r, d * d - c * c + c * d * r],
    ]))


def off_diagonal_sum() -> RationalFunction:
    p = sl2_twisted_product()
    return p.entry(1, 2) + p.entry(2, 1)


def verify_sl2_intersection() -> bool:
    """Certify that the unipotent subgroup meets the twisted class of x_r in
    exactly x_r.

    Checks, symbolically: the product matches its closed form, the product has
    determinant 1, and entry(1,2) + entry(2,1) = r identically.  Any unipotent
    member of the class has entry(2,1) = 0, and the additive identity then
    pins entry(1,2) to r.
    """
    product = sl2_twisted_product()
    if product != displayed_twisted_product():
        return False
    det = (product.entry(1, 1) * product.entry(2, 2)
           - product.entry(1, 2) * product.entry(2, 1))
    if det != _const(1):
        return False
    return off_diagonal_sum() == _rf("r")


def numeric_twisted_product(a, b, c, r) -> Matrix:
    """Direct 2x2 computation over Q at a point with d = (1+bc)/a."""
    a, b, c, r = Fraction(a), Fraction(b), Fraction(c), Fraction(r)
    if a == 0:
        raise ZeroDivisionError("the chart requires a != 0")
    d = (1 + b * c) / a
    def mat(rows):
        return Matrix.from_rows([[Fraction(v) for v in row] for row in rows])
    g = mat([[a, b], [c, d]])
    x_r = mat([[1, r], [0, 1]])
    g_inv = mat([[d, -b], [-c, a]])
    phi = mat([[a, -c], [-b, d]])
    assert phi == _swap_conjugate(g_inv)
    return g * x_r * phi
