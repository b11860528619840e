import random
from fractions import Fraction

import pytest

from reidemeister.errors import ZeroPolynomial
from reidemeister.scalars import GaussRational
from reidemeister.unipoly import (
    UniPoly,
    gaussian_rational_roots,
    poly_gcd,
    rational_roots,
    squarefree_part,
    sturm_real_root_count,
)


def poly(*coeffs):
    return UniPoly([Fraction(c) for c in coeffs])


def poly_from_roots(roots):
    p = poly(1)
    for r in roots:
        p = p * poly(-r, 1)
    return p


def test_arithmetic_and_eval():
    p = poly(1, -3, 1)  # x^2 - 3x + 1
    assert p.degree == 2
    assert p(Fraction(0)) == 1
    assert p(Fraction(3)) == 1
    assert str(p) == "x^2 - 3x + 1"
    q = poly(0, 1)
    assert (p * q).degree == 3
    assert (p - p).is_zero


def test_divmod_exact():
    p = poly_from_roots([1, 2, 3])
    q, r = divmod(p, poly(-2, 1))
    assert r.is_zero
    assert q == poly_from_roots([1, 3])


def test_gcd_and_squarefree():
    p = poly(-1, 1) * poly(-1, 1) * poly(-2, 1)
    assert poly_gcd(p, p.derivative()) == poly(-1, 1)
    assert squarefree_part(p) == poly_from_roots([1, 2])


def brute_force_root_count(p, lo=-1000, hi=1000, steps=4000):
    """Sign-change isolation oracle for polynomials with known-scale roots."""
    seen = 0
    prev = p(Fraction(lo))
    step = Fraction(hi - lo, steps)
    x = Fraction(lo)
    for _ in range(steps):
        x += step
        cur = p(x)
        if cur == 0:
            seen += 1
            prev = cur
            continue
        if prev != 0 and (prev < 0) != (cur < 0):
            seen += 1
        if cur != 0:
            prev = cur
    return seen


def test_sturm_spec_values():
    assert sturm_real_root_count(poly(1, 0, 1)) == 0       # x^2 + 1
    assert sturm_real_root_count(poly(0, -2, 0, 1)) == 3   # x^3 - 2x
    assert sturm_real_root_count(poly(1, -3, 1)) == 2      # positive discriminant


def test_sturm_against_known_integer_roots():
    rng = random.Random(7)
    for _ in range(30):
        k = rng.randrange(1, 5)
        roots = sorted(rng.sample(range(-8, 9), k))
        p = poly_from_roots(roots)
        # repeat a root sometimes: the non-squarefree path must still count
        # distinct roots
        if rng.random() < 0.4:
            p = p * poly(-roots[0], 1)
        assert sturm_real_root_count(p) == len(set(roots))
        assert sturm_real_root_count(squarefree_part(p), squarefree=True) == len(set(roots))
        assert brute_force_root_count(p, min(roots) - 2, max(roots) + 2,
                                      (max(roots) - min(roots) + 4) * 8) == len(set(roots))


def test_sturm_rejects_zero():
    with pytest.raises(ZeroPolynomial):
        sturm_real_root_count(UniPoly())


def test_rational_roots():
    assert rational_roots(poly(-2, 1)) == [Fraction(2)]
    p = poly(2, 1) * poly(-1, 3) * poly(1, 0, 1)  # roots -2, 1/3
    assert rational_roots(p) == [Fraction(-2), Fraction(1, 3)]
    assert rational_roots(poly(0, 0, 1)) == [Fraction(0)]
    assert rational_roots(poly(1, 0, 1)) == []


def test_gaussian_roots():
    i = GaussRational(0, 1)
    p = UniPoly([GaussRational.of(1), GaussRational.of(0), GaussRational.of(1)])
    assert gaussian_rational_roots(p) == [GaussRational(0, -1), i]
    # (x - (1+i))(x - 2) over Z[i]
    q = UniPoly([GaussRational(1, 1) * 2, -GaussRational(3, 1), GaussRational.of(1)])
    roots = gaussian_rational_roots(q)
    assert GaussRational(1, 1) in roots and GaussRational.of(2) in roots
    # half-integer Gaussian root: (2x - i) -> x = i/2
    h = UniPoly([GaussRational(0, -1), GaussRational.of(2)])
    assert gaussian_rational_roots(h) == [GaussRational(0, Fraction(1, 2))]
