"""Shared test oracles and random generators.

Everything here is deliberately independent of the code paths it checks:
the torus oracle uses only integer row operations and direct verification,
the root-isolation oracle uses sign changes on a grid, and the random
automorphism factories only compose validated building blocks.
"""

from fractions import Fraction
from math import ceil, floor

from reidemeister import inner_automorphism, is_automorphism
from reidemeister.matrix import Matrix, det
from reidemeister.flags import nilradical


# -- torus fixed points, brute force ------------------------------------------


def _integer_row_echelon(rows):
    """Upper-triangularize with unimodular row operations only (gcd steps)."""
    rows = [list(r) for r in rows]
    n = len(rows)
    r = 0
    for c in range(len(rows[0])):
        while True:
            nonzero = [i for i in range(r, n) if rows[i][c] != 0]
            if not nonzero:
                break
            piv = min(nonzero, key=lambda i: abs(rows[i][c]))
            rows[r], rows[piv] = rows[piv], rows[r]
            clean = True
            for i in range(r + 1, n):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        clean = False
            if clean:
                r += 1
                break
        if r == n:
            break
    return rows


def torus_fixed_points(a: Matrix):
    """All x in [0,1)^n with (A - I)x integral, by back-substitution over an
    integer row echelon form; every candidate is re-verified against the
    original matrix.  Requires det(A - I) != 0."""
    n = a.rows
    b_rows = [[a.entry(i, j) - (1 if i == j else 0) for j in range(n)]
              for i in range(n)]
    h = _integer_row_echelon(b_rows)
    for i in range(n):
        assert h[i][i] != 0, "fixed-point enumeration needs det(A - I) != 0"
    points = [[]]  # partial assignments for x_{i+1..n-1}, built backwards
    for i in range(n - 1, -1, -1):
        extended = []
        for tail in points:
            s = sum((Fraction(h[i][j]) * tail[j - i - 1] for j in range(i + 1, n)),
                    Fraction(0))
            d = h[i][i]
            # solutions of d*x + s in Z with x in [0,1): x = (m - s)/d with
            # m in [ceil(s), ceil(s)+d) for d > 0, m in (s+d, floor(s)] for d < 0
            first = ceil(s) if d > 0 else floor(s)
            step = 1 if d > 0 else -1
            for k in range(abs(d)):
                x = (Fraction(first + step * k) - s) / d
                assert 0 <= x < 1
                extended.append([x] + tail)
        points = extended
    verified = []
    for p in points:
        image = [sum(Fraction(b_rows[i][j]) * p[j] for j in range(n))
                 for i in range(n)]
        assert all(v.denominator == 1 for v in image), "candidate failed re-check"
        verified.append(tuple(p))
    assert len(set(verified)) == len(verified)
    return verified


def torus_fixed_points_naive(a: Matrix, denominator: int):
    """Grid search over (1/denominator)Z^n; only sane for tiny cases."""
    n = a.rows
    b = [[a.entry(i, j) - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    found = []
    def rec(prefix):
        if len(prefix) == n:
            image = [sum(Fraction(b[i][j]) * prefix[j] for j in range(n))
                     for i in range(n)]
            if all(v.denominator == 1 for v in image):
                found.append(tuple(prefix))
            return
        for k in range(denominator):
            rec(prefix + [Fraction(k, denominator)])
    rec([])
    return found


def random_unimodular(rng, n, ops=None):
    """Product of random elementary matrices; always determinant +-1."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if ops is None:
        ops = n + rng.randrange(1, 4)
    for _ in range(ops):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if kind == 0 and i != j:
            k = rng.choice([-2, -1, 1, 2])
            rows[i] = [x + k * y for x, y in zip(rows[i], rows[j])]
        elif kind == 1 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        elif kind == 2:
            rows[i] = [-x for x in rows[i]]
    return Matrix.from_rows(rows)


# -- random validated automorphisms -------------------------------------------


def _random_inner(entry, rng):
    g = entry.algebra
    nil = nilradical(g)
    coeffs = [Fraction(rng.randrange(-2, 3)) for _ in nil.basis]
    x = [g.zero] * g.dim
    for c, b in zip(coeffs, nil.basis):
        for k in range(g.dim):
            x[k] = x[k] + c * b[k]
    return inner_automorphism(g, tuple(x)).m


def random_automorphism(entry, rng) -> Matrix:
    """A random validated automorphism: a product of catalog samples and
    inner exponentials."""
    g = entry.algebra
    pool = [mat for mat, _ in entry.sample_automorphisms]
    factors = []
    for _ in range(rng.randrange(1, 4)):
        if pool and rng.random() < 0.6:
            factors.append(rng.choice(pool))
        else:
            factors.append(_random_inner(entry, rng))
    result = factors[0]
    for f in factors[1:]:
        result = result * f
    is_automorphism(g, result)  # validation is part of the harness contract
    return result
