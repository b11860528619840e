"""Smith normal form over the integers with unimodular transform tracking.

The decomposition A = U * D * V classifies the cokernel of A, which is what
turns det-style torus fixed-point criteria into explicit finite-group
structure (elementary divisors plus a torus rank).

The reduction is plain repeated gcd-reduction by elementary row and column
operations; U and V accumulate the inverse operations so the recomposition
identity holds exactly at every step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .matrix import Matrix


@dataclass(frozen=True)
class SNFResult:
    U: Matrix
    D: Matrix
    V: Matrix
    invariant_factors: tuple[int, ...]

    def recompose(self) -> Matrix:
        return self.U * self.D * self.V


def _check_integer(m: Matrix):
    for e in m.entries:
        if not isinstance(e, int):
            if hasattr(e, "denominator") and e.denominator == 1:
                continue
            raise ParseError(f"Smith normal form needs integer entries, got {e!r}")


def smith_normal_form(a: Matrix) -> SNFResult:
    """Compute A = U*D*V with U, V unimodular and D = diag(d_1 | d_2 | ...).

    Works for any rectangular integer matrix; zero invariant factors come last.
    """
    _check_integer(a)
    rows, cols = a.rows, a.cols
    w = [[int(e) for e in a.row(i)] for i in range(rows)]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    # Row op E applied to W must be undone in U (U <- U * E^{-1}); same for V
    # on the right.  Each helper keeps A = U*W*V invariant.
    def swap_rows(i, j):
        w[i], w[j] = w[j], w[i]
        for r in u:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in w:
            r[i], r[j] = r[j], r[i]
        v[i], v[j] = v[j], v[i]

    def add_row(src, dst, k):
        # w[dst] += k*w[src]; undo in U: col_src -= k*col_dst
        w[dst] = [x + k * y for x, y in zip(w[dst], w[src])]
        for r in u:
            r[src] -= k * r[dst]

    def add_col(src, dst, k):
        for r in w:
            r[dst] += k * r[src]
        v[src] = [x - k * y for x, y in zip(v[src], v[dst])]

    def negate_row(i):
        w[i] = [-x for x in w[i]]
        for r in u:
            r[i] = -r[i]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # Find a pivot of smallest absolute value in the trailing block.
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                val = abs(w[i][j])
                if val and (best is None or val < best):
                    best = val
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        # Clear row and column t by Euclidean steps.
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if w[i][t]:
                    q = w[i][t] // w[t][t]
                    add_row(t, i, -q)
                    if w[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if w[t][j]:
                    q = w[t][j] // w[t][t]
                    add_col(t, j, -q)
                    if w[t][j]:
                        swap_cols(t, j)
                        dirty = True
        # Make the pivot divide every remaining entry.
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if w[i][j] % w[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, t, 1)
            continue
        if w[t][t] < 0:
            negate_row(t)
        t += 1

    factors = tuple(w[i][i] for i in range(limit))
    result = SNFResult(
        U=Matrix.from_rows(u),
        D=Matrix.from_rows(w),
        V=Matrix.from_rows(v),
        invariant_factors=factors,
    )
    return result
