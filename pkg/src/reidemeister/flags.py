"""Constructive triangularization of solvable Lie algebras over Q / Q(i).

For a solvable algebra the ad-action can be put in triangular form over the
base field whenever every ad eigenvalue lies in that field.  The algorithm
returns a full invariant flag together with the weight functionals giving the
diagonal action; the nilradical then falls out as the common kernel of the
weights.

The common-eigenvector search walks an ideal chain refining the derived
series one generator at a time: the common weight space of the processed
(deeper) generators is invariant under the next generator, whose restriction
is examined for an eigenvalue in the field.  Eigenvalues are found by
rational or Gaussian-rational root search only; anything irrational raises
NotSplitOverField with a root-free certificate factor.
"""

from __future__ import annotations

from dataclasses import dataclass

from itertools import zip_longest

from .errors import NotSolvable, NotSplitOverField
from .lie import LieAlgebra, Subspace, validate_algebra
from .matrix import Matrix, inverse, is_nilpotent, kernel_basis, rref
from .scalars import FIELD_Q, FIELD_QI
from .unipoly import UniPoly, field_roots, squarefree_part


@dataclass(frozen=True)
class FlagData:
    """Invariant flag 0 < V_1 < ... < V_n with scalar weights on each step.

    weights[i] is the row of values lambda_i(e_j) on the defining basis; the
    adapted basis satisfies ad(x) v_i = lambda_i(x) v_i modulo V_{i-1}.
    """

    algebra: LieAlgebra
    subspaces: tuple
    weights: tuple
    adapted_basis: tuple

    @property
    def weight_matrix_rows(self):
        return self.weights


def _echelon_coordinates(rows, pivots, vec):
    """Coordinates of vec in an echelon basis, or None if outside the span."""
    residual = list(vec)
    coords = []
    for row, p in zip(rows, pivots):
        f = residual[p]
        coords.append(f)
        if f:
            for c in range(len(residual)):
                residual[c] = residual[c] - f * row[c]
    if any(residual):
        return None
    return coords


class _QuotientAction:
    """Induced ad-action of chosen generators on g modulo an invariant subspace."""

    def __init__(self, g: LieAlgebra, ad_gens, flag_span: Subspace):
        self.comp = g.complement_columns(flag_span)
        self.dim = len(self.comp)
        self.span = flag_span
        self.ad_gens = ad_gens
        self.g = g

    def induced(self, k: int) -> Matrix:
        ad = self.ad_gens[k]
        cols = []
        for c in self.comp:
            reduced = self.span.reduce(ad.column(c))
            cols.append([reduced[b] for b in self.comp])
        return Matrix(self.dim, self.dim,
                      [cols[j][i] for i in range(self.dim) for j in range(self.dim)])


def _restrict_to(rows, pivots, mat: Matrix) -> Matrix:
    """Matrix of mat on the invariant subspace spanned by echelon rows."""
    k = len(rows)
    cols = []
    for w in rows:
        image = mat.apply(w)
        coords = _echelon_coordinates(rows, pivots, image)
        if coords is None:
            raise AssertionError("subspace not invariant; flag construction broken")
        cols.append(coords)
    return Matrix(k, k, [cols[j][i] for i in range(k) for j in range(k)])


def _is_scalar(mat: Matrix):
    """The scalar c when mat == c*I, else None."""
    if mat.rows == 0:
        return None
    c = mat.entry(0, 0)
    zero = c * 0
    for i in range(mat.rows):
        for j in range(mat.cols):
            want = c if i == j else zero
            if mat.entry(i, j) != want:
                return None
    return c


def _root_sort_key(r):
    if hasattr(r, "re"):
        return (r.re, r.im)
    return (r, 0)


def _local_min_poly(mat: Matrix, seed, one) -> UniPoly:
    """Monic minimal polynomial of mat on the cyclic subspace generated by seed.

    Its roots are eigenvalues of mat, and any root in the base field has an
    actual eigenvector (divide the relation by the linear factor); a root-free
    local polynomial therefore certifies an eigenvalue outside the field.
    Much cheaper than a full characteristic polynomial on large restrictions.
    """
    zero = one * 0
    echelon = []  # (pivot index, normalized row, combination over Krylov vectors)
    cur = tuple(seed)
    k = 0
    while True:
        row = list(cur)
        combo = [zero] * k + [one]
        for pivot, erow, ecombo in echelon:
            f = row[pivot]
            if f:
                row = [a - f * b for a, b in zip(row, erow)]
                combo = [a - f * b for a, b in
                         zip_longest(combo, ecombo, fillvalue=zero)]
        if not any(row):
            return UniPoly(combo)
        pivot = next(i for i, e in enumerate(row) if e)
        inv = row[pivot]
        row = [e / inv for e in row]
        combo = [c / inv for c in combo]
        echelon.append((pivot, row, combo))
        cur = mat.apply(cur)
        k += 1


def chain_generators(g: LieAlgebra):
    """Ordered basis x_1..x_n of g such that every suffix span is an ideal in
    the previous one (a refinement of the derived series)."""
    series = g.derived_series()
    if not series[-1].is_zero:
        raise NotSolvable("derived series does not terminate at zero")
    levels = []
    span = g.zero_subspace()
    for depth in range(len(series) - 1, -1, -1):
        new_gens = []
        for b in series[depth].basis:
            if not span.contains(b):
                new_gens.append(b)
                span = span + Subspace.from_vectors([b], g.dim, g.field)
        levels.append(new_gens)
    ordered = []
    for level in reversed(levels):
        ordered.extend(level)
    return ordered


def triangularize_flag(g: LieAlgebra) -> FlagData:
    """Full invariant flag with field weights; raises NotSolvable or
    NotSplitOverField (with a certificate) when impossible."""
    gens = chain_generators(g)  # raises NotSolvable if not solvable
    n = g.dim

    if g.is_abelian():
        basis = [g.basis_vector(i) for i in range(n)]
        subspaces = tuple(
            Subspace.from_vectors(basis[: i + 1], n, g.field) for i in range(n)
        )
        zero_row = g.zero_vector()
        return FlagData(g, subspaces, tuple(zero_row for _ in range(n)), tuple(basis))

    ad_gens = [g.ad_matrix(x) for x in gens]
    basis_change = Matrix.from_rows([list(col) for col in zip(*gens)])
    basis_change_inv = inverse(basis_change)

    adapted = []
    subspaces = []
    weights = []
    span = g.zero_subspace()
    for _step in range(n):
        action = _QuotientAction(g, ad_gens, span)
        m = action.dim
        one = g.one
        w_rows = [tuple(one if i == j else g.zero for j in range(m)) for i in range(m)]
        w_pivots = list(range(m))
        gen_weights = [g.zero] * n
        for k in range(n - 1, -1, -1):
            rho = _restrict_to(w_rows, w_pivots, action.induced(k))
            scalar = _is_scalar(rho)
            if scalar is not None:
                gen_weights[k] = scalar
                continue
            seed = tuple(one if i == 0 else g.zero for i in range(rho.rows))
            local = _local_min_poly(rho, seed, one)
            roots = field_roots(local, g.field)
            if not roots:
                raise NotSplitOverField(squarefree_part(local), witness=gens[k])
            mu = min(roots, key=_root_sort_key)
            gen_weights[k] = mu
            shifted = rho - mu * Matrix.identity(rho.rows, one)
            eigen_coords = kernel_basis(shifted)
            vectors = []
            for coords in eigen_coords:
                vec = [g.zero] * m
                for c, w in zip(coords, w_rows):
                    if c:
                        for idx in range(m):
                            vec[idx] = vec[idx] + c * w[idx]
                vectors.append(tuple(vec))
            w_rows, w_pivots = rref(vectors)
        # Lift the first common eigenvector back to g coordinates.
        head = w_rows[0]
        vec = [g.zero] * n
        for pos, c in zip(action.comp, head):
            vec[pos] = c
        adapted.append(tuple(vec))
        span = span + Subspace.from_vectors([vec], n, g.field)
        subspaces.append(span)
        # Translate generator weights into a functional on the defining basis.
        lam = []
        for j in range(n):
            acc = g.zero
            for k in range(n):
                if gen_weights[k]:
                    acc = acc + gen_weights[k] * basis_change_inv.entry(k, j)
            lam.append(acc)
        weights.append(tuple(lam))
    return FlagData(g, tuple(subspaces), tuple(weights), tuple(adapted))


def complexify(g: LieAlgebra) -> LieAlgebra:
    """The same structure constants read over Q(i)."""
    return validate_algebra(g.dim, dict(g.brackets), field=FIELD_QI,
                            basis_names=g.basis_names)


def nilradical(g: LieAlgebra, flag: FlagData | None = None) -> Subspace:
    """Largest nilpotent ideal of a solvable algebra: the common kernel of the
    flag weights.

    When the algebra does not split over Q the computation is retried over
    Q(i) and the Gaussian weight constraints are intersected with the real
    form (complexification commutes with the nilradical in characteristic 0).
    """
    constraint_rows = []
    if flag is None:
        try:
            flag = triangularize_flag(g)
        except NotSplitOverField:
            if g.field != FIELD_Q:
                raise
            complex_flag = triangularize_flag(complexify(g))
            for row in complex_flag.weights:
                re_row = tuple(c.re for c in row)
                im_row = tuple(c.im for c in row)
                if any(re_row):
                    constraint_rows.append(re_row)
                if any(im_row):
                    constraint_rows.append(im_row)
    if flag is not None:
        for row in flag.weights:
            if any(row):
                constraint_rows.append(row)
    if not constraint_rows:
        result = g.full_subspace()
    else:
        vecs = kernel_basis(Matrix.from_rows(constraint_rows))
        result = Subspace.from_vectors(vecs, g.dim, g.field)
    _verify_nilradical(g, result)
    return result


def _verify_nilradical(g: LieAlgebra, n: Subspace):
    derived = g.product_span(g.full_subspace(), g.full_subspace())
    for b in derived.basis:
        assert n.contains(b), "nilradical must contain the derived algebra"
    assert g.is_ideal(n), "nilradical must be an ideal"
    for b in n.basis:
        assert is_nilpotent(g.ad_matrix(b)), \
            "nilradical elements must have nilpotent ad-action"
