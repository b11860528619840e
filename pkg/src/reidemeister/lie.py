"""Lie algebras presented by structure constants, with exact structural ops.

An algebra lives over Q or Q(i); brackets are stored sparsely for i < j and
antisymmetry is synthesized, never stored twice.  The Jacobi identity is
checked exactly at construction, so every LieAlgebra value in the system is
genuinely a Lie algebra.

Subspaces carry reduced-row-echelon bases, which makes equality of subspaces
equality of representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, JacobiViolation, NotAnIdeal
from .matrix import Matrix, kernel_basis, rref
from .scalars import FIELD_Q, FIELD_QI, coerce_to_field, field_one, field_zero


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n in reduced echelon form (canonical representative)."""

    ambient_dim: int
    field: str
    basis: tuple  # tuple of row tuples, RREF, no zero rows

    @staticmethod
    def from_vectors(vectors, ambient_dim: int, field: str = FIELD_Q) -> "Subspace":
        vectors = [tuple(coerce_to_field(e, field) for e in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(
                    f"vector of length {len(v)} in ambient dimension {ambient_dim}"
                )
        rows, _ = rref(vectors)
        return Subspace(ambient_dim, field, tuple(rows))

    @staticmethod
    def zero(ambient_dim: int, field: str = FIELD_Q) -> "Subspace":
        return Subspace(ambient_dim, field, ())

    @staticmethod
    def full(ambient_dim: int, field: str = FIELD_Q) -> "Subspace":
        one = field_one(field)
        zero = field_zero(field)
        rows = tuple(
            tuple(one if i == j else zero for j in range(ambient_dim))
            for i in range(ambient_dim)
        )
        return Subspace(ambient_dim, field, rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def pivots(self) -> tuple:
        cols = []
        for row in self.basis:
            for c, e in enumerate(row):
                if e:
                    cols.append(c)
                    break
        return tuple(cols)

    def reduce(self, vec):
        """Eliminate this subspace from vec; the residual is zero iff vec is inside."""
        residual = [coerce_to_field(e, self.field) for e in vec]
        for row, p in zip(self.basis, self.pivots):
            f = residual[p]
            if f:
                for c in range(self.ambient_dim):
                    residual[c] = residual[c] - f * row[c]
        return tuple(residual)

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def coordinates_of(self, vec):
        """Coefficients of vec in the echelon basis, or None if outside."""
        residual = [coerce_to_field(e, self.field) for e in vec]
        coords = []
        for row, p in zip(self.basis, self.pivots):
            f = residual[p]
            coords.append(f)
            if f:
                for c in range(self.ambient_dim):
                    residual[c] = residual[c] - f * row[c]
        if any(residual):
            return None
        return tuple(coords)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.from_vectors(
            list(self.basis) + list(other.basis), self.ambient_dim, self.field
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via annihilators: rowspace(A) = null(eqs_A)."""
        self._check_ambient(other)
        constraints = list(self.annihilator()) + list(other.annihilator())
        if not constraints:
            return Subspace.full(self.ambient_dim, self.field)
        vectors = kernel_basis(Matrix.from_rows(constraints))
        return Subspace.from_vectors(vectors, self.ambient_dim, self.field)

    def annihilator(self):
        """Rows spanning {f : f(v) = 0 for all v here} under the standard pairing."""
        if self.is_zero:
            return ()
        return tuple(kernel_basis(Matrix.from_rows(self.basis)))

    def image_under(self, m: Matrix) -> "Subspace":
        return Subspace.from_vectors(
            [m.apply(v) for v in self.basis], m.rows, self.field
        )

    def _check_ambient(self, other):
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise DimensionMismatch("subspaces in different ambient spaces")


class LieAlgebra:
    __slots__ = ("dim", "field", "brackets", "basis_names")

    def __init__(self, dim, field, brackets, basis_names):
        self.dim = dim
        self.field = field
        self.brackets = brackets
        self.basis_names = basis_names

    @property
    def zero(self):
        return field_zero(self.field)

    @property
    def one(self):
        return field_one(self.field)

    def zero_vector(self):
        return (self.zero,) * self.dim

    def basis_vector(self, i: int):
        return tuple(self.one if j == i else self.zero for j in range(self.dim))

    def name_of(self, i: int) -> str:
        return self.basis_names[i]

    def bracket_basis(self, i: int, j: int):
        """[e_i, e_j] as a coordinate vector (antisymmetry synthesized)."""
        if i == j:
            return self.zero_vector()
        if i < j:
            return self.brackets.get((i, j), self.zero_vector())
        vec = self.brackets.get((j, i))
        return tuple(-c for c in vec) if vec else self.zero_vector()

    def bracket(self, x, y):
        """Bilinear extension of the basis brackets."""
        out = [self.zero] * self.dim
        for (i, j), vec in self.brackets.items():
            coeff = x[i] * y[j] - x[j] * y[i]
            if coeff:
                for k, c in enumerate(vec):
                    if c:
                        out[k] = out[k] + coeff * c
        return tuple(out)

    def ad_matrix(self, x) -> Matrix:
        """Matrix of y -> [x, y] in the defining basis."""
        if len(x) != self.dim:
            raise DimensionMismatch(f"vector of length {len(x)} in dimension {self.dim}")
        x = tuple(coerce_to_field(e, self.field) for e in x)
        cols = [[self.zero] * self.dim for _ in range(self.dim)]
        for (i, j), vec in self.brackets.items():
            if x[i]:
                for k, c in enumerate(vec):
                    if c:
                        cols[j][k] = cols[j][k] + x[i] * c
            if x[j]:
                for k, c in enumerate(vec):
                    if c:
                        cols[i][k] = cols[i][k] - x[j] * c
        return Matrix(self.dim, self.dim,
                      [cols[j][k] for k in range(self.dim) for j in range(self.dim)])

    # -- structural subspaces --------------------------------------------------

    def full_subspace(self) -> Subspace:
        return Subspace.full(self.dim, self.field)

    def zero_subspace(self) -> Subspace:
        return Subspace.zero(self.dim, self.field)

    def product_span(self, s: Subspace, t: Subspace) -> Subspace:
        vecs = [self.bracket(u, v) for u in s.basis for v in t.basis]
        return Subspace.from_vectors(vecs, self.dim, self.field)

    def derived_series(self) -> list[Subspace]:
        """g >= [g,g] >= [[g,g],[g,g]] >= ..., listed until stabilization."""
        series = [self.full_subspace()]
        while True:
            nxt = self.product_span(series[-1], series[-1])
            if nxt.dim == series[-1].dim:
                break
            series.append(nxt)
        return series

    def lower_central_series(self) -> list[Subspace]:
        series = [self.full_subspace()]
        while True:
            nxt = self.product_span(self.full_subspace(), series[-1])
            if nxt.dim == series[-1].dim:
                break
            series.append(nxt)
        return series

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].is_zero

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].is_zero

    def is_abelian(self) -> bool:
        return not self.brackets

    def center(self) -> Subspace:
        """Common kernel of all ad maps."""
        rows = []
        for i in range(self.dim):
            rows.extend(self.ad_matrix(self.basis_vector(i)).to_rows())
        if not any(any(r) for r in rows):
            return self.full_subspace()
        vecs = kernel_basis(Matrix.from_rows(rows))
        return Subspace.from_vectors(vecs, self.dim, self.field)

    def centralizer(self, s: Subspace) -> Subspace:
        """Elements commuting with everything in s."""
        rows = []
        for v in s.basis:
            rows.extend(self.ad_matrix(v).to_rows())
        if not rows or not any(any(r) for r in rows):
            return self.full_subspace()
        vecs = kernel_basis(Matrix.from_rows(rows))
        return Subspace.from_vectors(vecs, self.dim, self.field)

    def derivations(self) -> list[Matrix]:
        """Basis of all D with D[x,y] = [Dx,y] + [x,Dy], one exact linear solve.

        Unknowns are the dim^2 entries of D (row-major); each basis pair and
        target coordinate contributes one homogeneous equation.
        """
        n = self.dim
        rows = []
        for i in range(n):
            for j in range(i + 1, n):
                c_ij = self.bracket_basis(i, j)
                for m in range(n):
                    row = [self.zero] * (n * n)
                    for s in range(n):
                        if c_ij[s]:
                            row[m * n + s] = row[m * n + s] + c_ij[s]
                    for k in range(n):
                        ckj_m = self.bracket_basis(k, j)[m]
                        if ckj_m:
                            row[k * n + i] = row[k * n + i] - ckj_m
                        cik_m = self.bracket_basis(i, k)[m]
                        if cik_m:
                            row[k * n + j] = row[k * n + j] - cik_m
                    if any(row):
                        rows.append(row)
        if not rows:
            one = self.one
            return [
                Matrix(n, n, [one if idx == r * n + s else self.zero
                              for idx in range(n * n)])
                for r in range(n) for s in range(n)
            ]
        vecs = kernel_basis(Matrix.from_rows(rows))
        return [Matrix(n, n, v) for v in vecs]

    # -- ideals and quotients ----------------------------------------------------

    def is_ideal(self, s: Subspace) -> bool:
        for i in range(self.dim):
            e = self.basis_vector(i)
            for v in s.basis:
                if not s.contains(self.bracket(e, v)):
                    return False
        return True

    def quotient_algebra(self, ideal: Subspace):
        """Quotient by an ideal; returns (algebra, projection matrix).

        The quotient basis is the set of standard basis vectors at the ideal's
        non-pivot coordinates, so the projection has a one-sided inverse given
        by the same coordinates (see `complement_columns`).
        """
        if not self.is_ideal(ideal):
            raise NotAnIdeal("subspace is not an ideal")
        comp = self.complement_columns(ideal)
        m = len(comp)
        proj_rows = []
        for b in range(m):
            proj_rows.append([self.zero] * self.dim)
        for j in range(self.dim):
            reduced = ideal.reduce(self.basis_vector(j))
            for b, c in enumerate(comp):
                proj_rows[b][j] = reduced[c]
        projection = Matrix.from_rows(proj_rows)
        brackets = {}
        for a in range(m):
            for b in range(a + 1, m):
                w = self.bracket_basis(comp[a], comp[b])
                coords = projection.apply(w)
                if any(coords):
                    brackets[(a, b)] = coords
        names = tuple(f"{self.name_of(c)}~" for c in comp)
        quotient = validate_algebra(m, brackets, field=self.field, basis_names=names)
        return quotient, projection

    def complement_columns(self, ideal: Subspace) -> tuple:
        pivots = set(ideal.pivots)
        return tuple(c for c in range(self.dim) if c not in pivots)

    def ideal_algebra(self, s: Subspace):
        """The (sub)algebra structure on a bracket-closed subspace.

        Returns (algebra, basis matrix) where the basis matrix rows are the
        subspace's echelon basis expressed in the ambient coordinates.
        """
        k = s.dim
        brackets = {}
        for a in range(k):
            for b in range(a + 1, k):
                w = self.bracket(s.basis[a], s.basis[b])
                coords = s.coordinates_of(w)
                if coords is None:
                    raise NotAnIdeal("subspace is not closed under the bracket")
                if any(coords):
                    brackets[(a, b)] = coords
        names = tuple(f"b{a + 1}" for a in range(k))
        algebra = validate_algebra(k, brackets, field=self.field, basis_names=names)
        basis_matrix = Matrix.from_rows(list(s.basis)) if k else Matrix(0, self.dim, [])
        return algebra, basis_matrix

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, field={self.field!r})"


def validate_algebra(dim, brackets, field: str = FIELD_Q, basis_names=None) -> LieAlgebra:
    """Build a LieAlgebra after checking antisymmetry input form and Jacobi.

    `brackets` maps 0-based pairs (i, j) with i < j to either a coordinate
    sequence of length dim or a sparse {index: coefficient} mapping; missing
    brackets are zero.
    """
    if dim < 1:
        raise DimensionMismatch("algebras have dimension >= 1")
    if field not in (FIELD_Q, FIELD_QI):
        raise DimensionMismatch(f"unknown field {field!r}")
    zero = field_zero(field)
    clean = {}
    for (i, j), value in brackets.items():
        if not (0 <= i < j < dim):
            raise DimensionMismatch(f"bracket index ({i},{j}) out of range for i<j<dim")
        if isinstance(value, dict):
            vec = [zero] * dim
            for k, c in value.items():
                vec[k] = coerce_to_field(c, field)
        else:
            vec = [coerce_to_field(c, field) for c in value]
            if len(vec) != dim:
                raise DimensionMismatch(f"bracket ({i},{j}) has length {len(vec)}")
        if any(vec):
            clean[(i, j)] = tuple(vec)
    if basis_names is None:
        basis_names = tuple(f"e{idx + 1}" for idx in range(dim))
    else:
        basis_names = tuple(basis_names)
        if len(basis_names) != dim:
            raise DimensionMismatch("basis_names length must equal dim")
    algebra = LieAlgebra(dim, field, clean, basis_names)
    _check_jacobi(algebra)
    return algebra


def _check_jacobi(g: LieAlgebra):
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            c_ij = g.bracket_basis(i, j)
            if not any(c_ij):
                c_ij = None
            for k in range(j + 1, g.dim):
                total = [g.zero] * g.dim
                for vec, idx in (
                    (c_ij, k),
                    (g.bracket_basis(j, k), i),
                    (g.bracket_basis(k, i), j),
                ):
                    if vec is None:
                        continue
                    term = g.bracket(vec, g.basis_vector(idx))
                    for m in range(g.dim):
                        total[m] = total[m] + term[m]
                if any(total):
                    raise JacobiViolation(i, j, k, tuple(total))
