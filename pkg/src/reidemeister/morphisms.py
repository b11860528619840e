"""Validated Lie algebra automorphisms and their restrictions / quotients."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, NotAutomorphism, NotInvariant, NotInvertible
from .lie import LieAlgebra, Subspace
from .matrix import Matrix, det, lift_to_field


@dataclass(frozen=True)
class AutomorphismMatrix:
    """An invertible matrix checked to preserve all brackets of its algebra."""

    algebra: LieAlgebra
    m: Matrix

    @property
    def dim(self) -> int:
        return self.m.rows


def is_automorphism(g: LieAlgebra, m: Matrix) -> AutomorphismMatrix:
    """Validate invertibility and bracket preservation on all basis pairs."""
    if not m.is_square or m.rows != g.dim:
        raise DimensionMismatch(
            f"automorphism of a {g.dim}-dimensional algebra needs a {g.dim}x{g.dim} matrix"
        )
    m = lift_to_field(m, g.field)
    if not det(m):
        raise NotInvertible("matrix is singular, not an automorphism")
    columns = [m.column(j) for j in range(g.dim)]
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = m.apply(g.bracket_basis(i, j))
            rhs = g.bracket(columns[i], columns[j])
            residual = tuple(a - b for a, b in zip(lhs, rhs))
            if any(residual):
                raise NotAutomorphism(i, j, residual)
    return AutomorphismMatrix(g, m)


def _check_invariant(a: AutomorphismMatrix, ideal: Subspace):
    for b in ideal.basis:
        if not ideal.contains(a.m.apply(b)):
            raise NotInvariant("subspace is not invariant under the automorphism")


def restrict_automorphism(a: AutomorphismMatrix, ideal: Subspace) -> AutomorphismMatrix:
    """The automorphism induced on an invariant bracket-closed subspace,
    expressed in the subspace's echelon basis."""
    _check_invariant(a, ideal)
    sub_algebra, _basis = a.algebra.ideal_algebra(ideal)
    k = ideal.dim
    cols = []
    for b in ideal.basis:
        coords = ideal.coordinates_of(a.m.apply(b))
        cols.append(coords)
    mat = Matrix(k, k, [cols[j][i] for i in range(k) for j in range(k)])
    return is_automorphism(sub_algebra, mat)


def induced_automorphism(a: AutomorphismMatrix, ideal: Subspace) -> AutomorphismMatrix:
    """The automorphism induced on the quotient algebra by an invariant ideal."""
    _check_invariant(a, ideal)
    quotient, projection = a.algebra.quotient_algebra(ideal)
    comp = a.algebra.complement_columns(ideal)
    m = len(comp)
    cols = []
    for c in comp:
        image = a.m.column(c)
        cols.append(projection.apply(image))
    mat = Matrix(m, m, [cols[j][i] for i in range(m) for j in range(m)])
    return is_automorphism(quotient, mat)


def restriction_matrix(a: AutomorphismMatrix, ideal: Subspace) -> Matrix:
    """Restriction as a bare matrix; works for the zero subspace too (0x0)."""
    _check_invariant(a, ideal)
    k = ideal.dim
    if k == 0:
        return Matrix(0, 0, [])
    cols = [ideal.coordinates_of(a.m.apply(b)) for b in ideal.basis]
    return Matrix(k, k, [cols[j][i] for i in range(k) for j in range(k)])


def quotient_matrix(a: AutomorphismMatrix, ideal: Subspace) -> Matrix:
    """Quotient action as a bare matrix; 0x0 when the ideal is everything."""
    _check_invariant(a, ideal)
    g = a.algebra
    comp = g.complement_columns(ideal)
    m = len(comp)
    if m == 0:
        return Matrix(0, 0, [])
    cols = []
    for c in comp:
        reduced = ideal.reduce(a.m.column(c))
        cols.append([reduced[b] for b in comp])
    return Matrix(m, m, [cols[j][i] for i in range(m) for j in range(m)])
