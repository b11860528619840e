from fractions import Fraction

import pytest

from reidemeister.errors import JacobiViolation, NotAnIdeal
from reidemeister.lie import Subspace, validate_algebra
from reidemeister.matrix import Matrix


def heisenberg():
    return validate_algebra(3, {(0, 1): {2: 1}})


def axb():
    return validate_algebra(2, {(0, 1): {1: 1}})


def t2():
    # basis E11, E22, E12
    return validate_algebra(3, {(0, 2): {2: 1}, (1, 2): {2: -1}},
                            basis_names=("E11", "E22", "E12"))


def sl2():
    return validate_algebra(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})


def test_validate_examples():
    assert heisenberg().dim == 3
    assert axb().dim == 2
    with pytest.raises(JacobiViolation) as err:
        validate_algebra(3, {(0, 1): {2: 1}, (0, 2): {0: 1}})
    assert any(err.value.residual)


def test_antisymmetry_synthesized():
    g = heisenberg()
    assert g.bracket_basis(1, 0) == (Fraction(0), Fraction(0), Fraction(-1))
    assert g.bracket_basis(2, 2) == g.zero_vector()


def test_ad_matrix_examples():
    g = heisenberg()
    ad1 = g.ad_matrix(g.basis_vector(0))
    assert ad1 == Matrix.from_rows([[0, 0, 0], [0, 0, 0], [0, 1, 0]])
    a = axb()
    assert a.ad_matrix(a.basis_vector(0)) == Matrix.from_rows([[0, 0], [0, 1]])
    # ad x annihilates x
    x = (Fraction(2), Fraction(-1), Fraction(5))
    assert g.ad_matrix(x).apply(x) == g.zero_vector()


def test_series():
    h = heisenberg()
    assert [s.dim for s in h.lower_central_series()] == [3, 1, 0]
    assert h.is_nilpotent() and h.is_solvable()
    g = t2()
    assert [s.dim for s in g.derived_series()] == [3, 1, 0]
    assert g.is_solvable() and not g.is_nilpotent()
    s = sl2()
    assert [x.dim for x in s.derived_series()] == [3]
    assert not s.is_solvable()


def test_center_and_centralizer():
    h = heisenberg()
    c = h.center()
    assert c.dim == 1 and c.contains((0, 0, 1))
    assert axb().center().dim == 0
    abelian = validate_algebra(4, {})
    assert abelian.center().dim == 4
    # centralizer of the center is everything; of a noncentral line, smaller
    assert h.centralizer(c).dim == 3
    line = Subspace.from_vectors([(1, 0, 0)], 3)
    assert h.centralizer(line).dim == 2


def test_derivations():
    assert len(validate_algebra(2, {}).derivations()) == 4
    ders = heisenberg().derivations()
    assert len(ders) == 6
    s = sl2()
    sders = s.derivations()
    assert len(sders) == 3
    # Der(sl2) = inner derivations: every ad matrix lies in the span
    ad_flat = [list(s.ad_matrix(s.basis_vector(i)).entries) for i in range(3)]
    span = Subspace.from_vectors([tuple(d.entries) for d in sders], 9)
    for row in ad_flat:
        assert span.contains(tuple(row))


def test_derivation_property_holds():
    g = t2()
    for d in g.derivations():
        for i in range(g.dim):
            for j in range(g.dim):
                lhs = d.apply(g.bracket_basis(i, j))
                rhs_a = g.bracket(d.column(i), g.basis_vector(j))
                rhs_b = g.bracket(g.basis_vector(i), d.column(j))
                assert lhs == tuple(a + b for a, b in zip(rhs_a, rhs_b))


def test_quotient_examples():
    g = t2()
    ideal = Subspace.from_vectors([(0, 0, 1)], 3)
    q, proj = g.quotient_algebra(ideal)
    assert q.dim == 2 and q.is_abelian()
    assert proj.rows == 2 and proj.cols == 3
    h = heisenberg()
    q2, _ = h.quotient_algebra(h.center())
    assert q2.dim == 2 and q2.is_abelian()
    q3, _ = h.quotient_algebra(h.zero_subspace())
    assert q3.dim == 3 and q3.brackets == h.brackets
    with pytest.raises(NotAnIdeal):
        g.quotient_algebra(Subspace.from_vectors([(1, 0, 0)], 3))


def test_ideal_algebra():
    g = t2()
    derived = g.derived_series()[1]
    sub, basis = g.ideal_algebra(derived)
    assert sub.dim == 1 and sub.is_abelian()
    assert basis.rows == 1 and basis.cols == 3


def test_subspace_canonical_equality():
    a = Subspace.from_vectors([(2, 4, 0), (0, 0, 3)], 3)
    b = Subspace.from_vectors([(1, 2, 3), (2, 4, 9)], 3)
    assert a == b
    assert a.coordinates_of((1, 2, 6)) is not None
    assert a.coordinates_of((1, 0, 0)) is None


def test_subspace_sum_intersection():
    e1 = Subspace.from_vectors([(1, 0, 0)], 3)
    e12 = Subspace.from_vectors([(1, 0, 0), (0, 1, 0)], 3)
    e23 = Subspace.from_vectors([(0, 1, 0), (0, 0, 1)], 3)
    assert (e1 + e23).dim == 3
    meet = e12.intersect(e23)
    assert meet.dim == 1 and meet.contains((0, 1, 0))
    assert e1.intersect(e23).is_zero
