from fractions import Fraction

import pytest

from reidemeister.catalog import build
from reidemeister.errors import NotSolvable, NotSplitOverField
from reidemeister.flags import complexify, nilradical, triangularize_flag
from reidemeister.lie import validate_algebra


def check_flag(g, flag):
    """The defining property: each V_i is ad-invariant and the induced action
    on V_i / V_{i-1} is the scalar lambda_i."""
    assert len(flag.subspaces) == g.dim
    for i, space in enumerate(flag.subspaces):
        assert space.dim == i + 1
        below = flag.subspaces[i - 1] if i else g.zero_subspace()
        v = flag.adapted_basis[i]
        for j in range(g.dim):
            x = g.basis_vector(j)
            image = g.bracket(x, v)
            lam = flag.weights[i][j]
            residual = tuple(a - lam * b for a, b in zip(image, v))
            assert below.contains(residual)
            for w in space.basis:
                assert space.contains(g.bracket(x, w))


def test_axb_flag():
    g = validate_algebra(2, {(0, 1): {1: 1}})
    flag = triangularize_flag(g)
    check_flag(g, flag)
    assert flag.subspaces[0].basis == ((Fraction(0), Fraction(1)),)
    assert flag.weights[0] == (Fraction(1), Fraction(0))
    assert flag.weights[1] == (Fraction(0), Fraction(0))


def test_heisenberg_flag_zero_weights():
    g = validate_algebra(3, {(0, 1): {2: 1}})
    flag = triangularize_flag(g)
    check_flag(g, flag)
    assert all(not any(row) for row in flag.weights)
    assert flag.subspaces[0].contains((0, 0, 1))


def test_abelian_fast_path():
    g = validate_algebra(4, {})
    flag = triangularize_flag(g)
    check_flag(g, flag)
    assert all(not any(row) for row in flag.weights)


def test_not_split_certificate():
    g = build("so2_r2").algebra
    with pytest.raises(NotSplitOverField) as err:
        triangularize_flag(g)
    assert str(err.value.factor) == "x^2 + 1"
    # over Q(i) the same algebra splits, with imaginary weights
    flag = triangularize_flag(complexify(g))
    check_flag(complexify(g), flag)
    values = {w for row in flag.weights for w in row}
    assert any(v.im for v in values)


def test_not_solvable_rejected():
    g = build("sl2").algebra
    with pytest.raises(NotSolvable):
        triangularize_flag(g)
    with pytest.raises(NotSolvable):
        nilradical(g)


def test_flag_on_catalog_solvables():
    for name, n in [("t", 2), ("t", 3), ("u", 3), ("H", 2), ("walnut", None)]:
        g = build(name, n).algebra
        if name == "walnut":
            flag = triangularize_flag(complexify(g))
            check_flag(complexify(g), flag)
        else:
            flag = triangularize_flag(g)
            check_flag(g, flag)


def test_nilradical_examples():
    axb = validate_algebra(2, {(0, 1): {1: 1}})
    n = nilradical(axb)
    assert n.dim == 1 and n.contains((0, 1))
    heis = validate_algebra(3, {(0, 1): {2: 1}})
    assert nilradical(heis).dim == 3
    for k in range(2, 5):
        t = build("t", k)
        assert nilradical(t.algebra).dim == 1 + k * (k - 1) // 2


def test_nilradical_properties():
    for name, n in [("t", 3), ("H", 3), ("so2_r2", None), ("walnut", None),
                    ("axb", None)]:
        g = build(name, n).algebra
        rad = nilradical(g)
        derived = g.derived_series()[1]
        for b in derived.basis:
            assert rad.contains(b)
        sub, _ = g.ideal_algebra(rad)
        assert sub.is_nilpotent()
        # elements outside carry a nonzero weight: their ad-action is not nilpotent
        from reidemeister.matrix import is_nilpotent
        for j in range(g.dim):
            e = g.basis_vector(j)
            if not rad.contains(e):
                assert not is_nilpotent(g.ad_matrix(e))


def test_derived_terminates_iff_flag_succeeds_or_not_split():
    # solvable algebras never raise NotSolvable from the flag builder
    for name, n in [("t", 2), ("so2_r2", None), ("walnut", None), ("u", 4)]:
        g = build(name, n).algebra
        assert g.is_solvable()
        try:
            triangularize_flag(g)
        except NotSplitOverField:
            pass
