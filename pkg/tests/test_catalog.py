import pytest

from reidemeister.algfile import format_algebra, parse_algebra
from reidemeister.catalog import build, catalog_names, default_entries
from reidemeister.errors import BadParameter, UnknownEntry
from reidemeister.flags import nilradical
from reidemeister.morphisms import is_automorphism
from reidemeister.verdicts import VerdictKind, classify_solvable, rinfty_oddsolv


def test_name_parsing():
    assert build("t(3)").display_name == "t(3)"
    assert build("t", 3).algebra.dim == 6
    assert build("t(3)/z").algebra.dim == 5
    assert build("H(2)").algebra.dim == 3
    with pytest.raises(UnknownEntry):
        build("nosuch")
    with pytest.raises(BadParameter):
        build("t", 9)
    with pytest.raises(BadParameter):
        build("t")
    with pytest.raises(BadParameter):
        build("heisenberg", 3)
    with pytest.raises(BadParameter):
        build("t(3)", 4)
    assert len(catalog_names()) == 9


def test_expected_structure_matches_live_computation():
    for entry in default_entries() + [build("t", 5), build("u", 5)]:
        g = entry.algebra
        assert g.is_solvable() == entry.solvable
        assert g.is_nilpotent() == entry.nilpotent
        if entry.nilradical_dim is not None:
            assert nilradical(g).dim == entry.nilradical_dim
        verdict = rinfty_oddsolv(g)
        assert (verdict.kind, verdict.reason) == entry.oddsolv_expected


def test_t_family_numbers():
    for n in range(2, 6):
        entry = build("t", n)
        g = entry.algebra
        assert g.dim == n * (n + 1) // 2
        assert entry.nilradical_dim == 1 + n * (n - 1) // 2
        assert g.dim - entry.nilradical_dim == n - 1
        assert g.center().dim == 1
        quotient_entry = build("t/z", n)
        assert quotient_entry.algebra.dim == g.dim - 1
        assert quotient_entry.nilradical_dim == entry.nilradical_dim - 1


def test_t2_fixture_values():
    entry = build("t", 2)
    g = entry.algebra
    assert g.dim == 3
    assert entry.solvable and not entry.nilpotent
    assert nilradical(g).dim == 2
    assert rinfty_oddsolv(g).kind is VerdictKind.INFINITE


def test_sample_automorphisms_classify_as_expected():
    for entry in default_entries():
        g = entry.algebra
        for mat, expected in entry.sample_automorphisms:
            aut = is_automorphism(g, mat)  # validates bracket preservation
            assert classify_solvable(g, aut).kind is expected


def test_walnut_entry():
    entry = build("walnut")
    g = entry.algebra
    assert g.dim == 4
    assert g.bracket_basis(0, 1) == (0, 0, 1, 0)
    assert g.bracket_basis(0, 2)[1] == -1
    assert g.bracket_basis(1, 2)[3] == 1
    assert nilradical(g).dim == 3
    assert rinfty_oddsolv(g).reason.value == "not-split"


def test_heisenberg_entry_matches_u3():
    heis = build("heisenberg").algebra
    u3 = build("u", 3).algebra
    assert heis.dim == u3.dim == 3
    assert rinfty_oddsolv(heis).reason.value == "even-codim"


def test_file_format_round_trip():
    for entry in [build("axb"), build("t", 3), build("so2_r2"), build("walnut")]:
        text = format_algebra(entry.display_name, entry.algebra)
        name, parsed = parse_algebra(text)
        assert name == entry.display_name
        assert parsed.dim == entry.algebra.dim
        assert parsed.field == entry.algebra.field
        assert parsed.brackets == entry.algebra.brackets
