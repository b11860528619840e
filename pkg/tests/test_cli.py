import json

import pytest

from reidemeister.cli import main

HEISENBERG = """\
algebra heisenberg
field Q
dim 3
[1,2] = e3
"""

BROKEN = """\
algebra broken
field Q
dim 3
[1,2] = e3
[1,3] = e1
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_catalog_human(capsys):
    code, out, _ = run(capsys, "classify", "catalog:axb", "--aut", "1 0; 3 2")
    assert code == 0
    assert "R = ∞ (eigenvalue 1 of dφ; fix-subalgebra dim 1)" in out
    assert "char poly" in out


def test_classify_json_matches_human_content(capsys):
    code, out, _ = run(capsys, "--json", "classify", "catalog:axb", "--aut", "1 0; 3 2")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "infinite"
    assert payload["reason"] == "eigenvalue-one-found"
    assert payload["fix_dim"] == 1
    assert payload["char_poly"] == "x^2 - 3x + 2"
    assert payload["citations"] == ["solvable-dichotomy"]
    code, human, _ = run(capsys, "classify", "catalog:axb", "--aut", "1 0; 3 2")
    assert "fix-subalgebra dim 1" in human
    assert payload["char_poly"] in human
    assert "solvable-dichotomy" in human


def test_torus_command(capsys):
    code, out, _ = run(capsys, "torus", "--matrix", "2 1; 1 1")
    assert code == 0
    assert "R = 1; Fix trivial (|det(A-I)| = 1)" in out
    code, out, _ = run(capsys, "--json", "torus", "--matrix", "-1 0; 0 -1")
    payload = json.loads(out)
    assert payload["verdict"] == "one"
    assert payload["fix_order"] == 4
    assert payload["invariant_factors"] == [2, 2]
    code, out, _ = run(capsys, "torus", "--matrix", "0 1; 1 0")
    assert code == 0
    assert "Fix infinite" in out


def test_torus_not_unimodular_exits_1(capsys):
    code, _, err = run(capsys, "torus", "--matrix", "2 0; 0 1")
    assert code == 1
    assert "det" in err


def test_rinfty_catalog(capsys):
    code, out, _ = run(capsys, "rinfty", "catalog:t", "--n", "4")
    assert code == 0
    assert "topological R∞ certified: split solvable, dim(G/N) = 3 odd" in out
    code, out, _ = run(capsys, "rinfty", "catalog:so2_r2")
    assert code == 0
    assert "sufficient condition not established" in out
    code, out, _ = run(capsys, "--json", "rinfty", "catalog:heisenberg")
    payload = json.loads(out)
    assert payload["verdict"] == "inconclusive"
    assert payload["reason"] == "even-codim"
    assert payload["codim"] == 0


def test_check_command_on_file(tmp_path, capsys):
    path = tmp_path / "heis.alg"
    path.write_text(HEISENBERG)
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    assert "dim 3 over Q" in out
    assert "nilpotent: True" in out


def test_check_command_rejects_jacobi_violation(tmp_path, capsys):
    path = tmp_path / "broken.alg"
    path.write_text(BROKEN)
    code, _, err = run(capsys, "check", str(path))
    assert code == 1
    assert "Jacobi" in err


def test_classify_rejects_non_automorphism(capsys):
    code, _, err = run(capsys, "classify", "catalog:heisenberg", "--aut",
                       "2 0 0; 0 3 0; 0 0 5")
    assert code == 1
    assert "bracket" in err


def test_classify_file_automorphism(tmp_path, capsys):
    alg = tmp_path / "heis.alg"
    alg.write_text(HEISENBERG)
    aut = tmp_path / "aut.mat"
    aut.write_text("2 0 0; 0 3 0; 0 0 6")
    code, out, _ = run(capsys, "classify", str(alg), "--aut", f"@{aut}")
    assert code == 0
    assert "R = 1" in out


def test_catalog_list_and_analyze(capsys):
    code, out, _ = run(capsys, "catalog-list")
    assert code == 0
    assert "t(n)" in out and "walnut" in out
    code, out, _ = run(capsys, "catalog-analyze", "t", "--n", "2")
    assert code == 0
    assert "nilradical dim 2" in out
    assert "infinite" in out
    code, out, _ = run(capsys, "--json", "catalog-analyze", "walnut")
    payload = json.loads(out)
    assert payload["oddsolv"]["reason"] == "not-split"
    assert all(s["classified"] == s["expected"] for s in payload["samples"])


def test_finite_builtin(capsys):
    code, out, _ = run(capsys, "finite", "builtin:S3", "identity")
    assert code == 0
    assert "R = 3" in out
    code, out, _ = run(capsys, "finite", "builtin:cyclic(4)", "1 4 3 2")
    assert code == 0
    assert "R = 2" in out


def test_finite_with_subgroup(capsys):
    code, out, _ = run(capsys, "--json", "finite", "builtin:S3", "identity",
                       "--subgroup", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["reidemeister_number"] == 3
    assert payload["subgroup"]["quotient_bound_holds"] is True


def test_finite_file_round_trip(tmp_path, capsys):
    from reidemeister.finite import builtin_finite, format_group
    path = tmp_path / "z4.grp"
    path.write_text(format_group(builtin_finite("cyclic(4)")))
    code, out, _ = run(capsys, "finite", str(path), "1 4 3 2")
    assert code == 0
    assert "R = 2" in out


def test_finite_broken_table(tmp_path, capsys):
    path = tmp_path / "bad.grp"
    path.write_text("order 2\n1 2\n2 2\n")
    code, _, err = run(capsys, "finite", str(path), "identity")
    assert code == 1
    assert "inverse" in err


def test_finite_bad_automorphism(capsys):
    code, _, err = run(capsys, "finite", "builtin:cyclic(4)", "1 3 2 4")
    assert code == 1
    assert "multiplicative" in err


def test_sl2_verify(capsys):
    code, out, _ = run(capsys, "sl2-verify")
    assert code == 0
    assert "identity verified: entry(1,2)+entry(2,1) = r" in out


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify"])  # missing --aut
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["bogus-command"])
    assert exc.value.code == 2


def test_unknown_catalog_name(capsys):
    code, _, err = run(capsys, "rinfty", "catalog:nosuch")
    assert code == 1
    assert "catalog" in err or "unknown" in err.lower()


def test_bad_matrix_syntax(capsys):
    code, _, err = run(capsys, "torus", "--matrix", "1 2; 3")
    assert code == 1


def test_missing_file(capsys):
    code, _, err = run(capsys, "check", "/nonexistent/path.alg")
    assert code == 1
