import pytest

from fractions import Fraction

from reidemeister.algfile import format_algebra, parse_algebra
from reidemeister.errors import JacobiViolation, ParseError
from reidemeister.scalars import GaussRational

HEISENBERG = """\
# three-dimensional nilpotent example
algebra heisenberg
field Q
dim 3
[1,2] = e3
"""


def test_parse_basic():
    name, g = parse_algebra(HEISENBERG)
    assert name == "heisenberg"
    assert g.dim == 3 and g.field == "Q"
    assert g.bracket_basis(0, 1) == (0, 0, 1)


def test_parse_coefficients_and_names():
    text = """
algebra demo
field Q
dim 3
basis t x y
[1,2] = 2*e2 + -1/2*e3
[1,3] = e2 - e3
"""
    name, g = parse_algebra(text)
    assert g.basis_names == ("t", "x", "y")
    assert g.bracket_basis(0, 1) == (0, Fraction(2), Fraction(-1, 2))
    assert g.bracket_basis(0, 2) == (0, Fraction(1), Fraction(-1))


def test_parse_gaussian():
    text = """
algebra gauss
field Qi
dim 2
[1,2] = (1+2i)*e2
"""
    _, g = parse_algebra(text)
    assert g.bracket_basis(0, 1)[1] == GaussRational(1, 2)


def test_round_trip_with_gaussian_and_names():
    text = format_algebra("gauss", parse_algebra("""
algebra gauss
field Qi
dim 3
basis t u v
[1,2] = (1-i)*e2
[1,3] = 3/2*e3
""")[1])
    name, g = parse_algebra(text)
    assert name == "gauss"
    assert g.basis_names == ("t", "u", "v")
    assert g.bracket_basis(0, 1)[1] == GaussRational(1, -1)
    assert g.bracket_basis(0, 2)[2] == GaussRational.of(Fraction(3, 2))


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_algebra("algebra x\nfield Q\ndim 2\n[1,2] = e5\n")
    assert "line 4" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_algebra("algebra x\nfield R\ndim 2\n")
    assert "line 2" in str(err.value)
    with pytest.raises(ParseError):
        parse_algebra("field Q\ndim 2\n")  # missing name
    with pytest.raises(ParseError) as err:
        parse_algebra("algebra x\n[1,2] = e1\n")
    assert "line 2" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_algebra("algebra x\nfield Q\ndim 2\n[2,1] = e1\n")
    assert "line 4" in str(err.value)


def test_jacobi_violation_from_file():
    bad = """
algebra broken
field Q
dim 3
[1,2] = e3
[1,3] = e1
"""
    with pytest.raises(JacobiViolation):
        parse_algebra(bad)
