"""Line-based text format for structure-constant algebras.

    # optional comments anywhere
    algebra NAME
    field Q            (or Qi)
    dim N
    basis t x y z      (optional labels)
    [1,2] = e3
    [1,3] = 2*e1 + -1/2*e2
    [2,3] = (1+2i)*e1

Indices are 1-based; unspecified brackets are zero.  Parse errors report the
offending line number.
"""

from __future__ import annotations

from .errors import ParseError
from .lie import LieAlgebra, validate_algebra
from .scalars import FIELD_Q, FIELD_QI, format_scalar, parse_scalar


def parse_algebra(text: str):
    """Parse the format above; returns (name, LieAlgebra)."""
    name = None
    field = None
    dim = None
    basis_names = None
    brackets = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("algebra"):
            parts = line.split(None, 1)
            if len(parts) != 2:
                raise ParseError("expected `algebra NAME`", lineno)
            name = parts[1].strip()
        elif line.startswith("field"):
            parts = line.split()
            if len(parts) != 2 or parts[1] not in (FIELD_Q, FIELD_QI):
                raise ParseError("expected `field Q` or `field Qi`", lineno)
            field = parts[1]
        elif line.startswith("dim"):
            parts = line.split()
            try:
                dim = int(parts[1])
            except (IndexError, ValueError):
                raise ParseError("expected `dim N`", lineno) from None
        elif line.startswith("basis"):
            basis_names = tuple(line.split()[1:])
        elif line.startswith("["):
            if field is None or dim is None:
                raise ParseError("bracket line before field/dim headers", lineno)
            key, vec = _parse_bracket_line(line, dim, field, lineno)
            if key in brackets:
                raise ParseError(f"duplicate bracket for pair {key}", lineno)
            brackets[key] = vec
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if name is None:
        raise ParseError("missing `algebra NAME` header")
    if field is None or dim is None:
        raise ParseError("missing `field` or `dim` header")
    if basis_names is not None and len(basis_names) != dim:
        raise ParseError(f"basis line names {len(basis_names)} of {dim} vectors")
    algebra = validate_algebra(dim, brackets, field=field, basis_names=basis_names)
    return name, algebra


def _parse_bracket_line(line: str, dim: int, field: str, lineno: int):
    head, eq, rhs = line.partition("=")
    if not eq:
        raise ParseError("bracket line needs `[i,j] = ...`", lineno)
    head = head.strip()
    if not (head.startswith("[") and head.endswith("]")):
        raise ParseError(f"bad bracket head {head!r}", lineno)
    try:
        i_str, j_str = head[1:-1].split(",")
        i, j = int(i_str) - 1, int(j_str) - 1
    except ValueError:
        raise ParseError(f"bad bracket indices in {head!r}", lineno) from None
    if not (0 <= i < j < dim):
        raise ParseError(f"bracket indices must satisfy 1 <= i < j <= {dim}", lineno)
    vec = [parse_scalar("0", field)] * dim
    rhs = rhs.strip()
    if rhs == "0":
        return (i, j), vec
    for term in _split_terms(rhs, lineno):
        coeff, idx = _parse_term(term, dim, field, lineno)
        vec[idx] = vec[idx] + coeff
    return (i, j), vec


def _split_terms(rhs: str, lineno: int):
    terms = []
    depth = 0
    current = ""
    for ch in rhs:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses", lineno)
        if ch in "+-" and depth == 0 and any(c.isalnum() for c in current):
            terms.append(current)
            current = ch
        else:
            current += ch
    if depth != 0:
        raise ParseError("unbalanced parentheses", lineno)
    if current.strip():
        terms.append(current)
    if not terms:
        raise ParseError("empty bracket right-hand side", lineno)
    return terms


def _parse_term(term: str, dim: int, field: str, lineno: int):
    term = term.strip()
    sign = 1
    while term and term[0] in "+-":
        if term[0] == "-":
            sign = -sign
        term = term[1:].strip()
    if "*" in term:
        coeff_str, _, basis_str = term.rpartition("*")
        coeff_str = coeff_str.strip()
        if coeff_str.startswith("(") and coeff_str.endswith(")"):
            coeff_str = coeff_str[1:-1]
        coeff = parse_scalar(coeff_str, field, line=lineno)
    else:
        coeff = parse_scalar("1", field)
        basis_str = term
    basis_str = basis_str.strip()
    if not basis_str.startswith("e"):
        raise ParseError(f"expected basis token e<k>, got {basis_str!r}", lineno)
    try:
        idx = int(basis_str[1:]) - 1
    except ValueError:
        raise ParseError(f"bad basis token {basis_str!r}", lineno) from None
    if not (0 <= idx < dim):
        raise ParseError(f"basis index out of range in {basis_str!r}", lineno)
    return sign * coeff, idx


def format_algebra(name: str, g: LieAlgebra) -> str:
    """Serialize; parse_algebra(format_algebra(...)) round-trips exactly."""
    lines = [f"algebra {name}", f"field {g.field}", f"dim {g.dim}"]
    default_names = tuple(f"e{i + 1}" for i in range(g.dim))
    if g.basis_names != default_names:
        lines.append("basis " + " ".join(g.basis_names))
    for (i, j) in sorted(g.brackets):
        vec = g.brackets[(i, j)]
        terms = []
        for k, c in enumerate(vec):
            if not c:
                continue
            text = format_scalar(c)
            if text == "1":
                terms.append(f"e{k + 1}")
            elif text == "-1":
                terms.append(f"-e{k + 1}")
            elif any(s in text[1:] for s in "+-"):
                terms.append(f"({text})*e{k + 1}")
            else:
                terms.append(f"{text}*e{k + 1}")
        joined = " + ".join(terms)
        lines.append(f"[{i + 1},{j + 1}] = {joined}")
    return "\n".join(lines) + "\n"
