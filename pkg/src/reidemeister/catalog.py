"""Builders for the named Lie algebra families, with expected verdicts.

Each entry packages a validated algebra together with its known structural
data (solvability, nilradical dimension), the verdict the odd-codimension
checker is expected to produce, the published answer for the corresponding
group, and a family of sample automorphisms with their expected
classifications.  Entries double as regression fixtures: tests recompute
every expected number with the live pipeline.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadParameter, UnknownEntry
from .lie import LieAlgebra, Subspace, validate_algebra
from .matrix import Matrix, inverse
from .morphisms import induced_automorphism, is_automorphism
from .verdicts import VerdictKind, VerdictReason


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    n: int | None
    algebra: LieAlgebra
    solvable: bool
    nilpotent: bool
    nilradical_dim: int | None
    oddsolv_expected: tuple
    known_verdict: str
    sample_automorphisms: tuple  # pairs (Matrix, expected VerdictKind)

    @property
    def display_name(self) -> str:
        if self.n is None:
            return self.name
        if self.name.endswith("/z"):
            return f"{self.name[:-2]}({self.n})/z"
        return f"{self.name}({self.n})"


def _upper_triangular_basis(n: int, strict: bool):
    positions = []
    if not strict:
        positions.extend((i, i) for i in range(n))
    positions.extend((i, j) for i in range(n) for j in range(i + 1, n))
    return positions


def _matrix_algebra(n: int, positions, names):
    """Structure constants from commutators of single-entry matrices."""
    index = {pos: k for k, pos in enumerate(positions)}
    dim = len(positions)
    brackets = {}
    for a, (i, j) in enumerate(positions):
        for b, (k, l) in enumerate(positions):
            if b <= a:
                continue
            # [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
            vec = {}
            if j == k:
                vec[(i, l)] = vec.get((i, l), 0) + 1
            if l == i:
                vec[(k, j)] = vec.get((k, j), 0) - 1
            coords = {}
            for pos, c in vec.items():
                if c:
                    if pos not in index:
                        raise AssertionError(f"commutator leaves the span at {pos}")
                    coords[index[pos]] = c
            if coords:
                brackets[(a, b)] = coords
    return validate_algebra(dim, brackets, basis_names=names), index


def _conjugation_automorphism(n, positions, index, p_rows):
    """Ad(P): X -> P X P^{-1} written in the single-entry basis."""
    p = Matrix.from_rows([[Fraction(e) for e in row] for row in p_rows])
    p_inv = inverse(p)
    dim = len(positions)
    cols = []
    for (i, j) in positions:
        base = Matrix.from_rows(
            [[Fraction(1) if (r, c) == (i, j) else Fraction(0) for c in range(n)]
             for r in range(n)]
        )
        image = p * base * p_inv
        col = [Fraction(0)] * dim
        for r in range(n):
            for c in range(n):
                e = image.entry(r, c)
                if e:
                    if (r, c) not in index:
                        raise AssertionError("conjugation left the triangular span")
                    col[index[(r, c)]] = e
        cols.append(col)
    return Matrix(dim, dim, [cols[j][i] for i in range(dim) for j in range(dim)])


def _scaling_automorphism(positions, s: Fraction):
    """E_ij -> s^(i-j) E_ij, the conjugation by diag(1, s, s^2, ...)."""
    dim = len(positions)
    diag = [Fraction(s) ** (i - j) for (i, j) in positions]
    return Matrix.diagonal(diag)


def _anti_transpose_automorphism(n, positions, index):
    """X -> -J X^T J (flip across the anti-diagonal and negate)."""
    dim = len(positions)
    cols = []
    for (i, j) in positions:
        target = (n - 1 - j, n - 1 - i)
        col = [Fraction(0)] * dim
        col[index[target]] = Fraction(-1)
        cols.append(col)
    return Matrix(dim, dim, [cols[j][i] for i in range(dim) for j in range(dim)])


def _build_t(n: int) -> CatalogEntry:
    positions = _upper_triangular_basis(n, strict=False)
    names = tuple(f"E{i + 1}{i + 1}" for i in range(n)) + tuple(
        f"E{i + 1}{j + 1}" for i in range(n) for j in range(i + 1, n)
    )
    algebra, index = _matrix_algebra(n, positions, names)
    p_rows = [[1 if r == c else (1 if (r, c) == (0, 1) else 0) for c in range(n)]
              for r in range(n)]
    samples = (
        (_conjugation_automorphism(n, positions, index, p_rows), VerdictKind.INFINITE),
        (_scaling_automorphism(positions, Fraction(2)), VerdictKind.INFINITE),
        (_anti_transpose_automorphism(n, positions, index), VerdictKind.INFINITE),
    )
    return CatalogEntry(
        name="t", n=n, algebra=algebra, solvable=True, nilpotent=False,
        nilradical_dim=1 + n * (n - 1) // 2,
        oddsolv_expected=(
            (VerdictKind.INFINITE, VerdictReason.ODD_CODIM_SPLIT)
            if n % 2 == 0
            else (VerdictKind.INCONCLUSIVE, VerdictReason.EVEN_CODIM)
        ),
        known_verdict="R-infinity for every n >= 2 (invertible upper-triangular groups)",
        sample_automorphisms=samples,
    )


def _build_t_mod_center(n: int) -> CatalogEntry:
    base = _build_t(n)
    g = base.algebra
    scalar_line = Subspace.from_vectors(
        [tuple(1 if k < n else 0 for k in range(g.dim))], g.dim, g.field
    )
    quotient, _ = g.quotient_algebra(scalar_line)
    samples = []
    for mat, kind in base.sample_automorphisms:
        induced = induced_automorphism(is_automorphism(g, mat), scalar_line)
        samples.append((induced.m, kind))
    return CatalogEntry(
        name="t/z", n=n, algebra=quotient, solvable=True, nilpotent=False,
        nilradical_dim=n * (n - 1) // 2,
        oddsolv_expected=base.oddsolv_expected,
        known_verdict="R-infinity for every n >= 2 (upper-triangular groups modulo center)",
        sample_automorphisms=tuple(samples),
    )


def _build_u(n: int) -> CatalogEntry:
    positions = _upper_triangular_basis(n, strict=True)
    names = tuple(f"E{i + 1}{j + 1}" for i in range(n) for j in range(i + 1, n))
    algebra, index = _matrix_algebra(n, positions, names)
    dim = len(positions)
    samples = [(_scaling_automorphism(positions, Fraction(2)), VerdictKind.ONE),
               (Matrix.identity(dim), VerdictKind.INFINITE)]
    return CatalogEntry(
        name="u", n=n, algebra=algebra, solvable=True, nilpotent=True,
        nilradical_dim=dim,
        oddsolv_expected=(VerdictKind.INCONCLUSIVE, VerdictReason.EVEN_CODIM),
        known_verdict="no R-infinity (strictly upper-triangular / unipotent groups)",
        sample_automorphisms=tuple(samples),
    )


def _build_heisenberg() -> CatalogEntry:
    algebra = validate_algebra(3, {(0, 1): {2: 1}})
    samples = (
        (Matrix.diagonal([Fraction(2), Fraction(3), Fraction(6)]), VerdictKind.ONE),
        (Matrix.diagonal([Fraction(-1), Fraction(2), Fraction(-2)]), VerdictKind.ONE),
        (Matrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 1, 1]]), VerdictKind.INFINITE),
        (Matrix.identity(3), VerdictKind.INFINITE),
    )
    return CatalogEntry(
        name="heisenberg", n=None, algebra=algebra, solvable=True, nilpotent=True,
        nilradical_dim=3,
        oddsolv_expected=(VerdictKind.INCONCLUSIVE, VerdictReason.EVEN_CODIM),
        known_verdict="no R-infinity (nilpotent; rescaling automorphisms exist)",
        sample_automorphisms=samples,
    )


def _build_axb() -> CatalogEntry:
    algebra = validate_algebra(2, {(0, 1): {1: 1}})
    samples = (
        (Matrix.from_rows([[1, 0], [3, 2]]), VerdictKind.INFINITE),
        (Matrix.from_rows([[1, 0], [0, Fraction(1, 2)]]), VerdictKind.INFINITE),
        (Matrix.from_rows([[1, 0], [-5, -1]]), VerdictKind.INFINITE),
    )
    return CatalogEntry(
        name="axb", n=None, algebra=algebra, solvable=True, nilpotent=False,
        nilradical_dim=1,
        oddsolv_expected=(VerdictKind.INFINITE, VerdictReason.ODD_CODIM_SPLIT),
        known_verdict="R-infinity (affine line groups)",
        sample_automorphisms=samples,
    )


def _build_h_family(n: int) -> CatalogEntry:
    brackets = {(0, i): {i: 1} for i in range(1, n + 1)}
    names = ("t",) + tuple(f"e{i}" for i in range(1, n + 1))
    algebra = validate_algebra(n + 1, brackets, basis_names=names)
    block = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    block[0][0] = Fraction(1)
    for i in range(1, n + 1):
        block[i][0] = Fraction(i)  # translation part
        for j in range(1, n + 1):
            block[i][j] = Fraction(1 if i == j else 0) * (i + 1)
    sample1 = Matrix.from_rows(block)
    samples = ((sample1, VerdictKind.INFINITE), (Matrix.identity(n + 1), VerdictKind.INFINITE))
    return CatalogEntry(
        name="H", n=n, algebra=algebra, solvable=True, nilpotent=False,
        nilradical_dim=n,
        oddsolv_expected=(VerdictKind.INFINITE, VerdictReason.ODD_CODIM_SPLIT),
        known_verdict="R-infinity for every n >= 1 (scalar-action semidirect products)",
        sample_automorphisms=samples,
    )


def _build_so2_r2() -> CatalogEntry:
    algebra = validate_algebra(
        3, {(0, 1): {2: 1}, (0, 2): {1: -1}}, basis_names=("t", "e1", "e2")
    )
    def mirror(r):
        return Matrix.diagonal([Fraction(-1), Fraction(r), Fraction(-r)])
    def swap(r):
        return Matrix.from_rows([[-1, 0, 0], [0, 0, r], [0, r, 0]])
    samples = (
        (mirror(2), VerdictKind.ONE),
        (mirror(Fraction(1, 2)), VerdictKind.ONE),
        (mirror(-3), VerdictKind.ONE),
        (swap(2), VerdictKind.ONE),
        (Matrix.identity(3), VerdictKind.INFINITE),
    )
    return CatalogEntry(
        name="so2_r2", n=None, algebra=algebra, solvable=True, nilpotent=False,
        nilradical_dim=2,
        oddsolv_expected=(VerdictKind.INCONCLUSIVE, VerdictReason.NOT_SPLIT),
        known_verdict="no R-infinity (rotation action; mirror automorphisms avoid eigenvalue 1)",
        sample_automorphisms=samples,
    )


def _build_walnut() -> CatalogEntry:
    algebra = validate_algebra(
        4,
        {(0, 1): {2: 1}, (0, 2): {1: -1}, (1, 2): {3: 1}},
        basis_names=("t", "x", "y", "z"),
    )
    samples = (
        (Matrix.diagonal([Fraction(-1), Fraction(1), Fraction(-1), Fraction(-1)]),
         VerdictKind.INFINITE),
        (Matrix.diagonal([Fraction(1), Fraction(2), Fraction(2), Fraction(4)]),
         VerdictKind.INFINITE),
        (Matrix.identity(4), VerdictKind.INFINITE),
    )
    return CatalogEntry(
        name="walnut", n=None, algebra=algebra, solvable=True, nilpotent=False,
        nilradical_dim=3,
        oddsolv_expected=(VerdictKind.INCONCLUSIVE, VerdictReason.NOT_SPLIT),
        known_verdict="R-infinity (compact-center four-dimensional solvable group)",
        sample_automorphisms=samples,
    )


def _build_sl2() -> CatalogEntry:
    algebra = validate_algebra(
        3,
        {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}},
        basis_names=("h", "e", "f"),
    )
    return CatalogEntry(
        name="sl2", n=None, algebra=algebra, solvable=False, nilpotent=False,
        nilradical_dim=None,
        oddsolv_expected=(VerdictKind.INCONCLUSIVE, VerdictReason.NOT_SOLVABLE),
        known_verdict="R-infinity (special linear group; twisted unipotent family)",
        sample_automorphisms=(),
    )


_PARAMETRIC = {
    "t": (_build_t, range(2, 7)),
    "t/z": (_build_t_mod_center, range(2, 7)),
    "u": (_build_u, range(2, 7)),
    "H": (_build_h_family, range(1, 7)),
}

_FIXED = {
    "heisenberg": _build_heisenberg,
    "axb": _build_axb,
    "so2_r2": _build_so2_r2,
    "walnut": _build_walnut,
    "sl2": _build_sl2,
}

_NAME_RE = re.compile(r"^([A-Za-z0-9_]+)(?:\((\d+)\))?(/z)?$")


def catalog_names() -> list[str]:
    return ["t(n)", "t(n)/z", "u(n)", "heisenberg", "axb", "H(n)", "so2_r2",
            "walnut", "sl2"]


def build(name: str, n: int | None = None) -> CatalogEntry:
    """Build a catalog entry; accepts "t", "t(3)", "t(3)/z", "H(2)", ...

    Raises UnknownEntry for unknown names and BadParameter for out-of-range n.
    """
    match = _NAME_RE.match(name.strip())
    if not match:
        raise UnknownEntry(f"unrecognized catalog name {name!r}")
    base, embedded, z_suffix = match.group(1), match.group(2), match.group(3)
    if z_suffix:
        base = base + "/z"
    if embedded is not None:
        if n is not None and n != int(embedded):
            raise BadParameter(f"conflicting parameters in {name!r} and n={n}")
        n = int(embedded)
    if base in _FIXED:
        if n is not None:
            raise BadParameter(f"{base} takes no parameter")
        return _FIXED[base]()
    if base in _PARAMETRIC:
        builder, valid = _PARAMETRIC[base]
        if n is None:
            raise BadParameter(f"{base} needs a parameter n in {valid.start}..{valid.stop - 1}")
        if n not in valid:
            raise BadParameter(
                f"{base} parameter n={n} outside {valid.start}..{valid.stop - 1}"
            )
        return builder(n)
    raise UnknownEntry(f"unknown catalog entry {name!r}")


def default_entries() -> list[CatalogEntry]:
    """A representative slate of entries used by the test harness (dims 2..10)."""
    entries = [build("axb"), build("heisenberg"), build("so2_r2"), build("walnut")]
    for n in range(1, 6):
        entries.append(build("H", n))
    for n in range(2, 5):
        entries.append(build("t", n))
    for n in range(2, 5):
        entries.append(build("t/z", n))
    for n in range(2, 5):
        entries.append(build("u", n))
    return entries
