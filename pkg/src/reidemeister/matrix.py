"""Dense exact matrices and the core exact linear algebra.

Entries are ints, Fractions, GaussRationals, or RationalFunctions; all values
are immutable and every operation is a pure function.  Determinants over Z/Q
use fraction-free Bareiss elimination; over Q(i) and rational-function fields
plain Gaussian elimination is used instead.  Dimensions stay small (<= 10 in
the catalog), so exactness wins over asymptotics everywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch, NotInvertible, NotNilpotent, ParseError
from .scalars import FIELD_QI, GaussRational, format_scalar, parse_scalar
from .unipoly import UniPoly


class Matrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(entries)
        if rows * cols != len(entries):
            raise DimensionMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @staticmethod
    def from_rows(rows) -> "Matrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise DimensionMismatch("ragged rows")
        return Matrix(n, m, [e for r in rows for e in r])

    @staticmethod
    def identity(n, one=Fraction(1)) -> "Matrix":
        zero = one * 0
        return Matrix(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @staticmethod
    def zero(rows, cols, zero=Fraction(0)) -> "Matrix":
        return Matrix(rows, cols, [zero] * (rows * cols))

    @staticmethod
    def diagonal(values) -> "Matrix":
        values = list(values)
        n = len(values)
        zero = values[0] * 0 if n else Fraction(0)
        return Matrix(n, n, [values[i] if i == j else zero for i in range(n) for j in range(n)])

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def map(self, fn) -> "Matrix":
        return Matrix(self.rows, self.cols, [fn(e) for e in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols, self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def trace(self):
        self._require_square("trace")
        acc = self.entries[0] * 0
        for i in range(self.rows):
            acc = acc + self.entry(i, i)
        return acc

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._require_same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._require_same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.map(lambda e: -e)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            out = []
            for i in range(self.rows):
                ri = self.row(i)
                for j in range(other.cols):
                    acc = None
                    for k in range(self.cols):
                        term = ri[k] * other.entry(k, j)
                        acc = term if acc is None else acc + term
                    out.append(acc)
            return Matrix(self.rows, other.cols, out)
        return self.map(lambda e: e * other)

    def __rmul__(self, other):
        return self.map(lambda e: other * e)

    def apply(self, vec):
        """Matrix times column vector, returned as a tuple."""
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vec)} vs {self.cols} columns")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            acc = None
            for k in range(self.cols):
                term = ri[k] * vec[k]
                acc = term if acc is None else acc + term
            out.append(acc if acc is not None else 0)
        return tuple(out)

    def power(self, k: int) -> "Matrix":
        self._require_square("power")
        one = _one_like(self.entries[0]) if self.entries else Fraction(1)
        result = Matrix.identity(self.rows, one)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for a, b in zip(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix.from_rows({self.to_rows()!r})"

    def __str__(self):
        return format_matrix(self)

    def _require_square(self, what):
        if not self.is_square:
            raise DimensionMismatch(f"{what} requires a square matrix, got {self.rows}x{self.cols}")

    def _require_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


def _one_like(sample):
    if isinstance(sample, int):
        return 1
    if isinstance(sample, Fraction):
        return Fraction(1)
    if isinstance(sample, GaussRational):
        return GaussRational.of(1)
    return sample.one()  # rational functions know their own unit


def _is_rational_entries(m: Matrix) -> bool:
    return all(isinstance(e, (int, Fraction)) for e in m.entries)


def det(m: Matrix):
    """Exact determinant.

    Fraction-free Bareiss elimination over Z/Q (integer matrices keep integer
    intermediates); Gaussian elimination with division over other fields.
    """
    m._require_square("det")
    n = m.rows
    if n == 0:
        return 1
    if _is_rational_entries(m):
        return _det_bareiss(m)
    return _det_gauss(m)


def _det_bareiss(m: Matrix):
    n = m.rows
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                exact, rem = divmod(num, prev) if isinstance(num, int) else (num / prev, 0)
                assert rem == 0
                a[i][j] = exact
            a[i][k] = a[i][k] * 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _det_gauss(m: Matrix):
    n = m.rows
    a = m.to_rows()
    zero = m.entries[0] * 0
    result = _one_like(m.entries[0])
    sign = 1
    for k in range(n):
        pivot_row = None
        for i in range(k, n):
            if a[i][k] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            return zero
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        result = result * pivot
        for i in range(k + 1, n):
            if a[i][k] == zero:
                continue
            factor = a[i][k] / pivot
            for j in range(k, n):
                a[i][j] = a[i][j] - factor * a[k][j]
    return result * sign if sign < 0 else result


def rref(rows):
    """Reduced row echelon form over a field; returns (rows, pivot columns).

    Integer inputs are lifted to Fractions so division is always available.
    Zero rows are dropped.
    """
    work = [[Fraction(e) if isinstance(e, int) else e for e in r] for r in rows]
    work = [r for r in work if any(r)]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][c]
        work[r] = [e / inv for e in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    work = [r_ for r_ in work[:r] if any(r_)]
    return [tuple(rw) for rw in work], pivots


def kernel_basis(m: Matrix):
    """Basis of the right null space over a field, from the reduced echelon form.

    Returns a list of tuples; empty exactly when the matrix is injective.
    """
    if m.rows == 0 or m.cols == 0:
        one = Fraction(1)
        return [tuple(one if i == j else Fraction(0) for i in range(m.cols)) for j in range(m.cols)]
    echelon, pivots = rref(m.to_rows())
    if _is_rational_entries(m):
        one, zero = Fraction(1), Fraction(0)
    else:
        one = _one_like(m.entries[0])
        zero = one * 0
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [zero] * m.cols
        vec[f] = one
        for prow, pcol in zip(echelon, pivots):
            vec[pcol] = -prow[f]
        basis.append(tuple(vec))
    return basis


def solve_unique(m: Matrix, rhs):
    """Solve m x = rhs when m is square invertible; raises NotInvertible otherwise."""
    m._require_square("solve")
    n = m.rows
    aug = [list(m.row(i)) + [rhs[i]] for i in range(n)]
    echelon, pivots = rref(aug)
    if pivots != list(range(n)):
        raise NotInvertible("matrix is singular")
    return tuple(row[-1] for row in echelon)


def inverse(m: Matrix) -> Matrix:
    m._require_square("inverse")
    n = m.rows
    one = _one_like(m.entries[0]) if m.entries else Fraction(1)
    aug = [list(m.row(i)) + [one if i == j else one * 0 for j in range(n)] for i in range(n)]
    echelon, pivots = rref(aug)
    if pivots != list(range(n)):
        raise NotInvertible("matrix is singular")
    return Matrix.from_rows([row[n:] for row in echelon])


def char_poly(m: Matrix) -> UniPoly:
    """Monic characteristic polynomial det(xI - m), by the Faddeev-LeVerrier
    recurrence (exact; divisions by k stay in the field in characteristic 0)."""
    m._require_square("char_poly")
    n = m.rows
    if n == 0:
        return UniPoly([Fraction(1)])
    work = m.map(lambda e: Fraction(e) if isinstance(e, int) else e)
    one = _one_like(work.entries[0])
    coeffs = [one]  # c_n .. c_0, highest first
    aux = Matrix.zero(n, n, one * 0)
    for k in range(1, n + 1):
        aux = work * (aux + coeffs[-1] * Matrix.identity(n, one))
        coeffs.append(-aux.trace() / k)
    return UniPoly(list(reversed(coeffs)))


def poly_eval_matrix(p: UniPoly, m: Matrix) -> Matrix:
    """Evaluate a polynomial at a square matrix (Horner)."""
    m._require_square("polynomial evaluation")
    one = _one_like(m.entries[0]) if m.entries else Fraction(1)
    acc = Matrix.zero(m.rows, m.rows, one * 0)
    for c in reversed(p.coeffs):
        acc = acc * m + c * Matrix.identity(m.rows, one)
    return acc


def has_eigenvalue_one(m: Matrix) -> bool:
    """True exactly when det(m - I) = 0."""
    m._require_square("has_eigenvalue_one")
    if m.rows == 0:
        return False
    one = _one_like(m.entries[0])
    shifted = m - Matrix.identity(m.rows, one)
    return not det(shifted)


def is_nilpotent(m: Matrix) -> bool:
    """Nilpotency via the image chain im(m) >= im(m^2) >= ...; the chain either
    shrinks to zero or stabilizes at a nonzero invariant subspace."""
    m._require_square("is_nilpotent")
    if m.rows == 0:
        return True
    vectors = [m.column(j) for j in range(m.cols)]
    rows, _ = rref(vectors)
    while rows:
        images = [m.apply(v) for v in rows]
        nxt, _ = rref(images)
        if len(nxt) == len(rows):
            return False
        rows = nxt
    return True


def exp_nilpotent(m: Matrix) -> Matrix:
    """Exact exponential of a nilpotent matrix (finite sum of m^k / k!)."""
    m._require_square("exp_nilpotent")
    work = m.map(lambda e: Fraction(e) if isinstance(e, int) else e)
    if not is_nilpotent(work):
        raise NotNilpotent(f"matrix is not nilpotent: {m!r}")
    n = m.rows
    one = _one_like(work.entries[0]) if work.entries else Fraction(1)
    acc = Matrix.identity(n, one)
    term = Matrix.identity(n, one)
    factorial = 1
    for k in range(1, n):
        term = term * work
        factorial *= k
        acc = acc + term * Fraction(1, factorial)
    return acc


# -- text format ---------------------------------------------------------------
#
# Rows separated by ';', entries by whitespace.  A bare "i" token glues onto
# the previous token so the spaced Gaussian form "p/q+r/s i" also parses.


def parse_matrix(text: str, field: str = "Q") -> Matrix:
    rows = []
    row_texts = [r for r in text.split(";")]
    for raw in row_texts:
        tokens = raw.split()
        merged = []
        for tok in tokens:
            if tok == "i" and merged:
                merged[-1] += "i"
            else:
                merged.append(tok)
        if not merged:
            raise ParseError(f"empty matrix row in {text!r}")
        if field == "Z":
            row = []
            for tok in merged:
                value = parse_scalar(tok, "Q")
                if value.denominator != 1:
                    raise ParseError(f"integer matrix entry expected, got {tok!r}")
                row.append(int(value))
            rows.append(row)
        else:
            rows.append([parse_scalar(tok, field) for tok in merged])
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ParseError("matrix rows have differing lengths")
    return Matrix.from_rows(rows)


def format_matrix(m: Matrix) -> str:
    return "; ".join(
        " ".join(format_scalar(e) for e in m.row(i)) for i in range(m.rows)
    )


def lift_to_field(m: Matrix, field: str) -> Matrix:
    """Coerce all entries into the scalar type of the given field."""
    if field == FIELD_QI:
        return m.map(GaussRational.of)
    return m.map(lambda e: Fraction(e) if isinstance(e, int) else e)
