"""Exception types shared across the package.

Everything that rejects malformed input derives from ValidationError so the
CLI can map validation failures to a single exit code.
"""


class ValidationError(Exception):
    """Input failed a structural check (parse error, broken invariant, ...)."""


class DimensionMismatch(ValidationError):
    pass


class ZeroPolynomial(ValidationError):
    pass


class NotNilpotent(ValidationError):
    pass


class NotInvertible(ValidationError):
    pass


class NotUnimodular(ValidationError):
    pass


class JacobiViolation(ValidationError):
    def __init__(self, i, j, k, residual):
        self.i, self.j, self.k = i, j, k
        self.residual = residual
        super().__init__(
            f"Jacobi identity fails on basis triple ({i + 1},{j + 1},{k + 1}); "
            f"residual {residual}"
        )


class NotAnIdeal(ValidationError):
    pass


class NotSolvable(ValidationError):
    pass


class NotSplitOverField(ValidationError):
    """Some ad-action eigenvalue does not lie in the base field.

    Carries a certificate: a root-free factor of the offending characteristic
    polynomial and, when available, an element whose action produced it.
    """

    def __init__(self, factor, witness=None):
        self.factor = factor
        self.witness = witness
        super().__init__(f"eigenvalue not in base field; root-free factor {factor}")


class NotAutomorphism(ValidationError):
    def __init__(self, i, j, residual):
        self.i, self.j = i, j
        self.residual = residual
        super().__init__(
            f"bracket not preserved on basis pair ({i + 1},{j + 1}); residual {residual}"
        )


class NotInvariant(ValidationError):
    pass


class NotNormal(ValidationError):
    pass


class UnknownEntry(ValidationError):
    pass


class BadParameter(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
