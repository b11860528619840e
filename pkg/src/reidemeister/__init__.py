"""Exact-arithmetic decision procedures for Reidemeister numbers.

The package decides, with no floating point anywhere:

* the {1, infinity} dichotomy for automorphisms of connected solvable Lie
  groups, computed on the Lie algebra (eigenvalue-1 test);
* the torus criterion det(A - I) != 0 with the full fixed-subgroup structure
  from a Smith normal form;
* a sufficient condition for the topological R-infinity property (split
  solvable algebra with odd nilradical codimension);
* brute-force twisted conjugacy on finite groups, an exact oracle for the
  restriction/quotient counting lemmas.
"""

from .errors import (
    BadParameter,
    DimensionMismatch,
    JacobiViolation,
    NotAnIdeal,
    NotAutomorphism,
    NotInvariant,
    NotInvertible,
    NotNilpotent,
    NotNormal,
    NotSolvable,
    NotSplitOverField,
    NotUnimodular,
    ParseError,
    UnknownEntry,
    ValidationError,
    ZeroPolynomial,
)
from .scalars import GaussRational, Rational
from .unipoly import (
    UniPoly,
    field_roots,
    gaussian_rational_roots,
    rational_roots,
    sturm_real_root_count,
)
from .multipoly import MultiPoly, RationalFunction
from .matrix import (
    Matrix,
    char_poly,
    det,
    exp_nilpotent,
    format_matrix,
    has_eigenvalue_one,
    kernel_basis,
    parse_matrix,
    poly_eval_matrix,
)
from .smith import SNFResult, smith_normal_form
from .lie import LieAlgebra, Subspace, validate_algebra
from .flags import FlagData, nilradical, triangularize_flag
from .morphisms import (
    AutomorphismMatrix,
    induced_automorphism,
    is_automorphism,
    restrict_automorphism,
)
from .algfile import format_algebra, parse_algebra
from .verdicts import (
    ReidemeisterVerdict,
    TorusFixGroup,
    VerdictKind,
    VerdictReason,
    classify_solvable,
    inner_automorphism,
    rinfty_oddsolv,
    torus_classify,
)
from .catalog import CatalogEntry, build, catalog_names, default_entries
from .sl2 import (
    SymbolicMatrix2,
    displayed_twisted_product,
    numeric_twisted_product,
    off_diagonal_sum,
    sl2_twisted_product,
    verify_sl2_intersection,
)
from .finite import (
    FiniteAutomorphism,
    FiniteGroup,
    TwistedClassDecomposition,
    builtin_finite,
    check_lemma_endo,
    check_lemma_inner,
    check_lemma_inv,
    find_automorphisms,
    twisted_classes,
)

__version__ = "0.1.0"
