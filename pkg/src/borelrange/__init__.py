"""Exact computation of stable-range constants for H^p(GL(n,Z), V_bp), bp a bipartition."""

__version__ = "0.1.0"

from .borel import (
    CPrimeResult,
    Mode,
    c_prime,
    conjectured_c_prime,
    n_borel,
    n_borel_p,
    verify_conjecture,
    verify_symmetry,
    verify_theorem_slstablerange,
)
from .combinatorics import (
    Bipartition,
    DetTwist,
    HighestWeight,
    ParseError,
    Partition,
    PreconditionError,
    ZeroRepresentation,
    det_twist,
    gln_dim,
    highest_weight,
    parse_bipartition,
    specht_dim,
)
from .linalg import ExactMatrix
from .ranges import RangeReport, Verdict, n_kmp, n_zero, vanishing_verdict
from .traceless import (
    BudgetExceeded,
    contraction_matrix,
    filtration_dim,
    traceless_dim_formula,
    traceless_dim_kernel,
    verify_decomposition,
    verify_exactfilt,
)
from .weyl import (
    InversionTable,
    ScaledWeight,
    apply_perm,
    is_positive,
    mahonian_count,
    perms_with_inversions,
    scaled_rho_plus_mu,
)
