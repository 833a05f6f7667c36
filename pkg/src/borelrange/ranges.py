"""Vanishing ranges for H^p(GL(n,Z), V_bp): the VIC-module bound, Borel's bound and their minimum."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .borel import n_borel, n_borel_p
from .combinatorics import Bipartition, PreconditionError


class Verdict(str, enum.Enum):
    VANISHES = "vanishes"
    NO_CONCLUSION = "no-conclusion"
    ZERO_REPRESENTATION = "zero-representation"
    TRIVIAL_COEFFICIENTS = "trivial-coefficients"


TRIVIAL_NOTE = (
    "trivial coefficients: the vanishing statement does not apply; the stable "
    "rational cohomology is an exterior algebra on classes x_i of degree 4i+1"
)
LI_SUN_NOTE = "Li-Sun: H^p(GL(n,Z), V) = 0 for p <= n-2 when V has no invariants (not computed here)"


@dataclass(frozen=True)
class RangeReport:
    bipartition: Bipartition
    p: int
    n: int | None
    n_b: int
    n_b_p: int
    n_kmp: int
    n_0: int
    verdict: Verdict | None
    branches: tuple[str, ...] = ()
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "bp": str(self.bipartition),
            "lambda": str(self.bipartition.lam),
            "lambda_prime": str(self.bipartition.lam_prime),
            "size": self.bipartition.size,
            "deg": self.bipartition.degree,
            "p": self.p,
            "n": self.n,
            "n_b": self.n_b,
            "n_b_p": self.n_b_p,
            "n_kmp": self.n_kmp,
            "n_0": self.n_0,
            "verdict": self.verdict.value if self.verdict else None,
            "branches": list(self.branches),
            "note": self.note,
        }


def n_kmp(bp: Bipartition, p: int) -> int:
    if p < 0:
        raise PreconditionError(f"cohomological degree must be >= 0, got {p}")
    one_sided = not bp.lam or not bp.lam_prime
    return p + 1 + (bp.size if one_sided else 2 * bp.size)


def n_zero(bp: Bipartition, p: int) -> int:
    return min(n_kmp(bp, p), n_borel_p(bp, p))


def vanishing_verdict(bp: Bipartition, p: int, n: int | None = None) -> RangeReport:
    """Bounds for (bp, p) and, when n is given, what they say about H^p(GL(n,Z), V_bp).

    Never claims non-vanishing: below the bounds the verdict is ``no-conclusion``.
    """
    kmp, bp_ = n_kmp(bp, p), n_borel_p(bp, p)
    n0 = min(kmp, bp_)
    note = TRIVIAL_NOTE if bp.is_zero() else ""
    if n is None:
        return RangeReport(bp, p, None, n_borel(bp), bp_, kmp, n0, None, (), note)
    if n < 1:
        raise PreconditionError(f"rank n must be positive, got {n}")
    branches: tuple[str, ...] = ()
    if bp.is_zero():
        verdict = Verdict.TRIVIAL_COEFFICIENTS
    elif bp.length > n:
        verdict = Verdict.ZERO_REPRESENTATION
        note = f"l(bp) = {bp.length} > n = {n}: V_bp(n) = 0"
    elif n >= n0:
        verdict = Verdict.VANISHES
        branches = tuple(name for name, bound in (("n_kmp", kmp), ("n_b_p", bp_)) if n >= bound)
    else:
        verdict = Verdict.NO_CONCLUSION
    return RangeReport(bp, p, n, n_borel(bp), bp_, kmp, n0, verdict, branches, note)
