"""Contraction maps on mixed tensors H^{p,q} and exact checks of the traceless-part dimensions.

A basis tensor of H^{p,q} = H^{(x)p} (x) (H*)^{(x)q} is a multi-index
``(a_1..a_p, b_1..b_q)`` with digits in ``0..n-1``; its linear position is the
base-n number with the covariant digits most significant.
"""

from __future__ import annotations

import os
import warnings
from itertools import combinations, permutations, product
from math import comb, factorial

from ._pool import ordered_map
from .combinatorics import PreconditionError, bipartitions_of, gln_dim, highest_weight, specht_dim
from .linalg import ExactMatrix
from .report import SweepReport

DEFAULT_BUDGET = 4096


class BudgetExceeded(RuntimeError):
    pass


class FormulaRangeWarning(UserWarning):
    """The closed dimension formula was evaluated below its validity range n >= p + q."""


def size_budget() -> int:
    raw = os.environ.get("BOREL_RANGE_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _check_budget(n: int, p: int, q: int, budget: int | None) -> None:
    limit = size_budget() if budget is None else budget
    if n ** (p + q) > limit:
        raise BudgetExceeded(f"dim H^{{{p},{q}}}({n}) = {n ** (p + q)} exceeds the budget {limit}")


def encode(digits: tuple[int, ...], n: int) -> int:
    x = 0
    for d in digits:
        x = x * n + d
    return x


def contraction_matrix(n: int, p: int, q: int, i: int, j: int) -> ExactMatrix:
    """c_{i,j}: H^{p,q} -> H^{p-1,q-1}, pairing covariant slot i with contravariant slot j (1-based)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not (1 <= i <= p and 1 <= j <= q):
        raise IndexError(f"(i, j) = ({i}, {j}) out of range for p = {p}, q = {q}")
    a, b = i - 1, p + j - 1
    rows = [dict() for _ in range(n ** (p + q - 2))]
    for col, digits in enumerate(product(range(n), repeat=p + q)):
        if digits[a] == digits[b]:
            kept = tuple(d for k, d in enumerate(digits) if k != a and k != b)
            rows[encode(kept, n)][col] = 1
    return ExactMatrix(len(rows), n ** (p + q), rows)


def contraction_pairs(p: int, q: int, l: int) -> list[tuple[tuple[int, int], ...]]:
    """The index set of (l+1)-tuples of pairs with increasing i's and distinct j's."""
    out = []
    for iis in combinations(range(1, p + 1), l + 1):
        for jjs in permutations(range(1, q + 1), l + 1):
            out.append(tuple(zip(iis, jjs)))
    return out


def composite_contraction(n: int, p: int, q: int, pairs: tuple[tuple[int, int], ...]) -> ExactMatrix:
    """c_I as a product of single contractions.

    Pairs are applied from the largest i down, so covariant positions of the
    remaining pairs never shift; contravariant positions are re-indexed after
    each deletion.
    """
    contra = list(range(1, q + 1))
    m = None
    pp, qq = p, q
    for i, j in sorted(pairs, reverse=True):
        pos = contra.index(j) + 1
        del contra[pos - 1]
        c = contraction_matrix(n, pp, qq, i, pos)
        m = c if m is None else c @ m
        pp, qq = pp - 1, qq - 1
    if m is None:
        raise ValueError("empty contraction index")
    return m


def _stacked_kernel_dim(n: int, p: int, q: int, blocks: list[ExactMatrix]) -> int:
    cols = n ** (p + q)
    if not blocks:
        return cols
    return ExactMatrix.vstack(blocks, cols).nullity()


def traceless_dim_kernel(n: int, p: int, q: int, budget: int | None = None) -> int:
    """dim of the joint kernel of every c_{i,j} on H^{p,q}(n)."""
    _check_budget(n, p, q, budget)
    blocks = [contraction_matrix(n, p, q, i, j) for i in range(1, p + 1) for j in range(1, q + 1)]
    return _stacked_kernel_dim(n, p, q, blocks)


def traceless_dim_formula(n: int, p: int, q: int) -> int:
    if n < p + q:
        warnings.warn(
            f"formula evaluated at n = {n} < p + q = {p + q}; value need not be a dimension",
            FormulaRangeWarning,
            stacklevel=2,
        )
    return sum(
        (-1) ** i * comb(p, i) * comb(q, i) * factorial(i) * n ** (p + q - 2 * i)
        for i in range(min(p, q) + 1)
    )


def filtration_dim(n: int, p: int, q: int, l: int, budget: int | None = None) -> int:
    """dim F^l: joint kernel of c_I over all I with l+1 contracted pairs."""
    if not 0 <= l <= min(p, q):
        raise ValueError(f"l = {l} outside 0..{min(p, q)}")
    _check_budget(n, p, q, budget)
    return _stacked_kernel_dim(n, p, q, _filtration_blocks(n, p, q, l))


def _filtration_blocks(n: int, p: int, q: int, l: int) -> list[ExactMatrix]:
    return [composite_contraction(n, p, q, I) for I in contraction_pairs(p, q, l)]


def filtration_is_nested(n: int, p: int, q: int, budget: int | None = None) -> bool:
    """F^{l-1} inside F^l for each l, via rowspace(A_l) inside rowspace(A_{l-1})."""
    _check_budget(n, p, q, budget)
    cols = n ** (p + q)
    mats = [ExactMatrix.vstack(_filtration_blocks(n, p, q, l), cols) for l in range(min(p, q) + 1)]
    for lo, hi in zip(mats, mats[1:]):
        if ExactMatrix.vstack([lo, hi], cols).rank() != lo.rank():
            return False
    return True


def verify_exactfilt(n: int, p: int, q: int, budget: int | None = None) -> dict:
    if n < p + q:
        raise PreconditionError(f"rank identity only claimed for n >= p + q, got n = {n} < {p + q}")
    dims = [filtration_dim(n, p, q, l, budget) for l in range(min(p, q) + 1)]
    steps = []
    for l in range(1, min(p, q) + 1):
        mult = comb(p, l) * comb(q, l) * factorial(l)
        rhs = mult * traceless_dim_kernel(n, p - l, q - l, budget)
        steps.append({"l": l, "lhs": dims[l] - dims[l - 1], "rhs": rhs, "ok": dims[l] - dims[l - 1] == rhs})
    return {
        "n": n, "p": p, "q": q, "filtration": dims, "steps": steps,
        "ok": all(s["ok"] for s in steps) and dims[-1] == n ** (p + q),
    }


def decomposition_sum(n: int, p: int, q: int) -> int:
    total = 0
    for bp in bipartitions_of(p, q):
        if bp.length <= n:
            total += gln_dim(highest_weight(bp, n)) * specht_dim(bp.lam) * specht_dim(bp.lam_prime)
    return total


def verify_decomposition(n: int, p: int, q: int, budget: int | None = None) -> dict:
    lhs = traceless_dim_kernel(n, p, q, budget)
    rhs = decomposition_sum(n, p, q)
    return {"n": n, "p": p, "q": q, "kernel": lhs, "sum": rhs, "ok": lhs == rhs}


def tensor_grid(max_n: int, max_size: int, stable_only: bool = True) -> list[tuple[int, int, int]]:
    """(n, p, q) with 1 <= n <= max_n and p + q <= max_size, optionally n >= p + q."""
    return [
        (n, p, s - p)
        for n in range(1, max_n + 1)
        for s in range(max_size + 1)
        for p in range(s + 1)
        if not stable_only or n >= s
    ]


def _dims_cell(cell: tuple[int, int, int]) -> dict:
    n, p, q = cell
    k, f = traceless_dim_kernel(n, p, q), traceless_dim_formula(n, p, q)
    return {"n": n, "p": p, "q": q, "kernel": k, "formula": f, "ok": k == f}


def _exactfilt_cell(cell: tuple[int, int, int]) -> dict:
    return verify_exactfilt(*cell)


def _decomposition_cell(cell: tuple[int, int, int]) -> dict:
    return verify_decomposition(*cell)


def _sweep(check: str, fn, cells, jobs: int) -> SweepReport:
    rep = SweepReport(check)
    for cell in ordered_map(fn, cells, jobs):
        rep.cells.append(cell)
        if not cell["ok"]:
            rep.violations.append(cell)
    return rep


def verify_dims(max_n: int = 4, max_size: int = 4, jobs: int = 1) -> SweepReport:
    return _sweep("dims", _dims_cell, tensor_grid(max_n, max_size), jobs)


def sweep_exactfilt(max_n: int = 4, max_size: int = 4, jobs: int = 1) -> SweepReport:
    return _sweep("exactfilt", _exactfilt_cell, tensor_grid(max_n, max_size), jobs)


def sweep_decomposition(max_n: int = 4, max_size: int = 4, jobs: int = 1, stable_only: bool = True) -> SweepReport:
    return _sweep("decomposition", _decomposition_cell, tensor_grid(max_n, max_size, stable_only), jobs)
