"""Symmetric-group elements by Coxeter length, acting on 2n-scaled weights.

Weights of sl(n) are stored as integer vectors ``2n * (rho + mu)`` so that the
fractional shift ``alpha = deg / n`` disappears; positivity is preserved by
positive scaling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .combinatorics import Bipartition, PreconditionError, highest_weight


@dataclass(frozen=True)
class ScaledWeight:
    entries: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class InversionTable:
    """Lehmer code ``c_i = #{j > i : sigma(i) > sigma(j)}``, i = 1..n-1."""

    code: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.code) + 1
        for i, c in enumerate(self.code):
            if not 0 <= c <= n - 1 - i:
                raise ValueError(f"invalid inversion table {self.code}")

    @property
    def n(self) -> int:
        return len(self.code) + 1

    @property
    def length(self) -> int:
        return sum(self.code)

    def permutation(self) -> tuple[int, ...]:
        """One-line notation (sigma(1), ..., sigma(n)), 1-based."""
        remaining = list(range(1, self.n + 1))
        out = [remaining.pop(c) for c in self.code]
        out.append(remaining[0])
        return tuple(out)

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> InversionTable:
        perm = tuple(perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
        return cls(tuple(
            sum(1 for j in range(i + 1, len(perm)) if perm[j] < perm[i])
            for i in range(len(perm) - 1)
        ))

    @classmethod
    def identity(cls, n: int) -> InversionTable:
        return cls((0,) * (n - 1))

    def compose(self, other: InversionTable) -> InversionTable:
        """self o other, i.e. apply ``other`` first."""
        s, t = self.permutation(), other.permutation()
        return InversionTable.from_permutation(tuple(s[t[i] - 1] for i in range(len(t))))

    def inverse(self) -> InversionTable:
        s = self.permutation()
        inv = [0] * len(s)
        for i, v in enumerate(s):
            inv[v - 1] = i + 1
        return InversionTable.from_permutation(inv)


def scaled_rho_plus_mu(bp: Bipartition, n: int) -> ScaledWeight:
    """2n * (rho + mu_bp) as an integer vector; sums to zero."""
    if n < 2:
        raise PreconditionError(f"the sl(n) root data needs n >= 2, got n = {n}")
    mu = highest_weight(bp, n).entries
    d = bp.degree
    return ScaledWeight(tuple(
        n * (n + 1) - 2 * n * i - 2 * d + 2 * n * mu[i - 1] for i in range(1, n + 1)
    ))


def _max_tail(n: int, start: int) -> int:
    # max of sum c_i over 0-based slots start..n-2, where c_i <= n-1-i
    k = n - 1 - start
    return k * (k + 1) // 2 if k > 0 else 0


def _codes(n: int, q: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    slots = n - 1
    if q < 0 or q > _max_tail(n, 0):
        return
    code = [0] * slots

    def rec(i: int, rest: int) -> Iterator[tuple[int, ...]]:
        if i == slots:
            if rest == 0:
                yield tuple(code)
            return
        lo = max(0, rest - _max_tail(n, i + 1))
        hi = min(n - 1 - i, rest)
        if i == 0 and first is not None:
            lo, hi = max(lo, first), min(hi, first)
        for c in range(lo, hi + 1):
            code[i] = c
            yield from rec(i + 1, rest - c)

    if slots == 0:
        if q == 0 and first in (None, 0):
            yield ()
        return
    yield from rec(0, q)


def perms_with_inversions(n: int, q: int, first: int | None = None) -> Iterator[InversionTable]:
    """Every sigma in S_n with exactly q inversions, in lexicographic code order.

    ``first`` restricts the stream to codes with ``c_1 == first``; the streams for
    ``first = 0..n-1`` partition the full stream.
    """
    for code in _codes(n, q, first):
        yield InversionTable(code)


def apply_perm(t: InversionTable, w: ScaledWeight | Sequence[int]) -> ScaledWeight:
    entries = w.entries if isinstance(w, ScaledWeight) else tuple(w)
    if len(entries) != t.n:
        raise ValueError(f"dimension mismatch: S_{t.n} acting on a length-{len(entries)} vector")
    out = [0] * t.n
    for i, s in enumerate(t.permutation()):
        out[s - 1] = entries[i]
    return ScaledWeight(tuple(out))


def is_positive(w: ScaledWeight | Sequence[int]) -> bool:
    """True iff every proper prefix sum is strictly positive."""
    entries = w.entries if isinstance(w, ScaledWeight) else tuple(w)
    s = 0
    for x in entries[:-1]:
        s += x
        if s <= 0:
            return False
    return True


def find_nonpositive(w: ScaledWeight | Sequence[int], q: int) -> InversionTable | None:
    """Some sigma of length q with sigma(w) not > 0, or None if all of W^q pass.

    Depth-first over the Lehmer code of tau = sigma^-1, so that position j of
    sigma(w) is w[tau(j)] and a bad prefix is detected as soon as it is built.
    The length bounds on the code guarantee every partial code extends to an
    element of W^q.
    """
    entries = w.entries if isinstance(w, ScaledWeight) else tuple(w)
    n = len(entries)
    if q < 0 or q > n * (n - 1) // 2:
        return None
    code: list[int] = []

    def rec(remaining: list[int], rest: int, prefix: int) -> int | None:
        j = len(code)
        if j == n - 1:
            return None
        lo = max(0, rest - _max_tail(n, j + 1))
        hi = min(n - 1 - j, rest)
        for c in range(lo, hi + 1):
            s = prefix + entries[remaining[c]]
            code.append(c)
            if s <= 0:
                return rest - c
            left = rec(remaining[:c] + remaining[c + 1:], rest - c, s)
            if left is not None:
                return left
            code.pop()
        return None

    rest = rec(list(range(n)), q, 0)
    if rest is None:
        return None
    # lexicographically smallest completion of the failing prefix
    for i in range(len(code), n - 1):
        c = max(0, rest - _max_tail(n, i + 1))
        code.append(c)
        rest -= c
    return InversionTable(tuple(code)).inverse()


def mahonian_count(n: int, q: int) -> int:
    """Coefficient of x^q in prod_{i=1..n} (1 + x + ... + x^(i-1))."""
    coeffs = [1]
    for i in range(1, n + 1):
        new = [0] * (len(coeffs) + i - 1)
        for k, a in enumerate(coeffs):
            for d in range(i):
                new[k + d] += a
        coeffs = new
    return coeffs[q] if 0 <= q < len(coeffs) else 0
