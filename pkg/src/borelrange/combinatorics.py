"""Partitions, bipartitions, highest weights and the classical dimension formulas."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence


class PreconditionError(ValueError):
    """A mathematical precondition of an operation does not hold."""


class ZeroRepresentation(PreconditionError):
    """Raised when l(bp) > n, i.e. the module V_bp(n) is zero."""


class ParseError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts {parts} are not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"


@dataclass(frozen=True, order=True)
class Bipartition:
    lam: Partition
    lam_prime: Partition

    @classmethod
    def of(cls, lam: Sequence[int] = (), lam_prime: Sequence[int] = ()) -> Bipartition:
        return cls(Partition(tuple(lam)), Partition(tuple(lam_prime)))

    @property
    def size(self) -> int:
        return self.lam.size + self.lam_prime.size

    @property
    def degree(self) -> int:
        return self.lam.size - self.lam_prime.size

    @property
    def length(self) -> int:
        return self.lam.length + self.lam_prime.length

    def dual(self) -> Bipartition:
        return Bipartition(self.lam_prime, self.lam)

    def is_zero(self) -> bool:
        return not self.lam and not self.lam_prime

    def __str__(self) -> str:
        return f"{self.lam}|{self.lam_prime}"


@dataclass(frozen=True)
class HighestWeight:
    entries: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class DetTwist:
    """V_bp(n) = V_mu(n) (x) det^k, normalized so that mu_n = 0."""

    mu: Partition
    k: int


_BP_RE = re.compile(r"^\s*(-?[0-9,\s-]*)\|(-?[0-9,\s-]*)\s*$")


def _parse_parts(text: str) -> Partition:
    text = text.strip()
    if not re.fullmatch(r"-?[0-9]+(\s*,\s*-?[0-9]+)*", text):
        raise ParseError(f"malformed partition {text!r}")
    values = [int(x) for x in text.split(",")]
    if any(v < 0 for v in values):
        raise ParseError(f"negative entry in {text!r}")
    if values == [0]:
        return Partition()
    if any(v == 0 for v in values):
        raise ParseError(f"parts must be positive (use a lone 0 for the empty partition): {text!r}")
    try:
        return Partition(tuple(values))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_bipartition(text: str) -> Bipartition:
    """Parse ``"3,1|2"`` into ``Bipartition((3,1),(2))``; ``"0"`` is the empty partition."""
    m = _BP_RE.match(text)
    if m is None:
        raise ParseError(f"expected '<parts>|<parts>', got {text!r}")
    return Bipartition(_parse_parts(m.group(1)), _parse_parts(m.group(2)))


def highest_weight(bp: Bipartition, n: int) -> HighestWeight:
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    if bp.length > n:
        raise ZeroRepresentation(f"l({bp}) = {bp.length} > n = {n}: V is the zero representation")
    zeros = n - bp.length
    neg = tuple(-x for x in reversed(bp.lam_prime.parts))
    return HighestWeight(bp.lam.parts + (0,) * zeros + neg)


def det_twist(bp: Bipartition, n: int) -> DetTwist:
    w = highest_weight(bp, n).entries
    k = w[-1]
    return DetTwist(Partition(tuple(x - k for x in w)), k)


def specht_dim(p: Partition) -> int:
    """Number of standard Young tableaux of shape p (hook length formula)."""
    parts = p.parts
    conj = [sum(1 for r in parts if r > j) for j in range(parts[0])] if parts else []
    hooks = 1
    for i, row in enumerate(parts):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(p.size) // hooks


def gln_dim(w: HighestWeight | Sequence[int]) -> int:
    """Weyl dimension of the irreducible GL(n) module with highest weight w."""
    e = w.entries if isinstance(w, HighestWeight) else tuple(w)
    n = len(e)
    if any(e[i] < e[i + 1] for i in range(n - 1)):
        raise PreconditionError(f"weight {e} is not weakly decreasing")
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= e[i] - e[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0, "Weyl product must be integral"
    return q


@lru_cache(maxsize=None)
def partitions(m: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of m, in reverse lexicographic order."""
    if max_part is None:
        max_part = m

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(t) for t in rec(m, max_part))


def bipartitions_of(p: int, q: int) -> Iterator[Bipartition]:
    for lam in partitions(p):
        for lam_prime in partitions(q):
            yield Bipartition(lam, lam_prime)


def bipartitions(max_size: int) -> Iterator[Bipartition]:
    """All bipartitions of size at most max_size, by size then by |lam| descending."""
    for s in range(max_size + 1):
        for a in range(s, -1, -1):
            yield from bipartitions_of(a, s - a)
