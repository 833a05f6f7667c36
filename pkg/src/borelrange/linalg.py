"""Exact rational matrices with rank and nullity by Gaussian elimination over Q."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence


class ExactMatrix:
    """A rows x cols matrix over Q.

    Entries live in per-row dicts (column -> value, zeros omitted); contraction
    matrices are 0/1 with one nonzero per column, so this keeps them small.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Iterable[dict[int, Rational]] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimension")
        self.rows = rows
        self.cols = cols
        self._data: list[dict[int, Rational]] = (
            [dict() for _ in range(rows)] if data is None
            else [{c: v for c, v in r.items() if v != 0} for r in data]
        )
        if len(self._data) != rows:
            raise ValueError(f"expected {rows} rows, got {len(self._data)}")
        for r in self._data:
            if any(not 0 <= c < cols for c in r):
                raise IndexError("column index out of range")

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[Rational]]) -> ExactMatrix:
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        if any(len(r) != cols for r in entries):
            raise ValueError("ragged rows")
        return cls(rows, cols, ({j: v for j, v in enumerate(r) if v} for r in entries))

    def __getitem__(self, ij: tuple[int, int]) -> Rational:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._data[i].get(j, 0)

    def __setitem__(self, ij: tuple[int, int], value: Rational) -> None:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        if value:
            self._data[i][j] = value
        else:
            self._data[i].pop(j, None)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._data) == (other.rows, other.cols, other._data)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._data)

    def row(self, i: int) -> dict[int, Rational]:
        return dict(self._data[i])

    def to_dense(self) -> list[list[Rational]]:
        return [[r.get(j, 0) for j in range(self.cols)] for r in self._data]

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for r in self._data:
            acc: dict[int, Rational] = {}
            for k, a in r.items():
                for j, b in other._data[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            out.append(acc)
        return ExactMatrix(self.rows, other.cols, out)

    @staticmethod
    def vstack(blocks: Sequence[ExactMatrix], cols: int | None = None) -> ExactMatrix:
        if cols is None:
            if not blocks:
                raise ValueError("cannot infer width of an empty stack")
            cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise ValueError("column mismatch in vstack")
        data = [r for b in blocks for r in b._data]
        return ExactMatrix(len(data), cols, data)

    def rank(self) -> int:
        # pivots: leading column -> row normalized to 1 at that column
        pivots: dict[int, dict[int, Fraction]] = {}
        for src in self._data:
            r = {c: Fraction(v) for c, v in src.items()}
            while r:
                lead = min(r)
                piv = pivots.get(lead)
                if piv is None:
                    inv = 1 / r[lead]
                    pivots[lead] = {c: v * inv for c, v in r.items()}
                    break
                f = r[lead]
                for c, v in piv.items():
                    x = r.get(c, 0) - f * v
                    if x:
                        r[c] = x
                    else:
                        r.pop(c, None)
        return len(pivots)

    def nullity(self) -> int:
        return self.cols - self.rank()
