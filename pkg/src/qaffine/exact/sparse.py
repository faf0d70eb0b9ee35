"""Sparse matrices over an exact field (dict of rows)."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping


class SparseMatrix:
    """Matrix with only nonzero entries stored.

    Entries may be any exact field element supporting ``+``, ``*`` and
    truthiness (Frac, RatFunc, Fraction, int).  Instances are treated as
    immutable once built.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, entries: Mapping | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, dict[int, object]] = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < nrows and 0 <= j < ncols):
                    raise IndexError(f"entry ({i},{j}) outside {nrows}x{ncols}")
                if v:
                    self.rows.setdefault(i, {})[j] = v

    @classmethod
    def from_rows(cls, nrows, ncols, rows: Mapping[int, Mapping[int, object]]):
        m = cls(nrows, ncols)
        for i, r in rows.items():
            clean = {j: v for j, v in r.items() if v}
            if clean:
                m.rows[i] = clean
        return m

    @classmethod
    def identity(cls, n: int, one) -> "SparseMatrix":
        return cls.from_rows(n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def diagonal(cls, values: Iterable) -> "SparseMatrix":
        values = list(values)
        return cls.from_rows(len(values), len(values), {i: {i: v} for i, v in enumerate(values)})

    # access -----------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def get(self, i: int, j: int, default=0):
        return self.rows.get(i, {}).get(j, default)

    def items(self):
        for i, r in self.rows.items():
            for j, v in r.items():
                yield (i, j), v

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def columns(self) -> dict[int, dict[int, object]]:
        cols: dict[int, dict[int, object]] = {}
        for i, r in self.rows.items():
            for j, v in r.items():
                cols.setdefault(j, {})[i] = v
        return cols

    def is_zero(self) -> bool:
        return not self.rows

    # algebra ------------------------------------------------------------------

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out: dict[int, dict[int, object]] = {}
        for i, r in self.rows.items():
            acc: dict[int, object] = {}
            for k, a in r.items():
                orow = other.rows.get(k)
                if not orow:
                    continue
                for j, b in orow.items():
                    t = a * b
                    acc[j] = acc[j] + t if j in acc else t
            out[i] = acc
        return SparseMatrix.from_rows(self.nrows, other.ncols, out)

    def apply(self, vec: Mapping[int, object]) -> dict[int, object]:
        """Matrix times a sparse column vector given as {index: value}."""
        out: dict[int, object] = {}
        for i, r in self.rows.items():
            acc = None
            for k, a in r.items():
                v = vec.get(k)
                if v:
                    acc = a * v if acc is None else acc + a * v
            if acc:
                out[i] = acc
        return out

    def _combine(self, other: "SparseMatrix", sign: int) -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            row = out.setdefault(i, {})
            for j, v in r.items():
                v = v if sign > 0 else -v
                row[j] = row[j] + v if j in row else v
        return SparseMatrix.from_rows(self.nrows, self.ncols, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.map(lambda v: -v)

    def scale(self, c) -> "SparseMatrix":
        return self.map(lambda v: v * c)

    def map(self, fn: Callable) -> "SparseMatrix":
        return SparseMatrix.from_rows(
            self.nrows, self.ncols, {i: {j: fn(v) for j, v in r.items()} for i, r in self.rows.items()}
        )

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix.from_rows(self.ncols, self.nrows, self.columns())

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        out: dict[int, dict[int, object]] = {}
        for i1, r1 in self.rows.items():
            for i2, r2 in other.rows.items():
                row = out.setdefault(i1 * other.nrows + i2, {})
                for j1, a in r1.items():
                    for j2, b in r2.items():
                        row[j1 * other.ncols + j2] = a * b
        return SparseMatrix.from_rows(self.nrows * other.nrows, self.ncols * other.ncols, out)

    def submatrix(self, rows: list[int], cols: list[int]) -> "SparseMatrix":
        cidx = {c: k for k, c in enumerate(cols)}
        out = {}
        for a, i in enumerate(rows):
            r = self.rows.get(i)
            if r:
                out[a] = {cidx[j]: v for j, v in r.items() if j in cidx}
        return SparseMatrix.from_rows(len(rows), len(cols), out)

    def to_dense(self, zero=0) -> list[list]:
        return [[self.get(i, j, zero) for j in range(self.ncols)] for i in range(self.nrows)]

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def identity_like(n: int, one) -> SparseMatrix:
    return SparseMatrix.identity(n, one)
