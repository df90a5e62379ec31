"""Bit-packed linear algebra over GF(2).

A row is a Python int whose bit ``c`` holds column ``c``; ints give
word-parallel XOR and popcount at any width without manual word handling.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .field import GF2m


class DimensionError(ValueError):
    pass


class BitMatrix:
    """Immutable ``rows x cols`` matrix over GF(2)."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[int], ncols: int):
        rows = tuple(int(r) for r in rows)
        if ncols < 0:
            raise DimensionError("negative column count")
        limit = 1 << ncols
        for r in rows:
            if r < 0 or r >= limit:
                raise DimensionError(f"row {r:#x} does not fit in {ncols} columns")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def from_bits(cls, bits: Sequence[Sequence[int]], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            ncols = len(bits[0]) if len(bits) else 0
        rows = []
        for row in bits:
            if len(row) != ncols:
                raise DimensionError("ragged bit rows")
            rows.append(sum(1 << c for c, b in enumerate(row) if int(b) & 1))
        return cls(rows, ncols)

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BitMatrix":
        return cls.from_bits([[int(ch) for ch in s] for s in lines], len(lines[0]) if lines else 0)

    @classmethod
    def identity(cls, k: int) -> "BitMatrix":
        return cls((1 << i for i in range(k)), k)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls([0] * nrows, ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BitMatrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return (self.rows[r] >> c) & 1

    def to_bits(self) -> list[list[int]]:
        return [[(r >> c) & 1 for c in range(self.ncols)] for r in self.rows]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.to_bits(), dtype=np.uint8).reshape(self.nrows, self.ncols)

    def row_strings(self) -> list[str]:
        return [bits_to_str(r, self.ncols) for r in self.rows]

    def transpose(self) -> "BitMatrix":
        out = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(out, self.nrows)

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.ncols != self.ncols:
            raise DimensionError(f"column mismatch: {self.ncols} vs {other.ncols}")
        return BitMatrix(self.rows + other.rows, self.ncols)

    def mul_vec(self, v: int) -> int:
        """``M v^T`` packed as an int (bit i = row i)."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r & v).bit_count() & 1) << i
        return out

    def rank(self) -> int:
        return len(rref(self)[1])

    def dumps(self) -> str:
        """Plain-text form: ``"rows cols"`` then one 0/1 string per row."""
        return "".join([f"{self.nrows} {self.ncols}\n"] + [s + "\n" for s in self.row_strings()])

    @classmethod
    def loads(cls, text: str) -> "BitMatrix":
        lines = text.split("\n")
        try:
            nrows, ncols = (int(t) for t in lines[0].split())
        except ValueError as exc:
            raise DimensionError("matrix header must be 'rows cols'") from exc
        body = [ln.strip() for ln in lines[1 : 1 + nrows]]
        if len(body) != nrows or any(len(s) != ncols or set(s) - {"0", "1"} for s in body):
            raise DimensionError("matrix body does not match its header")
        return cls([str_to_bits(s) for s in body], ncols)


def bits_to_str(v: int, n: int) -> str:
    return "".join("1" if (v >> c) & 1 else "0" for c in range(n))


def str_to_bits(s: str) -> int:
    return sum(1 << c for c, ch in enumerate(s) if ch == "1")


def rref(M: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    work = [r for r in M.rows if r]
    pivots: list[int] = []
    top = 0
    for col in range(M.ncols):
        bit = 1 << col
        for i in range(top, len(work)):
            if work[i] & bit:
                break
        else:
            continue
        work[top], work[i] = work[i], work[top]
        prow = work[top]
        for j in range(len(work)):
            if j != top and work[j] & bit:
                work[j] ^= prow
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return BitMatrix(work[:top], M.ncols), pivots


def nullspace(M: BitMatrix) -> BitMatrix:
    """Basis of ``{v : M v^T = 0}``, one row per free column, ascending."""
    R, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivset:
            continue
        v = 1 << free
        bit = 1 << free
        for row, p in zip(R.rows, pivots):
            if row & bit:
                v |= 1 << p
        basis.append(v)
    return BitMatrix(basis, M.ncols)


def row_space_equal(A: BitMatrix, B: BitMatrix) -> bool:
    if A.ncols != B.ncols:
        raise DimensionError(f"column mismatch: {A.ncols} vs {B.ncols}")
    return rref(A)[0] == rref(B)[0]


def in_row_space(v: int, R: BitMatrix, pivots: Sequence[int]) -> bool:
    """Membership of ``v`` in the span of an RREF matrix with the given pivots."""
    for row, p in zip(R.rows, pivots):
        if (v >> p) & 1:
            v ^= row
    return v == 0


def binary_expand(M: Sequence[Sequence[int]], field: GF2m) -> BitMatrix:
    """Replace each GF(2^m) entry by the column of its m basis coordinates.

    Row ``i*m + b`` of the result holds coordinate bit ``b`` of row ``i``.
    """
    m = field.m
    ncols = len(M[0]) if len(M) else 0
    out = []
    for row in M:
        if len(row) != ncols:
            raise DimensionError("ragged field matrix")
        planes = [0] * m
        for c, a in enumerate(row):
            a = field.check(a)
            b = 0
            while a:
                if a & 1:
                    planes[b] |= 1 << c
                a >>= 1
                b += 1
        out.extend(planes)
    return BitMatrix(out, ncols)
