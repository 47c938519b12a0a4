"""Dense GF(2) linear algebra on bit-packed rows.

Rows are stored as Python ints used as bitsets (bit ``j`` of a row is the
entry in column ``j``), so every row operation is a single word-parallel
XOR/AND regardless of width.  All operations are pure: inputs are never
modified.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ShapeError

__all__ = [
    "Gf2Matrix",
    "bits_of",
    "gf2_identity",
    "gf2_is_identity",
    "gf2_mul",
    "gf2_rank",
    "gf2_transpose",
    "gf2_zeros",
    "hstack",
]


def bits_of(x: int) -> Iterator[int]:
    """Indices of the set bits of ``x``, lowest first."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Gf2Matrix:
    """Immutable binary matrix; ``rows[i]`` is the bitset of row ``i``."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ShapeError("matrix dimensions must be nonnegative")
        if len(self.rows) != self.nrows:
            raise ShapeError(
                f"expected {self.nrows} rows, got {len(self.rows)}"
            )
        for i, row in enumerate(self.rows):
            if row < 0 or row >> self.ncols:
                raise ShapeError(
                    f"row {i} has bits outside the {self.ncols} columns"
                )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> Gf2Matrix:
        """Build from nested 0/1 entries (row-major)."""
        packed = []
        width = None
        for entries in rows:
            entries = list(entries)
            if width is None:
                width = len(entries)
            elif len(entries) != width:
                raise ShapeError("ragged rows")
            bits = 0
            for j, e in enumerate(entries):
                if e not in (0, 1):
                    raise ShapeError(f"entry {e!r} is not a bit")
                bits |= e << j
            packed.append(bits)
        return cls(len(packed), width or 0, tuple(packed))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def as_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(
            "".join(str((r >> j) & 1) for j in range(self.ncols))
            for r in self.rows
        )


def gf2_identity(n: int) -> Gf2Matrix:
    return Gf2Matrix(n, n, tuple(1 << i for i in range(n)))


def gf2_zeros(nrows: int, ncols: int) -> Gf2Matrix:
    return Gf2Matrix(nrows, ncols, (0,) * nrows)


def gf2_rank(m: Gf2Matrix) -> int:
    """Row rank over GF(2).

    Forward elimination, pivoting on the lowest set column index first so
    the reduction order is deterministic.
    """
    work = [r for r in m.rows if r]
    rank = 0
    for col in range(m.ncols):
        pivot = None
        for i in range(rank, len(work)):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(rank + 1, len(work)):
            if (work[i] >> col) & 1:
                work[i] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank


def gf2_mul(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    """Matrix product mod 2.

    Row i of the product is the XOR of the rows of ``b`` selected by the
    set bits of row i of ``a``.
    """
    if a.ncols != b.nrows:
        raise ShapeError(
            f"cannot multiply {a.nrows}x{a.ncols} by {b.nrows}x{b.ncols}"
        )
    out = []
    for row in a.rows:
        acc = 0
        for j in bits_of(row):
            acc ^= b.rows[j]
        out.append(acc)
    return Gf2Matrix(a.nrows, b.ncols, tuple(out))


def gf2_is_identity(m: Gf2Matrix) -> bool:
    """True iff ``m`` is square and equal to the identity."""
    if m.nrows != m.ncols:
        return False
    return all(row == 1 << i for i, row in enumerate(m.rows))


def hstack(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    """Column-wise concatenation ``[a | b]``."""
    if a.nrows != b.nrows:
        raise ShapeError(
            f"cannot hstack {a.nrows} rows with {b.nrows} rows"
        )
    rows = tuple(
        ra | (rb << a.ncols) for ra, rb in zip(a.rows, b.rows)
    )
    return Gf2Matrix(a.nrows, a.ncols + b.ncols, rows)


def gf2_transpose(m: Gf2Matrix) -> Gf2Matrix:
    rows = []
    for j in range(m.ncols):
        bits = 0
        for i, row in enumerate(m.rows):
            bits |= ((row >> j) & 1) << i
        rows.append(bits)
    return Gf2Matrix(m.ncols, m.nrows, tuple(rows))
