"""Bit-packed vectors and dense matrices over GF(2).

A :class:`BitWord` stores its ``n`` binary digits in a single Python ``int``
with position ``i`` held in bit ``i``.  CPython ints are arrays of fixed-width
machine digits, so words of any length are supported and XOR / popcount run
at C speed.  Canonical padding: every bit at or above ``length`` is zero,
which the constructor enforces.

Text form lists positions left to right, so ``BitWord.from_string("110")``
has bit 0 and bit 1 set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DimensionError

__all__ = [
    "BitWord",
    "Gf2Matrix",
    "RrefResult",
    "word_add",
    "word_dot",
    "weight",
    "mat_mul",
    "mat_transpose",
    "gram",
    "rank",
    "det",
    "rref",
    "words_to_blocks",
]


def _to_text(bits: int, length: int) -> str:
    return "".join("1" if (bits >> i) & 1 else "0" for i in range(length))


@dataclass(frozen=True)
class BitWord:
    """A length-``n`` binary vector."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise DimensionError(f"negative length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise DimensionError(
                f"bits 0x{self.bits:x} do not fit in length {self.length}"
            )

    @classmethod
    def zeros(cls, n: int) -> BitWord:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> BitWord:
        return cls(n, (1 << n) - 1)

    @classmethod
    def unit(cls, n: int, i: int) -> BitWord:
        if not 0 <= i < n:
            raise DimensionError(f"position {i} out of range for length {n}")
        return cls(n, 1 << i)

    @classmethod
    def from_string(cls, text: str) -> BitWord:
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"illegal character {ch!r} at position {i}")
        return cls(len(text), bits)

    @classmethod
    def from_bits(cls, digits: Iterable[int]) -> BitWord:
        bits = 0
        n = 0
        for i, b in enumerate(digits):
            if b not in (0, 1):
                raise ValueError(f"entry {b!r} at position {i} is not a bit")
            bits |= int(b) << i
            n = i + 1
        return cls(n, bits)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self.length
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self):
        return ((self.bits >> i) & 1 for i in range(self.length))

    def __add__(self, other: BitWord) -> BitWord:
        return word_add(self, other)

    def __and__(self, other: BitWord) -> BitWord:
        _check_same_length(self, other)
        return BitWord(self.length, self.bits & other.bits)

    def __str__(self) -> str:
        return _to_text(self.bits, self.length)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def tolist(self) -> list[int]:
        return list(self)


def _check_same_length(u: BitWord, v: BitWord) -> None:
    if u.length != v.length:
        raise DimensionError(f"length mismatch: {u.length} vs {v.length}")


def word_add(u: BitWord, v: BitWord) -> BitWord:
    """Componentwise sum (XOR) of two words of equal length."""
    _check_same_length(u, v)
    return BitWord(u.length, u.bits ^ v.bits)


def word_dot(u: BitWord, v: BitWord) -> int:
    """Standard inner product over GF(2)."""
    _check_same_length(u, v)
    return (u.bits & v.bits).bit_count() & 1


def weight(u: BitWord) -> int:
    return u.bits.bit_count()


@dataclass(frozen=True)
class Gf2Matrix:
    """A ``k x n`` matrix over GF(2), stored as a tuple of row words.

    ``ncols`` is kept explicitly so that matrices with no rows still carry
    their width.
    """

    rows: tuple[BitWord, ...]
    ncols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.ncols < 0:
            raise DimensionError(f"negative column count {self.ncols}")
        for i, row in enumerate(self.rows):
            if not isinstance(row, BitWord):
                raise TypeError(f"row {i} is {type(row).__name__}, not BitWord")
            if row.length != self.ncols:
                raise DimensionError(
                    f"row {i} has length {row.length}, expected {self.ncols}"
                )

    @classmethod
    def from_rows(cls, rows: Sequence, ncols: int | None = None) -> Gf2Matrix:
        """Build from BitWords, '0'/'1' strings or sequences of bits."""
        words = []
        for row in rows:
            if isinstance(row, BitWord):
                words.append(row)
            elif isinstance(row, str):
                words.append(BitWord.from_string(row))
            else:
                words.append(BitWord.from_bits(row))
        if ncols is None:
            if not words:
                raise DimensionError("ncols is required for a matrix with no rows")
            ncols = words[0].length
        return cls(tuple(words), ncols)

    @classmethod
    def from_ints(cls, ints: Iterable[int], ncols: int) -> Gf2Matrix:
        return cls(tuple(BitWord(ncols, int(x)) for x in ints), ncols)

    @classmethod
    def from_array(cls, array) -> Gf2Matrix:
        a = np.asarray(array)
        if a.ndim != 2:
            raise DimensionError(f"expected a 2-d array, got shape {a.shape}")
        if not np.isin(a, (0, 1)).all():
            raise ValueError("array entries must be 0 or 1")
        return cls.from_rows(a.astype(int).tolist(), ncols=a.shape[1])

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(tuple(BitWord.unit(n, i) for i in range(n)), n)

    @classmethod
    def zeros(cls, k: int, n: int) -> Gf2Matrix:
        return cls(tuple(BitWord.zeros(n) for _ in range(k)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, index):
        if isinstance(index, tuple):
            i, j = index
            return self.rows[i][j]
        return self.rows[index]

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        return mat_mul(self, other)

    @property
    def T(self) -> Gf2Matrix:
        return mat_transpose(self)

    def column(self, j: int) -> BitWord:
        if not 0 <= j < self.ncols:
            raise IndexError(j)
        return BitWord(self.nrows, sum(((r.bits >> j) & 1) << i for i, r in enumerate(self.rows)))

    def row_ints(self) -> list[int]:
        return [r.bits for r in self.rows]

    def tolist(self) -> list[list[int]]:
        return [r.tolist() for r in self.rows]

    def to_array(self) -> np.ndarray:
        return np.array(self.tolist(), dtype=np.uint8).reshape(self.shape)

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)


def mat_transpose(a: Gf2Matrix) -> Gf2Matrix:
    return Gf2Matrix(tuple(a.column(j) for j in range(a.ncols)), a.nrows)


def mat_mul(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    """Matrix product over GF(2).

    Row ``i`` of the product is the XOR of the rows of ``b`` selected by the
    ones in row ``i`` of ``a``.
    """
    if a.ncols != b.nrows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    b_rows = b.row_ints()
    out = []
    for row in a.rows:
        acc = 0
        bits = row.bits
        while bits:
            low = bits & -bits
            acc ^= b_rows[low.bit_length() - 1]
            bits ^= low
        out.append(BitWord(b.ncols, acc))
    return Gf2Matrix(tuple(out), b.ncols)


def gram(g: Gf2Matrix) -> Gf2Matrix:
    """Return ``G G^T``.

    Computed entrywise from row inner products; equal to
    ``mat_mul(g, mat_transpose(g))``.
    """
    ints = g.row_ints()
    k = len(ints)
    out = []
    for i in range(k):
        bits = 0
        for j in range(k):
            bits |= ((ints[i] & ints[j]).bit_count() & 1) << j
        out.append(BitWord(k, bits))
    return Gf2Matrix(tuple(out), k)


class RrefResult(NamedTuple):
    matrix: Gf2Matrix
    pivots: tuple[int, ...]


def _eliminate(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    # Gauss-Jordan in place: leftmost pivot column, top-to-bottom rows.
    pivots = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        if r == nrows:
            break
        mask = 1 << col
        for i in range(r, nrows):
            if rows[i] & mask:
                break
        else:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        pivot_row = rows[r]
        for j in range(nrows):
            if j != r and rows[j] & mask:
                rows[j] ^= pivot_row
        pivots.append(col)
        r += 1
    return rows, pivots


def rref(a: Gf2Matrix) -> RrefResult:
    """Reduced row-echelon form and its pivot columns.

    Zero rows are kept at the bottom so the shape is unchanged.
    """
    rows, pivots = _eliminate(a.row_ints(), a.ncols)
    return RrefResult(Gf2Matrix.from_ints(rows, a.ncols), tuple(pivots))


def rank(a: Gf2Matrix) -> int:
    return len(_eliminate(a.row_ints(), a.ncols)[1])


def det(a: Gf2Matrix) -> int:
    """Determinant over GF(2): 1 exactly when ``a`` is nonsingular."""
    if a.nrows != a.ncols:
        raise DimensionError(f"determinant of non-square {a.shape} matrix")
    return int(rank(a) == a.nrows)


def words_to_blocks(ints: Sequence[int], n: int) -> np.ndarray:
    """Pack words of length ``n`` into a ``(len(ints), ceil(n/64))`` uint64 array."""
    nblocks = max(1, (n + 63) // 64)
    buf = b"".join(int(x).to_bytes(nblocks * 8, "little") for x in ints)
    return np.frombuffer(buf, dtype="<u8").reshape(len(ints), nblocks).astype(np.uint64)
