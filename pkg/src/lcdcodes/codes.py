"""Binary linear codes: minimum distance, the Massey LCD test, standard form.

A :class:`LinearCode` wraps a full-rank generator matrix.  Rank-deficient
generators are rejected at construction instead of being reduced, so ``k``
is always the true dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateCodeError, DimensionError, InfeasibleSizeError, InvalidTransformError
from .gf2 import BitWord, Gf2Matrix, det, gram, mat_mul, rank, rref, words_to_blocks

__all__ = [
    "LinearCode",
    "ColumnPermutation",
    "MAX_MIN_DISTANCE_K",
    "min_distance",
    "k2_distance",
    "is_lcd",
    "standard_form",
    "permute_columns",
    "row_transform",
]

#: Largest dimension for which ``min_distance`` will enumerate the code.
MAX_MIN_DISTANCE_K = 24

# Dimensions up to this size are walked codeword by codeword in pure Python.
_SMALL_K = 10
# Size (as a power of two) of the vectorized low-order codeword table.
_TABLE_K = 12


@dataclass(frozen=True)
class LinearCode:
    """An ``[n, k]`` binary linear code given by a full-rank generator."""

    generator: Gf2Matrix

    def __post_init__(self):
        g = self.generator
        if not isinstance(g, Gf2Matrix):
            object.__setattr__(self, "generator", Gf2Matrix.from_rows(g))
            g = self.generator
        if g.nrows < 1 or g.nrows > g.ncols:
            raise DegenerateCodeError(f"need 1 <= k <= n, got k={g.nrows}, n={g.ncols}")
        r = rank(g)
        if r != g.nrows:
            raise DegenerateCodeError(f"generator has rank {r} < k={g.nrows}")

    @classmethod
    def from_rows(cls, rows: Sequence) -> LinearCode:
        return cls(Gf2Matrix.from_rows(rows))

    @property
    def n(self) -> int:
        return self.generator.ncols

    @property
    def k(self) -> int:
        return self.generator.nrows

    def __str__(self) -> str:
        return str(self.generator)


@dataclass(frozen=True)
class ColumnPermutation:
    """Column permutation: output column ``j`` is input column ``mapping[j]``."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(int(i) for i in self.mapping))
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise InvalidTransformError(f"{self.mapping} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> ColumnPermutation:
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> ColumnPermutation:
        m = list(range(n))
        m[i], m[j] = m[j], m[i]
        return cls(tuple(m))

    def __len__(self) -> int:
        return len(self.mapping)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.mapping))

    def then(self, other: ColumnPermutation) -> ColumnPermutation:
        """Permutation equal to applying ``self`` first and ``other`` second."""
        if len(other) != len(self):
            raise DimensionError("permutation sizes differ")
        return ColumnPermutation(tuple(self.mapping[i] for i in other.mapping))

    def inverse(self) -> ColumnPermutation:
        inv = [0] * len(self.mapping)
        for j, i in enumerate(self.mapping):
            inv[i] = j
        return ColumnPermutation(tuple(inv))

    def apply(self, word: BitWord) -> BitWord:
        if word.length != len(self.mapping):
            raise DimensionError(f"permutation of size {len(self)} applied to length {word.length}")
        bits = word.bits
        out = 0
        for j, i in enumerate(self.mapping):
            out |= ((bits >> i) & 1) << j
        return BitWord(word.length, out)


def _min_weight_small(rows: list[int]) -> int:
    # Gray-code walk: one row XOR per step.
    best = None
    cw = 0
    for step in range(1, 1 << len(rows)):
        cw ^= rows[(step & -step).bit_length() - 1]
        w = cw.bit_count()
        if best is None or w < best:
            best = w
    return best


def _min_weight_blocked(rows: list[int], n: int) -> int:
    # Table of all combinations of the low rows, then a Gray-code walk over
    # the high rows applying one XOR to the whole table per step.
    low, high = rows[:_TABLE_K], rows[_TABLE_K:]
    low_blocks = words_to_blocks(low, n)
    table = np.zeros((1, low_blocks.shape[1]), dtype=np.uint64)
    for r in low_blocks:
        table = np.concatenate([table, table ^ r])
    high_blocks = words_to_blocks(high, n)
    weights = np.bitwise_count(table).sum(axis=1, dtype=np.int64)
    best = int(weights[1:].min())
    cur = np.zeros(low_blocks.shape[1], dtype=np.uint64)
    for step in range(1, 1 << len(high)):
        cur ^= high_blocks[(step & -step).bit_length() - 1]
        w = int(np.bitwise_count(table ^ cur).sum(axis=1, dtype=np.int64).min())
        best = min(best, w)
    return best


def min_distance(code: LinearCode) -> int:
    """Minimum Hamming weight over all nonzero codewords.

    Enumerates the ``2**k - 1`` nonzero codewords, so ``k`` is limited to
    :data:`MAX_MIN_DISTANCE_K`.
    """
    if code.k > MAX_MIN_DISTANCE_K:
        raise InfeasibleSizeError(
            f"min_distance enumerates 2^{code.k} codewords; limit is k <= {MAX_MIN_DISTANCE_K}"
        )
    rows = code.generator.row_ints()
    if code.k <= _SMALL_K:
        return _min_weight_small(rows)
    return _min_weight_blocked(rows, code.n)


def k2_distance(u: BitWord, v: BitWord) -> int:
    """Minimum distance of the ``[n, 2]`` code spanned by ``u`` and ``v``."""
    if u.length != v.length:
        raise DimensionError(f"length mismatch: {u.length} vs {v.length}")
    if u.bits == 0 or v.bits == 0 or u.bits == v.bits:
        raise DegenerateCodeError("u and v must be linearly independent")
    return min(u.weight, v.weight, (u.bits ^ v.bits).bit_count())


def is_lcd(code: LinearCode) -> bool:
    """True iff ``C`` meets its dual only in zero, i.e. ``G G^T`` is nonsingular."""
    return det(gram(code.generator)) == 1


def permute_columns(code: LinearCode, perm: ColumnPermutation) -> LinearCode:
    if len(perm) != code.n:
        raise InvalidTransformError(f"permutation of size {len(perm)} for length {code.n}")
    return LinearCode(Gf2Matrix(tuple(perm.apply(r) for r in code.generator.rows), code.n))


def row_transform(code: LinearCode, m: Gf2Matrix) -> LinearCode:
    """Replace the generator ``G`` by ``M G``; the code itself is unchanged."""
    if m.shape != (code.k, code.k):
        raise InvalidTransformError(f"row transform must be {code.k}x{code.k}, got {m.shape}")
    if det(m) != 1:
        raise InvalidTransformError("row transform matrix is singular")
    return LinearCode(mat_mul(m, code.generator))


def standard_form(code: LinearCode) -> tuple[LinearCode, ColumnPermutation]:
    """Permutation-equivalent generator ``[I_k | A]`` and the permutation used.

    Row reduction comes first.  A column swap is made only for a pivot that
    is not already in place, exchanging column ``i`` with the ``i``-th pivot
    column.  The returned permutation maps the input columns onto the
    output, so ``permute_columns(code, perm)`` spans the returned code.
    """
    reduced, pivots = rref(code.generator)
    n = code.n
    perm = ColumnPermutation.identity(n)
    for i, p in enumerate(pivots):
        if p != i:
            perm = perm.then(ColumnPermutation.transposition(n, i, p))
    rows = tuple(perm.apply(r) for r in reduced.rows)
    return LinearCode(Gf2Matrix(rows, n)), perm
