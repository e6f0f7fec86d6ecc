"""Optimal LCD [n, 2] generator matrices.

Both families are ``m`` copies of ``I_2`` laid side by side followed by
``t`` all-ones columns::

    1 0 1 0 ... 1 0 | 1 ... 1
    0 1 0 1 ... 0 1 | 1 ... 1

Family A (s in 3..5) uses ``m = 2r+1`` and ``t = 2r+s-2``; family B
(s in 6..8) uses ``m = 2r+3`` and ``t = 2r+s-6``.  Columns are emitted in
that order, not in ``[I_2 | A]`` form; apply
:func:`lcdcodes.codes.standard_form` if that is wanted.
"""

from __future__ import annotations

from .codes import LinearCode
from .errors import DomainError
from .formula import decompose
from .gf2 import BitWord, Gf2Matrix

__all__ = ["blocks_and_ones", "construct_family_a", "construct_family_b", "construct_optimal"]


def blocks_and_ones(blocks: int, ones: int) -> LinearCode:
    """``blocks`` copies of ``I_2`` followed by ``ones`` columns of (1, 1)."""
    if blocks < 1 or ones < 0:
        raise DomainError(f"need blocks >= 1 and ones >= 0, got {blocks}, {ones}")
    n = 2 * blocks + ones
    tail = ((1 << ones) - 1) << (2 * blocks)
    even = sum(1 << (2 * i) for i in range(blocks))
    u = BitWord(n, even | tail)
    v = BitWord(n, (even << 1) | tail)
    return LinearCode(Gf2Matrix((u, v), n))


def construct_family_a(r: int, s: int) -> LinearCode:
    if r < 0 or s not in (3, 4, 5):
        raise DomainError(f"family A needs r >= 0 and s in 3..5, got r={r}, s={s}")
    return blocks_and_ones(2 * r + 1, 2 * r + s - 2)


def construct_family_b(r: int, s: int) -> LinearCode:
    if r < 0 or s not in (6, 7, 8):
        raise DomainError(f"family B needs r >= 0 and s in 6..8, got r={r}, s={s}")
    return blocks_and_ones(2 * r + 3, 2 * r + s - 6)


def construct_optimal(n: int) -> LinearCode:
    """An LCD [n, 2] code whose minimum distance equals ``lcd_n2_formula(n)``."""
    r, s = decompose(n)
    if r < 0:
        return LinearCode(Gf2Matrix.identity(2))
    if s <= 5:
        return construct_family_a(r, s)
    return construct_family_b(r, s)
