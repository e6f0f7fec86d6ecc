"""Closed form for the largest minimum distance of binary LCD [n, 2] codes."""

from __future__ import annotations

from typing import NamedTuple

from .errors import DomainError

__all__ = ["NDecomposition", "decompose", "lcd_n2_formula"]


class NDecomposition(NamedTuple):
    """``n = 6 r + s`` with ``s`` in 3..8; ``r = -1`` only for ``n = 2``."""

    r: int
    s: int

    @property
    def n(self) -> int:
        return 6 * self.r + self.s


def decompose(n: int) -> NDecomposition:
    if n < 2:
        raise DomainError(f"no [n,2] code exists for n={n}")
    if n == 2:
        return NDecomposition(-1, 8)
    r = (n - 3) // 6
    return NDecomposition(r, n - 6 * r)


def lcd_n2_formula(n: int) -> int:
    """LCD[n,2] = 4r + floor(s/6) * (1 + (s mod 6)) + 2, where n = 6r + s.

    The bracket ``1 + (s mod 6)`` gives 4r+2 for s in {3,4,5} and 4r+3,
    4r+4, 4r+5 for s = 6, 7, 8.
    """
    r, s = decompose(n)
    return 4 * r + (s // 6) * (1 + s % 6) + 2
