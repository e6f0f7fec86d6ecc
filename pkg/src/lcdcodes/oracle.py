"""Brute-force computation of LCD[n, k].

Three independent searches:

* :func:`oracle_profile` sweeps weight profiles ``(a, b, c, e)``, the column
  census of a two-row generator.  Distance and LCD status depend only on
  the census, so this is exact for ``k = 2`` and costs O(n^3).
* :func:`oracle_exhaustive` visits every ``k``-dimensional subspace of
  GF(2)^n once through its RREF generator and applies the matrix-level
  distance and Gram-determinant tests, vectorized with numpy.
* :func:`oracle_pairs` scans unordered pairs of distinct nonzero words.

Witnesses are tie-broken by scan order, never by which worker finishes
first, so results do not depend on the worker count.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Union

import numpy as np

from .codes import LinearCode
from .errors import DomainError, InfeasibleSizeError
from .gf2 import BitWord, Gf2Matrix

__all__ = [
    "WeightProfile",
    "OracleResult",
    "DEFAULT_BUDGET",
    "PAIRS_MAX_N",
    "profile_distance",
    "profile_is_lcd",
    "profile_to_matrix",
    "oracle_profile",
    "gaussian_binomial",
    "pivot_sets",
    "iter_rref",
    "count_rref",
    "oracle_exhaustive",
    "oracle_pairs",
]

log = logging.getLogger(__name__)

#: Default cap on the number of RREF matrices :func:`oracle_exhaustive` may
#: visit.  Admits k=2 up to n=16 (~7.2e8 codes) and k=3 up to n=12 (~4.1e8).
DEFAULT_BUDGET = 750_000_000

#: Largest length accepted by :func:`oracle_pairs`.
PAIRS_MAX_N = 16

# Candidates processed per numpy batch.
_CHUNK = 1 << 20


@dataclass(frozen=True)
class WeightProfile:
    """Column census of a two-row generator.

    ``a``, ``b``, ``c``, ``e`` count the columns equal to (1,0), (0,1),
    (1,1) and (0,0).  Two generators with the same census differ only by a
    column permutation.
    """

    a: int
    b: int
    c: int
    e: int = 0

    def __post_init__(self):
        a, b, c, e = self.a, self.b, self.c, self.e
        if min(a, b, c, e) < 0:
            raise DomainError(f"negative count in {self}")
        # u != 0, v != 0, u != v
        if a + c < 1 or b + c < 1 or a + b < 1:
            raise DomainError(f"{self} does not describe a 2-dimensional code")

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + self.e

    @classmethod
    def of(cls, code: LinearCode) -> WeightProfile:
        if code.k != 2:
            raise DomainError(f"weight profiles describe k=2 codes, got k={code.k}")
        u, v = code.generator.row_ints()
        both = (u & v).bit_count()
        only_u = u.bit_count() - both
        only_v = v.bit_count() - both
        return cls(only_u, only_v, both, code.n - only_u - only_v - both)

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.e)


def profile_distance(p: WeightProfile) -> int:
    # wt(u) = a+c, wt(v) = b+c, wt(u+v) = a+b
    return min(p.a + p.c, p.b + p.c, p.a + p.b)


def profile_is_lcd(p: WeightProfile) -> bool:
    """Gram determinant of a profile, mod 2.

    The Gram entries are u.u = a+c, v.v = b+c and u.v = c (mod 2), so
    det = (a+c)(b+c) - c^2, which is odd iff (a+c)(b+c) + c is odd.
    """
    return ((p.a + p.c) * (p.b + p.c) + p.c) % 2 == 1


def profile_to_matrix(p: WeightProfile) -> LinearCode:
    """Generator with columns (1,0)^a, (0,1)^b, (1,1)^c, (0,0)^e in that order."""
    n = p.n
    u = ((1 << p.a) - 1) | (((1 << p.c) - 1) << (p.a + p.b))
    v = (((1 << p.b) - 1) << p.a) | (((1 << p.c) - 1) << (p.a + p.b))
    return LinearCode(Gf2Matrix((BitWord(n, u), BitWord(n, v)), n))


@dataclass(frozen=True)
class OracleResult:
    """Best distance found by an oracle, with one optimal witness.

    ``witness`` is a :class:`WeightProfile` for the profile oracle and a
    generator :class:`Gf2Matrix` for the exhaustive oracle.
    """

    n: int
    k: int
    d: int
    witness: Union[WeightProfile, Gf2Matrix, None]
    method: str

    @property
    def code(self) -> LinearCode | None:
        if self.witness is None:
            return None
        if isinstance(self.witness, WeightProfile):
            return profile_to_matrix(self.witness)
        return LinearCode(self.witness)


def oracle_profile(n: int) -> OracleResult:
    """LCD[n, 2] by sweeping every valid weight profile of length ``n``.

    The witness is the first optimum in ascending ``(a, b, c)`` order.
    """
    if n < 2:
        raise DomainError(f"no [n,2] code exists for n={n}")
    grid = np.arange(n + 1)
    best_d = 0
    best = None
    for a in range(n + 1):
        m = n - a
        b = grid[: m + 1, None]
        c = grid[None, : m + 1]
        wu, wv = a + c, b + c
        d = np.minimum(np.minimum(wu, wv), a + b)
        # b + c <= m keeps e >= 0; d >= 1 rules out u = 0, v = 0 and u = v
        ok = (wv <= m) & (d >= 1) & ((wu * wv + c) % 2 == 1)
        score = np.where(ok, d, -1)
        flat = int(score.argmax())
        top = int(score.flat[flat])
        if top > best_d:
            best_d = top
            bi, ci = divmod(flat, m + 1)
            best = WeightProfile(a, bi, ci, m - bi - ci)
    # Every n >= 2 admits an LCD profile, e.g. (1, 1, 0, n-2).
    assert best is not None, f"no LCD [{n},2] profile found"
    return OracleResult(n, 2, best_d, best, "profile")


def gaussian_binomial(n: int, k: int) -> int:
    """Number of ``k``-dimensional subspaces of GF(2)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= (1 << (n - i)) - 1
        den *= (1 << (i + 1)) - 1
    return num // den


def pivot_sets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    return itertools.combinations(range(n), k)


def _free_positions(n: int, pivots: tuple[int, ...]) -> list[list[int]]:
    taken = set(pivots)
    return [[c for c in range(p + 1, n) if c not in taken] for p in pivots]


def _decode(pivots, frees, index: int) -> list[int]:
    # Row 0 owns the most significant free bits of ``index``.
    rows = []
    shift = sum(len(f) for f in frees)
    for p, f in zip(pivots, frees):
        shift -= len(f)
        x = (index >> shift) & ((1 << len(f)) - 1)
        word = 1 << p
        for j, pos in enumerate(f):
            if (x >> j) & 1:
                word |= 1 << pos
        rows.append(word)
    return rows


def iter_rref(n: int, k: int) -> Iterator[Gf2Matrix]:
    """Yield every rank-``k`` RREF ``k x n`` matrix, once each.

    Order: pivot sets in ascending combinatorial order; within a pivot set,
    the free entries read as one integer (row 0 most significant, bit ``j``
    of a row's field at its ``j``-th free column) in ascending order.
    """
    for pivots in pivot_sets(n, k):
        frees = _free_positions(n, pivots)
        total = sum(len(f) for f in frees)
        for index in range(1 << total):
            yield Gf2Matrix.from_ints(_decode(pivots, frees, index), n)


def count_rref(n: int, k: int) -> int:
    """Number of matrices the exhaustive scan visits, summed per pivot set."""
    return sum(
        1 << sum(len(f) for f in _free_positions(n, pivots)) for pivots in pivot_sets(n, k)
    )


def _row_table(n: int, pivot: int, free: list[int]) -> np.ndarray:
    x = np.arange(1 << len(free), dtype=np.uint64)
    table = np.full(x.shape, np.uint64(1) << np.uint64(pivot), dtype=np.uint64)
    for j, pos in enumerate(free):
        table |= ((x >> np.uint64(j)) & np.uint64(1)) << np.uint64(pos)
    return table


def _batched_det(g: np.ndarray) -> np.ndarray:
    """Determinants over GF(2) of a stack of ``k x k`` boolean matrices."""
    g = g.copy()
    batch, k, _ = g.shape
    ok = np.ones(batch, dtype=bool)
    idx = np.arange(batch)
    for col in range(k):
        sub = g[:, col:, col]
        ok &= sub.any(axis=1)
        piv = col + sub.argmax(axis=1)
        pivot_rows = g[idx, piv].copy()
        g[idx, piv] = g[:, col]
        g[:, col] = pivot_rows
        factor = g[:, col + 1 :, col]
        g[:, col + 1 :, :] ^= factor[:, :, None] & g[:, col, None, :]
    return ok


def _scan_pivot_set(args) -> tuple[int, int]:
    """Best LCD distance within one pivot set and the first index attaining it.

    Returns ``(0, -1)`` if the pivot set holds no LCD code.
    """
    n, pivots, chunk = args
    k = len(pivots)
    frees = _free_positions(n, pivots)
    widths = [len(f) for f in frees]
    shifts = [sum(widths[i + 1 :]) for i in range(k)]
    tables = [_row_table(n, p, f) for p, f in zip(pivots, frees)]
    total = 1 << sum(widths)
    best_d, best_index = 0, -1
    for start in range(0, total, chunk):
        index = np.arange(start, min(total, start + chunk), dtype=np.uint64)
        rows = [
            tables[i][(index >> np.uint64(shifts[i])) & np.uint64((1 << widths[i]) - 1)]
            for i in range(k)
        ]
        # every nonzero combination of rows, built one XOR at a time
        combos = [np.zeros_like(index)]
        d = None
        for m in range(1, 1 << k):
            low = m & -m
            cw = combos[m ^ low] ^ rows[low.bit_length() - 1]
            combos.append(cw)
            w = np.bitwise_count(cw)
            d = w if d is None else np.minimum(d, w)
        del combos
        if k == 1:
            lcd = (np.bitwise_count(rows[0]) & 1).astype(bool)
        elif k == 2:
            g00 = np.bitwise_count(rows[0]) & 1
            g11 = np.bitwise_count(rows[1]) & 1
            g01 = np.bitwise_count(rows[0] & rows[1]) & 1
            lcd = ((g00 & g11) ^ g01).astype(bool)
        else:
            gm = np.empty((len(index), k, k), dtype=bool)
            for i in range(k):
                for j in range(i, k):
                    e = (np.bitwise_count(rows[i] & rows[j]) & 1).astype(bool)
                    gm[:, i, j] = e
                    gm[:, j, i] = e
            lcd = _batched_det(gm)
        score = np.where(lcd, d.astype(np.int64), -1)
        pos = int(score.argmax())
        top = int(score[pos])
        if top > best_d:
            best_d, best_index = top, start + pos
    return best_d, best_index


def oracle_exhaustive(
    n: int,
    k: int,
    *,
    budget: int | None = None,
    workers: int = 1,
    chunk: int = _CHUNK,
) -> OracleResult:
    """LCD[n, k] by testing every ``k``-dimensional subspace of GF(2)^n.

    Args:
        n: code length, at most 64.
        k: dimension, ``1 <= k <= n``.
        budget: maximum number of subspaces to visit; defaults to
            :data:`DEFAULT_BUDGET`.
        workers: processes to spread pivot sets over.  The result is
            identical for every value.
        chunk: candidates per numpy batch.

    Returns:
        An :class:`OracleResult` whose witness is the first optimal RREF
        generator in :func:`iter_rref` order.

    Raises:
        InfeasibleSizeError: the subspace count exceeds ``budget`` or
            ``n > 64``.
    """
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    budget = DEFAULT_BUDGET if budget is None else budget
    count = gaussian_binomial(n, k)
    if count > budget:
        raise InfeasibleSizeError(f"[{n},{k}] has {count} subspaces, budget is {budget}")
    if n > 64:
        raise InfeasibleSizeError(f"exhaustive scan packs words into 64 bits, n={n}")
    tasks = [(n, pivots, chunk) for pivots in pivot_sets(n, k)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_pivot_set, tasks))
    else:
        results = [_scan_pivot_set(t) for t in tasks]
    # Reduce in scan order so ties go to the earliest pivot set.
    best_d, witness = 0, None
    for (_, pivots, _), (d, index) in zip(tasks, results):
        if d > best_d:
            best_d = d
            witness = Gf2Matrix.from_ints(_decode(pivots, _free_positions(n, pivots), index), n)
    if witness is None:
        log.warning("no LCD [%d,%d] code exists", n, k)
    return OracleResult(n, k, best_d, witness, "exhaustive")


def oracle_pairs(n: int) -> int:
    """LCD[n, 2] by scanning pairs ``u < v`` of nonzero words of length ``n``."""
    if n < 2:
        raise DomainError(f"no [n,2] code exists for n={n}")
    if n > PAIRS_MAX_N:
        raise InfeasibleSizeError(f"pair scan limited to n <= {PAIRS_MAX_N}, got n={n}")
    words = np.arange(1 << n, dtype=np.uint64)
    weights = np.bitwise_count(words).astype(np.int64)
    parity = weights & 1
    best = 0
    for u in range(1, 1 << n):
        wu = int(weights[u])
        if wu <= best:
            continue
        vs = words[u + 1 :]
        wv = weights[u + 1 :]
        wsum = np.bitwise_count(vs ^ np.uint64(u))
        cross = np.bitwise_count(vs & np.uint64(u)) & 1
        lcd = ((wu & 1) & parity[u + 1 :]) ^ cross
        d = np.minimum(np.minimum(wv, wsum), wu)
        top = int(np.where(lcd == 1, d, 0).max(initial=0))
        best = max(best, top)
    return best
