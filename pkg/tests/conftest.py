import random

import pytest

from lcdcodes import BitWord, Gf2Matrix


def naive_matmul(a, b):
    """Textbook triple loop over lists of 0/1 lists, reduced mod 2."""
    k, m, n = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][t] * b[t][j] for t in range(m)) % 2 for j in range(n)] for i in range(k)]


def naive_codewords(rows):
    """All 2^k codewords as 0/1 lists, by explicit message enumeration."""
    k, n = len(rows), len(rows[0])
    out = []
    for msg in range(1 << k):
        cw = [0] * n
        for i in range(k):
            if (msg >> i) & 1:
                cw = [(x + y) % 2 for x, y in zip(cw, rows[i])]
        out.append(cw)
    return out


def naive_min_distance(rows):
    return min(sum(cw) for cw in naive_codewords(rows)[1:])


def random_matrix(rng, k, n):
    return Gf2Matrix.from_ints([rng.getrandbits(n) for _ in range(k)], n)


def random_full_rank(rng, k, n):
    from lcdcodes import rank

    while True:
        g = random_matrix(rng, k, n)
        if rank(g) == k:
            return g


@pytest.fixture
def rng():
    return random.Random(20240611)


def word(s):
    return BitWord.from_string(s)
