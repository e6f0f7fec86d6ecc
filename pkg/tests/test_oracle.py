import itertools

import pytest

from lcdcodes import (
    DomainError,
    Gf2Matrix,
    InfeasibleSizeError,
    LinearCode,
    WeightProfile,
    is_lcd,
    lcd_n2_formula,
    min_distance,
    oracle_exhaustive,
    oracle_pairs,
    oracle_profile,
    profile_distance,
    profile_is_lcd,
    profile_to_matrix,
    rank,
    rref,
)
from lcdcodes.oracle import _batched_det, count_rref, gaussian_binomial, iter_rref


def all_profiles(n):
    for a in range(n + 1):
        for b in range(n + 1 - a):
            for c in range(n + 1 - a - b):
                if a + c and b + c and a + b:
                    yield WeightProfile(a, b, c, n - a - b - c)


class TestProfile:
    @pytest.mark.parametrize(
        "p,d,lcd",
        [((1, 1, 1, 0), 2, True), ((1, 1, 0, 0), 1, True), ((3, 3, 1, 0), 4, True), ((2, 2, 2, 0), 4, False)],
    )
    def test_examples(self, p, d, lcd):
        p = WeightProfile(*p)
        assert profile_distance(p) == d
        assert profile_is_lcd(p) is lcd

    @pytest.mark.parametrize("p", [(0, 0, 2, 0), (1, 0, 0, 2), (0, 1, 0, 0), (-1, 2, 2, 0)])
    def test_invalid(self, p):
        with pytest.raises(DomainError):
            WeightProfile(*p)

    def test_to_matrix(self):
        assert profile_to_matrix(WeightProfile(1, 1, 1, 0)).generator == Gf2Matrix.from_rows(["101", "011"])
        assert profile_to_matrix(WeightProfile(1, 1, 0, 1)).generator == Gf2Matrix.from_rows(["100", "010"])

    def test_census_round_trip(self):
        for p in all_profiles(7):
            assert WeightProfile.of(profile_to_matrix(p)) == p

    @pytest.mark.parametrize("n", range(2, 11))
    def test_census_faithful(self, n):
        for p in all_profiles(n):
            c = profile_to_matrix(p)
            assert profile_is_lcd(p) == is_lcd(c)
            assert profile_distance(p) == min_distance(c)

    def test_oracle_examples(self):
        assert oracle_profile(7).d == 4
        r = oracle_profile(2)
        # (0,1,1,0) precedes (1,1,0,0) in scan order; both are LCD with d=1
        assert (r.d, r.witness) == (1, WeightProfile(0, 1, 1, 0))
        assert profile_is_lcd(WeightProfile(1, 1, 0, 0))
        r = oracle_profile(9)
        assert (r.d, r.witness) == (6, WeightProfile(3, 3, 3, 0))
        with pytest.raises(DomainError):
            oracle_profile(1)

    def test_witness_is_first_optimum(self):
        for n in range(2, 16):
            best = max(profile_distance(p) for p in all_profiles(n) if profile_is_lcd(p))
            first = next(p for p in all_profiles(n) if profile_is_lcd(p) and profile_distance(p) == best)
            r = oracle_profile(n)
            assert (r.d, r.witness) == (best, first)

    def test_witness_valid(self):
        for n in range(2, 60):
            r = oracle_profile(n)
            c = r.code
            assert rank(c.generator) == 2 and is_lcd(c) and min_distance(c) == r.d


def naive_subspace_count(n, k):
    spans = set()
    for rows in itertools.combinations(range(1, 1 << n), k):
        g = Gf2Matrix.from_ints(rows, n)
        if rank(g) == k:
            spans.add(rref(g).matrix)
    return len(spans)


class TestRrefEnumeration:
    @pytest.mark.parametrize("n,k", [(3, 1), (4, 2), (5, 2), (5, 3), (6, 3)])
    def test_gaussian_binomial_by_brute_force(self, n, k):
        assert gaussian_binomial(n, k) == naive_subspace_count(n, k)

    def test_counts(self):
        for n in range(0, 9):
            for k in range(0, n + 1):
                assert count_rref(n, k) == gaussian_binomial(n, k)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_iter_visits_each_subspace_once(self, n):
        for k in range(1, n + 1):
            mats = list(iter_rref(n, k))
            assert len(mats) == gaussian_binomial(n, k)
            assert len(set(mats)) == len(mats)
            for m in mats:
                assert rref(m).matrix == m and rank(m) == k


def naive_lcd_search(n, k):
    best, witness = 0, None
    for g in iter_rref(n, k):
        c = LinearCode(g)
        if is_lcd(c):
            d = min_distance(c)
            if d > best:
                best, witness = d, g
    return best, witness


class TestExhaustive:
    @pytest.mark.parametrize("n,d", [(3, 2), (5, 2), (6, 3)])
    def test_examples(self, n, d):
        assert oracle_exhaustive(n, 2).d == d

    @pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 8) for k in range(1, min(n, 4) + 1)])
    def test_matches_naive_search(self, n, k):
        r = oracle_exhaustive(n, k, chunk=7)
        assert (r.d, r.witness) == naive_lcd_search(n, k)

    def test_batched_det(self, rng):
        import numpy as np

        from lcdcodes import det

        mats = [Gf2Matrix.from_ints([rng.getrandbits(k) for _ in range(k)], k) for k in [4] * 200]
        arr = np.array([m.tolist() for m in mats], dtype=bool)
        assert _batched_det(arr).tolist() == [bool(det(m)) for m in mats]

    def test_budget(self):
        with pytest.raises(InfeasibleSizeError):
            oracle_exhaustive(10, 2, budget=100)
        assert oracle_exhaustive(10, 2, budget=gaussian_binomial(10, 2)).d == 6

    def test_domain(self):
        with pytest.raises(DomainError):
            oracle_exhaustive(3, 4)

    def test_deterministic_across_workers(self):
        one = oracle_exhaustive(10, 3)
        many = oracle_exhaustive(10, 3, workers=4)
        assert one == many

    def test_witness_valid(self):
        for n, k in [(8, 2), (9, 3), (7, 4)]:
            r = oracle_exhaustive(n, k)
            c = r.code
            assert c.k == k and is_lcd(c) and min_distance(c) == r.d


class TestPairs:
    @pytest.mark.parametrize("n,d", [(2, 1), (4, 2), (8, 5)])
    def test_examples(self, n, d):
        assert oracle_pairs(n) == d

    def test_guard(self):
        with pytest.raises(InfeasibleSizeError):
            oracle_pairs(17)
        with pytest.raises(DomainError):
            oracle_pairs(1)

    def test_matches_formula(self):
        for n in range(2, 13):
            assert oracle_pairs(n) == lcd_n2_formula(n)
