import pytest

from lcdcodes import (
    DomainError,
    Gf2Matrix,
    construct_family_a,
    construct_family_b,
    construct_optimal,
    gram,
    is_lcd,
    lcd_n2_formula,
    min_distance,
    rank,
    weight,
)

GRID = [(r, s) for r in range(11) for s in range(3, 9)]


def build(r, s):
    return construct_family_a(r, s) if s <= 5 else construct_family_b(r, s)


def test_family_a_examples():
    c = construct_family_a(0, 3)
    assert c.generator == Gf2Matrix.from_rows(["101", "011"])
    assert min_distance(c) == 2 and is_lcd(c)
    c = construct_family_a(0, 5)
    assert c.generator == Gf2Matrix.from_rows(["10111", "01111"])
    assert gram(c.generator).tolist() == [[0, 1], [1, 0]]
    assert min_distance(c) == 2 and is_lcd(c)
    c = construct_family_a(1, 3)
    assert str(c) == "101010111\n010101111"
    assert min_distance(c) == 6 and is_lcd(c)


def test_family_b_examples():
    c = construct_family_b(0, 6)
    assert c.generator == Gf2Matrix.from_rows(["101010", "010101"])
    assert gram(c.generator) == Gf2Matrix.identity(2)
    assert min_distance(c) == 3
    assert str(construct_family_b(0, 7)) == "1010101\n0101011"
    assert min_distance(construct_family_b(0, 7)) == 4
    assert min_distance(construct_family_b(0, 8)) == 5


@pytest.mark.parametrize("r,s", [(-1, 3), (0, 6), (0, 2)])
def test_family_a_domain(r, s):
    with pytest.raises(DomainError):
        construct_family_a(r, s)


@pytest.mark.parametrize("r,s", [(-1, 6), (0, 5), (0, 9)])
def test_family_b_domain(r, s):
    with pytest.raises(DomainError):
        construct_family_b(r, s)


def test_construct_optimal_dispatch():
    assert construct_optimal(2).generator == Gf2Matrix.identity(2)
    assert construct_optimal(6) == construct_family_b(0, 6)
    assert construct_optimal(100) == construct_family_a(16, 4)
    assert min_distance(construct_optimal(100)) == 66
    with pytest.raises(DomainError):
        construct_optimal(1)


@pytest.mark.parametrize("r,s", GRID)
def test_grid(r, s):
    c = build(r, s)
    n = 6 * r + s
    assert c.n == n and rank(c.generator) == 2
    assert is_lcd(c)
    assert min_distance(c) == lcd_n2_formula(n)
    u, v = c.generator.rows
    if s <= 5:
        assert weight(u) == weight(v) == 4 * r + s - 1
        assert weight(u + v) == 4 * r + 2
    else:
        assert weight(u) == weight(v) == 4 * r + s - 3
        assert weight(u + v) == 4 * r + 6


def test_optimal_all_n():
    for n in range(2, 120):
        c = construct_optimal(n)
        assert c.n == n and is_lcd(c) and min_distance(c) == lcd_n2_formula(n)
