import random

from fractions import Fraction

import pytest

from symtwist.arith import (
    BrClass,
    Place,
    REAL_PLACE,
    SizeError,
    SquareClass,
    cup,
    hilbert,
    hilbert_ramified,
    parse_rat,
    rat_str,
    square_class,
    squarefree_part,
    sqrt_rat,
)


def test_squarefree_part():
    assert squarefree_part(12) == 3
    assert squarefree_part(-75) == -3
    assert squarefree_part(1) == 1
    assert squarefree_part(49) == 1


def test_square_class_of_rational():
    assert square_class(Fraction(-75, 2)).rep == -6
    assert square_class(Fraction(4, 9)).rep == 1
    assert square_class(18).rep == 2


def test_square_class_group_law():
    a, b = SquareClass(6), SquareClass(10)
    assert (a * b).rep == 15
    assert (a * a).rep == 1
    assert a.inverse() == a


def test_sqrt_rat_exact():
    assert sqrt_rat(Fraction(9, 4)) == Fraction(3, 2)
    with pytest.raises(ValueError):
        sqrt_rat(Fraction(2))


def test_parse_and_print_rationals():
    assert parse_rat("-3/4") == Fraction(-3, 4)
    assert rat_str(Fraction(5, 1)) == "5"
    assert rat_str(Fraction(1, 3)) == "1/3"


def test_place_ordering_and_parse():
    assert Place.parse("inf") == REAL_PLACE
    assert Place.parse("7") == Place(7)
    assert REAL_PLACE < Place(2) < Place(3)


def test_hilbert_classical_values():
    # (-1,-1) ramifies exactly at inf and 2
    assert hilbert(-1, -1, REAL_PLACE) == -1
    assert hilbert(-1, -1, Place(2)) == -1
    assert hilbert(-1, -1, Place(3)) == 1
    # x^2 = 2 mod 7 has a solution (3^2 = 2), so (2, 7)_7 = 1
    assert hilbert(2, 7, Place(7)) == 1
    assert hilbert(3, 7, Place(7)) == -1


def test_hilbert_squares_are_trivial():
    rng = random.Random(4)
    for _ in range(50):
        a = rng.randint(1, 300)
        b = rng.randint(-300, 300) or 1
        for v in (REAL_PLACE, Place(2), Place(3), Place(5)):
            assert hilbert(a * a, b, v) == 1


def test_ramification_set_is_even_and_matches_symbols():
    rng = random.Random(11)
    for _ in range(100):
        a = rng.randint(-500, 500) or 1
        b = rng.randint(-500, 500) or 1
        cls = hilbert_ramified(a, b)
        assert len(cls.places()) % 2 == 0
        for v in cls.places():
            assert hilbert(a, b, v) == -1


def test_cup_product_bilinear():
    rng = random.Random(5)
    pool = [-1, 2, -2, 3, 5, 6, -7, 10]
    for _ in range(60):
        x, y, z = (SquareClass(squarefree_part(rng.choice(pool))) for _ in range(3))
        assert cup(x * y, z) == cup(x, z) + cup(y, z)
        assert cup(x, y) == cup(y, x)


def test_brauer_group_law():
    c = cup(SquareClass(-1), SquareClass(-1))
    assert c + c == BrClass(frozenset())
    assert c.places() == [REAL_PLACE, Place(2)]


def test_factor_bound():
    with pytest.raises(SizeError):
        squarefree_part(2**70 + 1)
