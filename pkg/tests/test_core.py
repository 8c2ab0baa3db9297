from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from relpbf.core import (
    ALL_GRADES,
    G00,
    G01,
    G10,
    G11,
    I,
    Coefficient,
    Grade,
    parity,
    theta,
    theta_restricted_is_super,
)

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
coefficients = st.builds(Coefficient, fractions, fractions)


def test_grade_addition():
    assert G10 + G11 == G01
    assert G00 + G11 == G11
    assert G11 + G11 == G00


def test_grade_group_laws():
    for a, b, c in product(ALL_GRADES, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
    for a in ALL_GRADES:
        assert a + G00 == a
        assert a + a == G00


def test_theta_values():
    assert theta(G10, G11) == -1
    assert theta(G11, G11) == 1
    for b in ALL_GRADES:
        assert theta(G00, b) == 1
    assert isinstance(theta(G01, G01), Coefficient)


def test_theta_self_values():
    # +1 exactly on (0,0) and (1,1)
    assert {a for a in ALL_GRADES if theta(a, a) == 1} == {G00, G11}


def test_theta_bicharacter_exhaustive():
    for a, b, c in product(ALL_GRADES, repeat=3):
        assert theta(a, b) * theta(b, a) == 1
        assert theta(a + b, c) == theta(a, c) * theta(b, c)
        assert theta(a, b + c) == theta(a, b) * theta(a, c)
        assert theta(a, b) in (1, -1)
        assert theta(a, b) == theta(b, a)


def test_restriction_to_super_subgroup():
    assert theta_restricted_is_super(G01, G01)
    assert theta_restricted_is_super(G00, G01)
    assert parity(G01) == 1
    with pytest.raises(ValueError):
        theta_restricted_is_super(G10, G01)


def test_imaginary_unit():
    assert I * I == -1
    assert I.conjugate() == Coefficient(0, -1)


def test_coefficient_mixes_with_ints_and_fractions():
    half = Coefficient(Fraction(1, 2))
    assert half + half == 1
    assert 2 * half == 1
    assert half - 1 == Coefficient(Fraction(-1, 2))
    assert 1 / Coefficient(2) == half
    assert hash(Coefficient(3)) == hash(3)


def test_coefficient_json_roundtrip():
    c = Coefficient(Fraction(-3, 4), Fraction(5, 7))
    assert Coefficient.from_json(c.to_json()) == c
    assert Coefficient.from_json("2/3") == Coefficient(Fraction(2, 3))
    assert Coefficient.from_json(5) == 5


def test_coefficient_json_rejects_inexact():
    with pytest.raises(ValueError):
        Coefficient.from_json(0.5)
    with pytest.raises(ValueError):
        Coefficient.from_json({"re_num": 1, "re_den": 0, "im_num": 0, "im_den": 1})


def test_coefficient_is_immutable():
    with pytest.raises(AttributeError):
        Coefficient(1).re = Fraction(2)


@given(coefficients, coefficients, coefficients)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0
    if b:
        assert (a / b) * b == a


@given(coefficients)
def test_grade_type_roundtrip(c):
    assert Coefficient.from_json(c.to_json()) == c
    assert Grade(1, 0) + Grade(1, 0) == G00
