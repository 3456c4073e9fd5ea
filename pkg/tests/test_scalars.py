from fractions import Fraction

import pytest

from necklace_bq.scalars import (
    H, HBAR, ONE, ZERO, LinComb, Poly2, ScalarSyntaxError, format_lincomb, parse_poly2,
    split_signed_terms,
)


def test_poly_arithmetic_is_exact():
    p = H * Fraction(1, 3) + HBAR
    q = p * p
    assert q.coeff(2, 0) == Fraction(1, 9)
    assert q.coeff(1, 1) == Fraction(2, 3)
    assert q.coeff(0, 2) == 1
    assert (q - q).is_zero()
    assert p ** 0 == ONE
    assert (H + 1) * (H - 1) == H * H - 1


def test_degrees_and_division():
    p = H * HBAR * 3 + H ** 2
    assert p.degree_h() == 2 and p.degree_hbar() == 1
    assert p.min_degree_h() == 1 and p.min_degree_hbar() == 0
    assert p.div_h() == HBAR * 3 + H
    with pytest.raises(ArithmeticError):
        p.div_hbar()


def test_specialize():
    p = H * 2 + HBAR * H - 5
    assert p.specialize(set_h=0) == Poly2.const(-5)
    assert p.specialize(set_h=1) == HBAR + (-3)
    assert p.specialize(set_hbar=0) == H * 2 - 5


def test_zero_coefficients_are_dropped():
    assert Poly2({(1, 0): 0}) == ZERO
    assert not ZERO
    assert hash(Poly2({(0, 0): Fraction(2, 2)})) == hash(ONE)


@pytest.mark.parametrize("text, expected", [
    ("2*h - (1/3)*h^2*hbar + ħ", H * 2 - H * H * HBAR * Fraction(1, 3) + HBAR),
    ("-(1/2)*hbar", HBAR * Fraction(-1, 2)),
    ("(1 + h)", H + 1),
    ("0", ZERO),
    ("7/4", Poly2.const(Fraction(7, 4))),
])
def test_parse_poly2(text, expected):
    assert parse_poly2(text) == expected


@pytest.mark.parametrize("p", [H * 2 - H * H * HBAR * Fraction(1, 3) + HBAR, HBAR * Fraction(-1, 2), ONE, ZERO, H + 1])
def test_poly_round_trip(p):
    assert parse_poly2(str(p)) == p


def test_parse_poly2_errors():
    with pytest.raises(ScalarSyntaxError):
        parse_poly2("2*q")
    with pytest.raises(ScalarSyntaxError):
        parse_poly2("1 + ")


def test_split_signed_terms_keeps_starred_names():
    assert list(split_signed_terms("a*a* - 2 * b*b + [v1]")) == [(1, "a*a*"), (-1, "2 * b*b"), (1, "[v1]")]


def test_lincomb_basics():
    x = LinComb({"a": 1, "b": H})
    y = LinComb({"a": -1, "c": 2})
    assert (x + y) == LinComb({"b": H, "c": 2})
    assert (x - x).is_zero()
    assert x.scale(HBAR).coeff("b") == H * HBAR
    assert x.map_keys(lambda k: LinComb.basis(k.upper())) == LinComb({"A": 1, "B": H})
    assert x.specialize(set_h=0) == LinComb({"a": 1})


def test_format_lincomb():
    x = LinComb({"a": 1, "b": -2, "c": HBAR * Fraction(-1, 2), "d": H + 1})
    assert format_lincomb(x, str) == "a - 2 * b - (1/2)*hbar * c + (1 + h) * d"
    assert format_lincomb(LinComb(), str) == "0"
