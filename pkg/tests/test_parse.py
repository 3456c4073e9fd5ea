import pytest

from necklace_bq.parse import ExpressionError, parse_element
from necklace_bq.textform import format_any
from necklace_bq.cli import FORMATTERS


@pytest.mark.parametrize("kind, text", [
    ("L", "aa* + 2*h * a*a*b*b - [v1]"),
    ("S", "a*a*b*b - (1/2)*hbar * [v2]·a*a* + 3"),
    ("N", "3 - hbar * [v1] & [v1] + (a,1)(a*,2)"),
    ("F", "aa* + hbar * [v1] ⊗ [v1] - 1"),
    ("V", "-2*h * a*a*b*b + aa* · a*a*b*b"),
])
def test_print_parse_round_trip(jordan, kind, text):
    x = parse_element(jordan, kind, text)
    assert parse_element(jordan, kind, FORMATTERS[kind](jordan, x)) == x


def test_like_terms_are_collected(jordan):
    x = parse_element(jordan, "L", "a a* + aa* - 2 * a* a")
    assert x.is_zero()


def test_parenthesised_coefficients(jordan):
    x = parse_element(jordan, "L", "(1 + h) * a a*")
    assert format_any(jordan, x) == "(1 + h) * aa*"


def test_errors(jordan):
    with pytest.raises(ExpressionError):
        parse_element(jordan, "L", "")
    with pytest.raises(ExpressionError):
        parse_element(jordan, "L", "3")  # L has no unit
    with pytest.raises(ExpressionError):
        parse_element(jordan, "N", "2 * (a,1)(b,2)")
