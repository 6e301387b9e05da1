"""
Tests for the text form of field elements
"""

from fractions import Fraction

import pytest

from regfiber.algebra.codec import format_elem, parse_elem, parse_rational
from regfiber.algebra.exactfield import EPS, ONE, FieldElem
from regfiber.errors import FieldSyntaxError


@pytest.mark.parametrize("text, expected", [
    ("0", FieldElem.constant(0)),
    ("-3/4", FieldElem.constant(Fraction(-3, 4))),
    ("eps", EPS),
    ("eps^-2", FieldElem.eps_power(-2)),
    ("2*eps^3 + 1", FieldElem.from_laurent({0: 1, 3: 2})),
    ("1/2*eps^-1", FieldElem.eps_power(-1, Fraction(1, 2))),
    ("(1 + eps)/(1 + -1*eps)", (ONE + EPS) / (ONE - EPS)),
    ("  eps ^ 2  +  -1 ", FieldElem.from_laurent({0: -1, 2: 1})),
    ("-eps", FieldElem.eps_power(1, -1)),
    ("-eps^-2 + 1", FieldElem.from_laurent({-2: -1, 0: 1})),
    ("(1 + eps)/(1 + -eps)", (ONE + EPS) / (ONE - EPS)),
    ("+eps^2", FieldElem.eps_power(2)),
])
def test_parse(text, expected):
    assert parse_elem(text) == expected


def test_integers_are_accepted():
    assert parse_elem(7) == FieldElem.constant(7)


@pytest.mark.parametrize("text", ["1 + eps^-1", "(1 + 2*eps)/(3 + eps^2)", "-5/7*eps^4", "0"])
def test_format_reparses(text):
    a = parse_elem(text)
    assert parse_elem(format_elem(a)) == a


@pytest.mark.parametrize("text, column", [
    ("", 1),
    ("1 + ", 5),
    ("2*x", 3),
    ("(1 + eps", 9),
    ("1/0", 3),
    ("eps^", 5),
    ("1 ) ", 3),
])
def test_syntax_errors_report_position(text, column):
    with pytest.raises(FieldSyntaxError) as info:
        parse_elem(text)
    assert info.value.line == 1
    assert info.value.column == column


def test_syntax_error_on_second_line():
    with pytest.raises(FieldSyntaxError) as info:
        parse_elem("1 +\n  ?")
    assert (info.value.line, info.value.column) == (2, 3)


def test_zero_denominator_quotient():
    with pytest.raises(FieldSyntaxError):
        parse_elem("(1)/(0)")


def test_parse_rational():
    assert parse_rational("-2/6") == Fraction(-1, 3)
    with pytest.raises(FieldSyntaxError):
        parse_rational("one")
