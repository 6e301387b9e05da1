"""
Tests for exact arithmetic in Q(ε)
"""

from fractions import Fraction

import pytest

from regfiber.algebra.exactfield import (
    EPS, INFINITY, ONE, ZERO, FieldElem, RationalPoly, in_O, is_unit,
    laurent_coefficients, laurent_truncate, poly_gcd, residue, val,
)
from regfiber.errors import NegativeValuation

from conftest import elem


@pytest.mark.parametrize("text, expected", [
    ("eps", 1),
    ("3", 0),
    ("1/2*eps^-3", -3),
    ("(1 + eps)/(eps^2)", -2),
    ("(eps^3 + eps^4)/(1 + eps)", 3),
    ("(2*eps)/(eps^2 + eps^5)", -1),
])
def test_valuation(text, expected):
    assert val(elem(text)) == expected


def test_zero_has_infinite_valuation():
    assert val(ZERO) == INFINITY
    assert in_O(ZERO)
    assert not is_unit(ZERO)


def test_canonical_form_is_unique():
    a = (EPS + EPS * EPS) / EPS
    assert a == ONE + EPS
    assert a.num == RationalPoly((1, 1))
    assert a.den == RationalPoly((1,))
    b = FieldElem(RationalPoly((0, 2)), RationalPoly((0, 4)))
    assert b == FieldElem.constant(Fraction(1, 2))
    assert hash(b) == hash(FieldElem.constant(Fraction(1, 2)))


def test_denominator_lowest_coefficient_is_one():
    a = FieldElem(RationalPoly((1,)), RationalPoly((0, 3, 6)))
    assert a.den.lowest() == 1
    assert a * FieldElem(RationalPoly((0, 3, 6))) == ONE


def test_field_axioms_on_samples():
    samples = [elem(t) for t in ("1 + eps", "eps^-2", "(1)/(1 + -1*eps)", "3/4 + 2*eps^5", "-7")]
    for a in samples:
        assert a * a.inverse() == ONE
        assert a - a == ZERO
        for b in samples:
            assert a + b == b + a
            assert a * b == b * a
            assert val(a * b) == val(a) + val(b)
            assert val(a + b) >= min(val(a), val(b))


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_residue():
    assert residue(elem("(1)/(1 + -1*eps)")) == 1
    assert residue(elem("3 + eps")) == 3
    assert residue(EPS) == 0
    with pytest.raises(NegativeValuation):
        residue(elem("eps^-1"))


def test_laurent_coefficients_of_geometric_series():
    a = elem("(1)/(1 + -1*eps)")
    assert laurent_coefficients(a, 4) == {0: 1, 1: 1, 2: 1, 3: 1}
    assert laurent_truncate(a, 2) == ONE + EPS


def test_laurent_coefficients_with_pole():
    a = elem("(1 + eps)/(eps^2 + eps^3)")
    # (1 + ε)/(ε²(1 + ε)) = ε^-2 exactly
    assert laurent_coefficients(a, 3) == {-2: Fraction(1)}
    assert laurent_truncate(elem("eps^-1 + 2 + eps"), 1) == elem("eps^-1 + 2")


def test_eps_power_and_laurent_agree():
    assert FieldElem.eps_power(-2, 5) == FieldElem.from_laurent({-2: 5})
    assert FieldElem.eps_power(4, 0) == ZERO
    assert EPS ** -3 == FieldElem.eps_power(-3)


def test_poly_gcd():
    a = RationalPoly((-1, 0, 1))   # λ² - 1
    b = RationalPoly((1, 1))       # λ + 1
    assert poly_gcd(a, b) == RationalPoly((1, 1))
    assert poly_gcd(RationalPoly((1, 1)), RationalPoly((2,))).degree() == 0
