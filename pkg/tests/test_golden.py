"""
Tests for the SL(2) closed-form comparison
"""

import pytest

from regfiber.algebra.exactfield import FieldElem, ZERO
from regfiber.errors import NotIntegralRSS
from regfiber.harness.golden import default_grid, expected_row, sl2_golden

from conftest import elem


def test_default_grid_has_no_mismatches():
    c_vals, t_vals = default_grid()
    assert len(c_vals) == 5
    assert len(t_vals) == 34
    report = sl2_golden(c_vals, t_vals)
    assert len(report.rows) == 170
    assert report.mismatches == []


def test_grid_covers_every_regime():
    report = sl2_golden(*default_grid())
    assert any(r.member and r.regular for r in report.rows)
    assert any(r.member and not r.regular for r in report.rows)
    assert any(not r.member for r in report.rows)


@pytest.mark.parametrize("c, t, member, regular, n_x, n_u", [
    ("eps", "eps^-1", True, True, 1, 1),
    ("eps^2", "eps^-1", True, False, 1, 2),
    ("eps", "eps^-2", False, False, 2, 1),
    ("1", "5", True, True, 0, 0),
    ("1", "eps^-1", False, False, 1, 0),
    ("eps^3", "0", True, False, 0, 3),
    ("1 + eps", "1/2*eps^2", True, True, 0, 0),
])
def test_closed_forms(c, t, member, regular, n_x, n_u):
    assert expected_row(elem(c), elem(t)) == {
        "expected_member": member,
        "expected_regular": regular,
        "expected_n_x": n_x,
        "expected_n_u": n_u,
    }
    row = sl2_golden([elem(c)], [elem(t)]).rows[0]
    assert row.matches
    assert row.theorem_form_holds


@pytest.mark.parametrize("c", [ZERO, FieldElem.eps_power(-1)])
def test_invalid_c_is_rejected(c):
    with pytest.raises(NotIntegralRSS):
        sl2_golden([c], [FieldElem.eps_power(1)])
