"""
Tests for the Newton-Puiseux cross-check of n(u, P, P')
"""

import pytest

sympy = pytest.importorskip("sympy")

from regfiber.algebra.codec import parse_rational
from regfiber.algebra.polylinalg import charpoly
from regfiber.core.schema import fiber_from_json
from regfiber.errors import CoprimalityViolation, PrecisionExhausted
from regfiber.harness.oracle import cross_valuation_sum, puiseux_oracle_n_u, puiseux_roots
from regfiber.harness.theorem import n_u_pair
from regfiber.lattice.rootcomb import adjacent_pairs

from conftest import diagonal, load_fixture, matrix

CASES = load_fixture("oracle_blocks.json")["cases"]


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_oracle_agrees_with_resultant(case):
    u = fiber_from_json(case["fiber"])
    expected = parse_rational(case["n_u"])
    for P, P2 in adjacent_pairs(u.levi):
        assert puiseux_oracle_n_u(u, P, P2) == expected
        assert n_u_pair(u, P, P2) == expected


def test_case_types_are_covered():
    assert {c["type"] for c in CASES} >= {"split", "ramified"}
    assert len(CASES) >= 20


def test_ramified_roots_have_half_exponents():
    roots = puiseux_roots(charpoly(matrix([["0", "eps"], ["1", "0"]])))
    assert sum(r.multiplicity for r in roots) == 2
    assert all(r.terms[0][0] == sympy.Rational(1, 2) for r in roots)


def test_split_cross_sum():
    p = charpoly(diagonal("eps"))
    q = charpoly(diagonal("eps + eps^2"))
    assert cross_valuation_sum(p, q) == 2


def test_shared_root_is_reported():
    p = charpoly(diagonal("eps"))
    with pytest.raises(CoprimalityViolation):
        cross_valuation_sum(p, p)


def test_degree_bound():
    p = charpoly(diagonal("1", "2", "3", "4", "5"))
    with pytest.raises(PrecisionExhausted):
        puiseux_roots(p)


def test_elliptic_gl4_fixture(elliptic_gl4_u):
    for P, P2 in adjacent_pairs(elliptic_gl4_u.levi):
        assert puiseux_oracle_n_u(elliptic_gl4_u, P, P2) == 2
