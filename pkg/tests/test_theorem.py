"""
Tests for the pointwise regularity criterion harness
"""

import pytest

from regfiber.core.schema import fiber_from_json, window_from_json
from regfiber.errors import CoprimalityViolation, LeviMismatch, NotDiagonal, NotInFiber
from regfiber.lattice.grassmann import canonicalize, identity_point
from regfiber.lattice.rootcomb import LeviDatum, ParabolicDatum, adjacent_pairs, borel
from regfiber.lattice.springer import EnumWindow, FiberDatum, in_fiber, is_regular_point
from regfiber.harness.theorem import (
    certify_point, gallery_sum_check, is_diagonal, n_u_pair, n_u_table, opposite_sum_check,
    pair_key, root_valuation, torus_fiber, verify_theorem,
)

from conftest import diagonal, load_fixture, matrix

SMALL_WINDOW = EnumWindow.cube(3, (-1, 1), exp_range=(-1, 0), coeff_set=(0, 1, -1),
                               sample_count=30, seed=3)


@pytest.fixture
def regular_gl3_point(split_gl3_u):
    """n(t) with t12 = t23 = ε^-1, t13 = 2/3·ε^-2: residue is a regular nilpotent"""
    x = canonicalize(matrix([["1", "eps^-1", "2/3*eps^-2"], ["0", "1", "eps^-1"], ["0", "0", "1"]]))
    assert in_fiber(x, split_gl3_u)
    return x


def coarse_fiber(u):
    return FiberDatum.create(u.u, LeviDatum(3, ((1, 2), (3,))))


class TestNu:
    def test_split_torus_values(self, split_gl3_u):
        table = n_u_table(split_gl3_u)
        assert len(table) == 12
        assert set(table.values()) == {1}

    def test_coarse_levi_sums_root_valuations(self, split_gl3_u):
        u = coarse_fiber(split_gl3_u)
        for P, P2 in adjacent_pairs(u.levi):
            assert n_u_pair(u, P, P2) == 2

    def test_unit_residues_give_zero(self):
        u = FiberDatum.create(diagonal("1 + eps", "2 + eps", "3 + eps^2"), LeviDatum.torus(3))
        assert set(n_u_table(u).values()) == {0}

    def test_elliptic_blocks(self, elliptic_gl4_u):
        for P, P2 in adjacent_pairs(elliptic_gl4_u.levi):
            assert n_u_pair(elliptic_gl4_u, P, P2) == 2

    def test_shared_eigenvalue_is_rejected(self):
        u = FiberDatum(2, LeviDatum.torus(2), diagonal("eps", "eps"))
        with pytest.raises(CoprimalityViolation):
            n_u_pair(u, borel((1, 2)), borel((2, 1)))

    def test_root_valuation_and_helpers(self, split_gl3_u):
        assert root_valuation(split_gl3_u, (1, 3)) == 1
        assert is_diagonal(split_gl3_u)
        assert torus_fiber(coarse_fiber(split_gl3_u)).levi == LeviDatum.torus(3)
        assert pair_key(borel((1, 2)), borel((2, 1))) == f"{borel((1, 2))}|{borel((2, 1))}"


class TestCertificates:
    def test_regular_point_reaches_equality(self, split_gl3_u, regular_gl3_point):
        cert = certify_point(regular_gl3_point, split_gl3_u)
        assert cert.ok
        assert cert.regular and cert.retractions_regular
        assert cert.n_x_table == cert.n_u_table

    def test_non_regular_point_is_strict_somewhere(self, split_gl3_u):
        cert = certify_point(identity_point(3), split_gl3_u)
        assert cert.ok
        assert not cert.regular
        assert any(cert.n_x_table[p] < cert.n_u_table[p] for p in cert.n_u_table)

    def test_coarse_levi_certificate(self, split_gl3_u, regular_gl3_point):
        cert = certify_point(regular_gl3_point, coarse_fiber(split_gl3_u))
        assert cert.ok and cert.regular
        assert set(cert.n_x_table.values()) == {2}

    def test_wrong_table_fails_part_a(self, split_gl3_u, regular_gl3_point):
        table = {p: 0 for p in n_u_table(split_gl3_u)}
        cert = certify_point(regular_gl3_point, split_gl3_u, table)
        assert not cert.part_a_ok
        assert not cert.ok

    def test_point_outside_the_fiber(self, sl2_u):
        x = canonicalize(matrix([["1", "0"], ["eps^-4", "1"]]))
        with pytest.raises(NotInFiber):
            certify_point(x, sl2_u)


class TestVerification:
    def test_split_gl3_small_window(self, split_gl3_u):
        certs, summary = verify_theorem(split_gl3_u, SMALL_WINDOW)
        assert summary.violations == 0
        assert summary.fiber_points == len(certs) > 0
        assert summary.non_regular >= 1
        assert summary.regular + summary.non_regular == summary.fiber_points
        assert summary.pairs_checked == 12 * len(certs)
        assert summary.wall_time is None

    def test_unit_residues_make_every_point_regular(self):
        u = FiberDatum.create(diagonal("1 + eps", "2 + eps", "3 + eps^2"), LeviDatum.torus(3))
        certs, summary = verify_theorem(u, SMALL_WINDOW, timing=True)
        assert summary.non_regular == 0
        assert all(set(c.n_x_table.values()) == {0} for c in certs)
        assert summary.wall_time is not None

    def test_parallel_matches_serial(self, split_gl3_u):
        serial, s1 = verify_theorem(split_gl3_u, SMALL_WINDOW)
        parallel, s2 = verify_theorem(split_gl3_u, SMALL_WINDOW, parallel=2)
        assert [c.point for c in serial] == [c.point for c in parallel]
        assert (s1.regular, s1.non_regular) == (s2.regular, s2.non_regular)


class TestDerivedIdentities:
    def test_opposite_sum_on_regular_points(self, sl2_u, split_gl3_u, regular_gl3_point):
        x = canonicalize(matrix([["1", "0"], ["eps^-1", "1"]]))
        assert is_regular_point(x, sl2_u)
        assert opposite_sum_check(x, sl2_u, borel((1, 2)))
        for B in (borel((1, 2, 3)), borel((3, 1, 2))):
            assert opposite_sum_check(regular_gl3_point, split_gl3_u, B)

    def test_opposite_sum_reads_a_block_levi_u_on_the_torus(self, split_gl3_u, regular_gl3_point):
        u = coarse_fiber(split_gl3_u)
        for B in (borel((1, 2, 3)), borel((3, 1, 2)), borel((2, 3, 1))):
            assert opposite_sum_check(regular_gl3_point, u, B)

    def test_identities_need_a_diagonal_u(self, elliptic_gl4_u):
        with pytest.raises(NotDiagonal):
            opposite_sum_check(identity_point(4), elliptic_gl4_u, borel((1, 2, 3, 4)))
        P, P2 = adjacent_pairs(elliptic_gl4_u.levi)[0]
        with pytest.raises(NotDiagonal):
            gallery_sum_check(elliptic_gl4_u, P, P2)

    def test_opposite_sum_needs_a_borel(self, split_gl3_u, regular_gl3_point):
        with pytest.raises(LeviMismatch):
            opposite_sum_check(regular_gl3_point, split_gl3_u, ParabolicDatum(((1, 2), (3,))))

    def test_gallery_sum(self, split_gl3_u, rng):
        u = coarse_fiber(split_gl3_u)
        for P, P2 in adjacent_pairs(u.levi):
            assert gallery_sum_check(u, P, P2)
            assert gallery_sum_check(u, P, P2, inner_order=(2, 1, 3), rng=rng)


@pytest.mark.slow
@pytest.mark.parametrize("fixture", ["gl3_split.json", "gl3_split_unit.json"])
def test_gl3_fixtures(fixture):
    doc = load_fixture(fixture)
    for fiber_doc in doc["fiber"]:
        u = fiber_from_json(fiber_doc)
        certs, summary = verify_theorem(u, window_from_json(doc["window"], 3))
        assert summary.violations == 0
        if fixture == "gl3_split.json":
            assert summary.non_regular >= 1
        else:
            assert summary.non_regular == 0


@pytest.mark.slow
def test_gl4_elliptic_fixture():
    doc = load_fixture("gl4_elliptic.json")
    u = fiber_from_json(doc["fiber"])
    certs, summary = verify_theorem(u, window_from_json(doc["window"], 4))
    assert summary.candidates >= 500
    assert summary.violations == 0
    assert all(set(c.n_u_table.values()) == {2} for c in certs)
