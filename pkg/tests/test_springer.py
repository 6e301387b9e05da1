"""
Tests for affine Springer fibers: validation, membership, residues and point generation
"""

import random

import pytest

from regfiber.algebra.polylinalg import MatrixF, MatrixQ, frobenius_form, residue_matrix
from regfiber.core.schema import fiber_from_json
from regfiber.errors import NotInFiber, NotIntegralRSS, SchemaError
from regfiber.lattice.grassmann import GrassPoint, canonicalize, identity_point, random_gl_o, sort_key
from regfiber.lattice.iwasawa import n_pair, retract
from regfiber.lattice.rootcomb import LeviDatum, adjacent_pairs, all_parabolics, borel
from regfiber.lattice.springer import (
    EnumWindow, FiberDatum, SweepStats, adjoint, block_fiber, generate_fiber_points,
    in_fiber, is_integral_rss, is_regular_point, iter_fiber_points, point_residue_compatibility,
    residue_class, residue_invariants, retract_fiber, torus_translate,
)

from conftest import diagonal, load_fixture, matrix


def sl2_point(t):
    return canonicalize(matrix([["1", "0"], [t, "1"]]))


SMALL_WINDOW = dict(exp_range=(-2, 0), coeff_set=(0, 1), max_terms=1)


class TestFiberDatum:
    def test_accepts_split_and_ramified_data(self, split_gl3_u, elliptic_gl4_u):
        assert split_gl3_u.n == 3
        assert elliptic_gl4_u.levi.blocks == ((1, 2), (3, 4))
        assert set(elliptic_gl4_u.block_charpolys) == {(1, 2), (3, 4)}

    def test_defaults_to_the_whole_group(self):
        u = FiberDatum.create(matrix([["0", "eps"], ["1", "0"]]))
        assert u.levi == LeviDatum.whole(2)

    @pytest.mark.parametrize("rows, levi", [
        ([["eps", "0"], ["0", "eps"]], LeviDatum.torus(2)),
        ([["eps^-1", "0"], ["0", "1"]], LeviDatum.torus(2)),
        ([["1", "1"], ["0", "2"]], LeviDatum.torus(2)),
        ([["0", "1"], ["0", "0"]], LeviDatum.whole(2)),
    ])
    def test_rejects_bad_data(self, rows, levi):
        assert not is_integral_rss(matrix(rows), levi)
        with pytest.raises(NotIntegralRSS):
            FiberDatum.create(matrix(rows), levi)

    def test_rejects_levi_of_wrong_size(self):
        with pytest.raises(NotIntegralRSS):
            FiberDatum.create(diagonal("eps", "1"), LeviDatum.torus(3))


class TestMembership:
    def test_identity_is_in_every_fiber(self, sl2_u, split_gl3_u, elliptic_gl4_u):
        for u in (sl2_u, split_gl3_u, elliptic_gl4_u):
            assert in_fiber(identity_point(u.n), u)

    def test_adjoint_by_identity(self, split_gl3_u):
        assert adjoint(MatrixF.identity(3), split_gl3_u.u) == split_gl3_u.u

    @pytest.mark.parametrize("t, member", [
        ("eps^-1", True),
        ("eps^-2", False),
        ("5", True),
        ("eps^3", True),
    ])
    def test_sl2_membership(self, sl2_u, t, member):
        assert in_fiber(sl2_point(t), sl2_u) is member

    def test_residue_requires_membership(self, sl2_u):
        with pytest.raises(NotInFiber):
            residue_class(sl2_point("eps^-3"), sl2_u)

    def test_identity_is_not_regular_for_a_topologically_nilpotent_u(self, sl2_u):
        x = identity_point(2)
        assert residue_class(x, sl2_u) == MatrixQ.zeros(2)
        assert not is_regular_point(x, sl2_u)
        assert [d.degree() for d in residue_invariants(x, sl2_u)] == [1, 1]

    def test_regular_point_has_a_single_invariant_factor(self, sl2_u):
        x = sl2_point("eps^-1")
        assert is_regular_point(x, sl2_u)
        assert [d.degree() for d in residue_invariants(x, sl2_u)] == [2]

    def test_residue_class_is_independent_of_the_representative(self, split_gl3_u, rng):
        w = EnumWindow.cube(3, (-1, 1), **SMALL_WINDOW)
        points = generate_fiber_points(split_gl3_u, borel((1, 2, 3)), w)
        for x in points[:15]:
            k = random_gl_o(3, rng)
            other = residue_matrix(adjoint(x.rep * k, split_gl3_u.u))
            assert frobenius_form(other) == residue_invariants(x, split_gl3_u)


class TestRetractFiber:
    def test_blocks_land_in_block_fibers(self, elliptic_gl4_u):
        x = identity_point(4)
        for P in all_parabolics(elliptic_gl4_u.levi):
            xp = retract_fiber(x, elliptic_gl4_u, P)
            assert xp == retract(x, P)
            for b, point in zip(xp.levi.blocks, xp.points):
                assert in_fiber(point, block_fiber(elliptic_gl4_u, b))

    def test_block_fiber_is_single_block(self, elliptic_gl4_u):
        ub = block_fiber(elliptic_gl4_u, (3, 4))
        assert ub.n == 2
        assert ub.u == matrix([["0", "4*eps"], ["1", "0"]])

    def test_residue_compatibility_on_generated_points(self, split_gl3_u):
        w = EnumWindow.cube(3, (-1, 1), **SMALL_WINDOW)
        points = generate_fiber_points(split_gl3_u, borel((1, 2, 3)), w)
        for x in points:
            for P in all_parabolics(split_gl3_u.levi):
                assert point_residue_compatibility(x, split_gl3_u, P)

    def test_torus_translates_stay_in_a_split_fiber(self, split_gl3_u):
        w = EnumWindow.cube(3, (0, 0), **SMALL_WINDOW)
        for x in generate_fiber_points(split_gl3_u, borel((1, 2, 3)), w):
            for mu in ((1, 0, -1), (-2, 3, 0)):
                y = torus_translate(mu, x)
                assert in_fiber(y, split_gl3_u)
                assert is_regular_point(y, split_gl3_u) == is_regular_point(x, split_gl3_u)


class TestGeneration:
    def test_generated_points_are_members_in_canonical_order(self, split_gl3_u):
        w = EnumWindow.cube(3, (-1, 1), **SMALL_WINDOW)
        stats = SweepStats()
        points = generate_fiber_points(split_gl3_u, borel((1, 2, 3)), w, stats)
        assert stats.candidates == 27 * 10
        assert stats.members >= len(points) >= 27
        assert len(set(points)) == len(points)
        assert all(in_fiber(x, split_gl3_u) for x in points)

    def test_iterator_yields_each_point_once_as_found(self, split_gl3_u):
        w = EnumWindow.cube(3, (-1, 1), **SMALL_WINDOW)
        stats = SweepStats()
        stream = iter_fiber_points(split_gl3_u, borel((1, 2, 3)), w, stats)
        first = next(stream)
        assert stats.candidates < 270
        rest = list(stream)
        assert stats.candidates == 270
        assert sorted([first] + rest, key=sort_key) == generate_fiber_points(split_gl3_u, borel((1, 2, 3)), w)

    def test_generation_is_deterministic(self, split_gl3_u):
        w = EnumWindow.cube(3, (-1, 1), exp_range=(-2, 1), coeff_set=(0, 1, -1),
                            sample_count=40, seed=11)
        B = borel((2, 1, 3))
        assert generate_fiber_points(split_gl3_u, B, w) == generate_fiber_points(split_gl3_u, B, w)

    def test_sweep_finds_a_regular_point_for_sl2(self, sl2_u):
        w = EnumWindow.cube(2, (0, 0), exp_range=(-1, -1), coeff_set=(0, 1))
        points = generate_fiber_points(sl2_u, borel((2, 1)), w)
        assert sl2_point("eps^-1") in points
        assert any(is_regular_point(x, sl2_u) for x in points)

    def test_window_must_match_the_group(self, split_gl3_u):
        with pytest.raises(SchemaError):
            generate_fiber_points(split_gl3_u, borel((1, 2, 3)), EnumWindow.cube(2, (0, 0), **SMALL_WINDOW))

    @pytest.mark.parametrize("kwargs", [
        dict(mu_box=((1, 0),), exp_range=(0, 0), coeff_set=(0,)),
        dict(mu_box=((0, 0),), exp_range=(0, 0), coeff_set=(1, 2)),
        dict(mu_box=((0, 0),), exp_range=(0, 0), coeff_set=(0,), sample_count=-1),
    ])
    def test_window_validation(self, kwargs):
        with pytest.raises(SchemaError):
            EnumWindow(**kwargs)


@pytest.mark.slow
def test_fiber_invariants_on_sampled_points():
    u = FiberDatum.create(diagonal("eps", "2*eps", "4*eps"), LeviDatum.torus(3))
    rng = random.Random(99)
    w = EnumWindow.cube(3, (-2, 2), exp_range=(-3, 3), coeff_set=(0, 1, -1, 2),
                        sample_count=1000, seed=5)
    points = generate_fiber_points(u, borel((1, 2, 3)), w)
    for x in points:
        y = canonicalize(x.rep * random_gl_o(3, rng))
        assert y == x
        assert in_fiber(y, u)
        for P in all_parabolics(u.levi):
            assert point_residue_compatibility(x, u, P)


def _diagonal_fiber(levi, *entries):
    return FiberDatum.create(diagonal(*entries), levi)


RE_REPRESENTATION_CASES = {
    "sl2": (lambda: _diagonal_fiber(LeviDatum.torus(2), "eps", "-1*eps"),
            dict(mu_box=((-1, 1),) * 2, exp_range=(-2, 0), coeff_set=(0, 1, -1), sample_count=20, seed=1)),
    "gl3": (lambda: _diagonal_fiber(LeviDatum.torus(3), "eps", "2*eps", "4*eps"),
            dict(mu_box=((-1, 1),) * 3, exp_range=(-1, 0), coeff_set=(0, 1), sample_count=20, seed=2)),
    "gl3-coarse-levi": (lambda: _diagonal_fiber(LeviDatum(3, ((1, 2), (3,))), "eps", "2*eps", "4*eps"),
                        dict(mu_box=((-1, 1),) * 3, exp_range=(-1, 0), coeff_set=(0, 1), sample_count=20, seed=3)),
    "gl4": (lambda: _diagonal_fiber(LeviDatum.torus(4), "eps", "2*eps", "3*eps", "5*eps"),
            dict(mu_box=((-1, 0),) * 4, exp_range=(-1, 0), coeff_set=(0, 1), sample_count=10, seed=4)),
    "gl4-elliptic": (lambda: fiber_from_json(load_fixture("gl4_elliptic.json")["fiber"]),
                     dict(mu_box=((-1, 1),) * 4, exp_range=(-1, 1), coeff_set=(0, 1, -1), sample_count=10, seed=5)),
}


@pytest.mark.slow
@pytest.mark.parametrize("case", sorted(RE_REPRESENTATION_CASES))
def test_fiber_operations_ignore_the_representative(case):
    make_fiber, window = RE_REPRESENTATION_CASES[case]
    u = make_fiber()
    points = generate_fiber_points(u, borel(range(1, u.n + 1)), EnumWindow(**window))
    assert points
    parabolics = all_parabolics(u.levi)
    pairs = adjacent_pairs(u.levi)
    regular = {x: is_regular_point(x, u) for x in points}
    rng = random.Random(7000 + u.n)
    for trial in range(1000):
        x = points[trial % len(points)]
        alias = GrassPoint(u.n, x.rep * random_gl_o(u.n, rng))
        assert in_fiber(alias, u)
        assert is_regular_point(alias, u) == regular[x]
        P = rng.choice(parabolics)
        assert retract(alias, P) == retract(x, P)
        P, P2 = rng.choice(pairs)
        assert n_pair(alias, P, P2) == n_pair(x, P, P2)
