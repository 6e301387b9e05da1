"""
Tests for GL(n) Levi, parabolic and gallery combinatorics
"""

import math
import random

import pytest

from regfiber.errors import (
    LeviMismatch, NotAdjacent, ProportionalityViolation, RootNotInNNbar, SchemaError,
)
from regfiber.lattice.rootcomb import (
    CoweightM, LeviDatum, ParabolicDatum, adjacent, adjacent_pairs, all_parabolics, beta,
    borel, borel_lift, coarsen, coroot_image, gallery_roots, inversions, m_alpha,
    minimal_gallery, opposite, parse_parabolic, project_coweight, rank_one_parabolic,
    restrict, roots_between, swapped_pair,
)

M12_3 = LeviDatum(3, ((1, 2), (3,)))


def test_levi_blocks_are_normalized():
    levi = LeviDatum(4, ((4, 3), (1,), (2,)))
    assert levi.blocks == ((1,), (2,), (3, 4))
    assert levi.rank == 3
    assert levi.block_of(4) == (3, 4)


@pytest.mark.parametrize("blocks", [((1, 2), (2, 3)), ((1,), (3,)), ((1, 2, 3), ())])
def test_levi_rejects_non_partitions(blocks):
    with pytest.raises(SchemaError):
        LeviDatum(3, blocks)


@pytest.mark.parametrize("n_blocks", [1, 2, 3, 4])
def test_parabolic_counts(n_blocks):
    levi = LeviDatum.torus(n_blocks)
    assert len(all_parabolics(levi)) == math.factorial(n_blocks)
    assert len(adjacent_pairs(levi)) == math.factorial(n_blocks) * (n_blocks - 1)


def test_adjacency_and_beta():
    P = ParabolicDatum(((1, 2), (3,)))
    P2 = ParabolicDatum(((3,), (1, 2)))
    assert adjacent(P, P2) == ((1, 2), (3,))
    assert beta(P, P2).as_map() == {(1, 2): 1, (3,): -1}
    assert roots_between(P, P2) == ((1, 3), (2, 3))
    for alpha in roots_between(P, P2):
        assert coroot_image(alpha, M12_3) == beta(P, P2)
        assert m_alpha(alpha, P, P2) == 1


def test_non_adjacent_pairs():
    B = borel((1, 2, 3))
    assert adjacent(B, opposite(B)) is None
    with pytest.raises(NotAdjacent):
        swapped_pair(B, opposite(B))
    with pytest.raises(LeviMismatch):
        adjacent(B, ParabolicDatum(((1, 2), (3,))))


def test_root_outside_n_cap_nbar():
    P, P2 = borel((1, 2, 3)), borel((2, 1, 3))
    with pytest.raises(RootNotInNNbar):
        m_alpha((1, 3), P, P2)


def test_m_alpha_other_than_one_is_an_invariant_violation(monkeypatch):
    P, P2 = borel((1, 2, 3)), borel((2, 1, 3))

    def doubled(alpha, levi):
        return 2 * CoweightM.from_map(levi, {(alpha[0],): 1, (alpha[1],): -1})

    monkeypatch.setattr("regfiber.lattice.rootcomb.coroot_image", doubled)
    with pytest.raises(ProportionalityViolation, match="m = 2"):
        m_alpha((1, 2), P, P2)


def test_coweight_arithmetic():
    a = CoweightM(M12_3, (3, -1))
    b = CoweightM(M12_3, (1, -1))
    assert (a - b).multiple_of(CoweightM(M12_3, (1, 0))) == 2
    assert a.multiple_of(b) is None
    assert CoweightM.zero(M12_3).multiple_of(b) == 0
    assert (2 * b).components == (2, -2)
    assert a.total() == 2
    with pytest.raises(LeviMismatch):
        a + CoweightM.zero(LeviDatum.torus(3))


def test_coarsen_and_restrict():
    B = borel((3, 1, 2))
    Q = coarsen(B, (2, 1))
    assert Q.blocks == ((1, 3), (2,))
    assert restrict(B, (1, 3)).blocks == ((2,), (1,))
    assert rank_one_parabolic(B, borel((1, 3, 2))).blocks == ((1, 3), (2,))
    with pytest.raises(SchemaError):
        coarsen(B, (1, 1))


def test_project_coweight_sums_blocks():
    value = CoweightM(LeviDatum.torus(3), (2, -5, 1))
    projected = project_coweight(value, M12_3)
    assert projected.as_map() == {(1, 2): -3, (3,): 1}
    assert projected.total() == value.total()


def test_borel_lift_orders_blocks():
    P = ParabolicDatum(((3,), (1, 2)))
    assert borel_lift(P).perm == (3, 1, 2)
    assert borel_lift(P, (2, 1, 3)).perm == (3, 2, 1)


def test_minimal_gallery_length_is_inversion_count():
    B, B2 = borel((1, 2, 3, 4)), borel((4, 2, 3, 1))
    gallery = minimal_gallery(B, B2)
    assert gallery[0] == B and gallery[-1] == B2
    assert len(gallery) - 1 == len(inversions(B, B2))
    assert sorted(gallery_roots(gallery)) == sorted(inversions(B, B2))


def test_random_galleries_are_minimal():
    rng = random.Random(5)
    B, B2 = borel((1, 2, 3, 4)), borel((4, 3, 2, 1))
    for _ in range(20):
        gallery = minimal_gallery(B, B2, rng)
        assert len(gallery) == 7
        for prev, nxt in zip(gallery, gallery[1:]):
            assert adjacent(prev, nxt) is not None


def test_parse_parabolic():
    P = parse_parabolic([[3], [2, 1]])
    assert str(P) == "[[3],[1,2]]"
    assert P.to_json() == [[3], [1, 2]]
    with pytest.raises(SchemaError):
        parse_parabolic([["a"]])
