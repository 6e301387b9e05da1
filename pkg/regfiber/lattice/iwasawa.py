#!/usr/bin/env python3
"""
Iwasawa factorization g = n·m·k for P = MN, retractions r_P : X -> X_M
and the integers n(x, P, P')

Elimination strategy:
- columns of g are an O-lattice basis; only right GL(n, O) operations are used
- blocks are processed in P's order from last to first; every row of a block
  takes as pivot the free column of minimal valuation (lowest index on ties)
- once a block is done, the remaining free columns vanish on its rows
The result g·K is block upper triangular for P, which splits as n·m.
"""

import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.exactfield import INFINITY, ONE, ZERO, FieldElem, val
from ..algebra.polylinalg import MatrixF, det, inverse
from ..errors import ProportionalityViolation, SingularMatrix
from .grassmann import GrassPoint, LeviPoint, canonicalize
from .rootcomb import (
    CoweightM, LeviDatum, ParabolicDatum, all_parabolics, beta, borel_lift,
    gallery_roots, globalize, m_alpha, minimal_gallery, rank_one_parabolic, restrict,
    swapped_pair,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IwasawaFactors:
    """g = n_part · m_part · k_part"""

    n_part: MatrixF
    m_part: MatrixF
    k_part: MatrixF


def _reduce_to_parabolic(g: MatrixF, P: ParabolicDatum,
                         track: bool) -> Tuple[List[List[FieldElem]], Optional[List[List[FieldElem]]]]:
    """
    Right-multiply g by K ∈ GL(n, O) until g·K lies in P(F)

    Returns:
        (rows of g·K, rows of K or None when not tracked)
    """
    n = g.size
    a = [list(r) for r in g.rows]
    k = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)] if track else None
    free = list(range(n))

    def swap(c1: int, c2: int) -> None:
        for mat in (a, k) if track else (a,):
            for r in mat:
                r[c1], r[c2] = r[c2], r[c1]

    def subtract(dst: int, src: int, factor: FieldElem) -> None:
        for mat in (a, k) if track else (a,):
            for r in mat:
                if r[src]:
                    r[dst] = r[dst] - factor * r[src]

    for block in reversed(P.blocks):
        slots = [i - 1 for i in block]
        for row in slots:
            target = row
            best, best_val = None, None
            for c in free:
                v = val(a[row][c])
                if v != INFINITY and (best is None or v < best_val):
                    best, best_val = c, v
            if best is None:
                raise SingularMatrix(f"Matrix is singular on the rows of block {block}")
            if best != target:
                swap(best, target)
            pivot = a[row][target]
            for c in free:
                if c != target and a[row][c]:
                    subtract(c, target, a[row][c] / pivot)
            free.remove(target)
            logger.debug(f"Block {block}: row {row + 1} pivot valuation {best_val}")
    return a, k


def _block_diagonal_part(a: List[List[FieldElem]], levi: LeviDatum) -> MatrixF:
    n = len(a)
    rows = [[ZERO] * n for _ in range(n)]
    for b in levi.blocks:
        for i in b:
            for j in b:
                rows[i - 1][j - 1] = a[i - 1][j - 1]
    return MatrixF(rows)


def iwasawa_factor(g: MatrixF, P: ParabolicDatum) -> IwasawaFactors:
    """
    Factor g = n·m·k with n ∈ N(F), m ∈ M(F), k ∈ GL(n, O)

    Raises:
        SingularMatrix: if det(g) = 0
    """
    a, k = _reduce_to_parabolic(g, P, track=True)
    m_part = _block_diagonal_part(a, P.levi)
    n_part = MatrixF(a) * inverse(m_part)
    return IwasawaFactors(n_part=n_part, m_part=m_part, k_part=inverse(MatrixF(k)))


def retract(x: GrassPoint, P: ParabolicDatum) -> LeviPoint:
    """r_P(x): canonical M-blocks of the Iwasawa m-part"""
    a, _ = _reduce_to_parabolic(x.rep, P, track=False)
    points = []
    for b in P.levi.blocks:
        idx = [i - 1 for i in b]
        points.append(canonicalize(MatrixF([[a[i][j] for j in idx] for i in idx])))
    return LeviPoint(P.levi, tuple(points))


def retract_nu(x: GrassPoint, P: ParabolicDatum) -> CoweightM:
    """ν_M(r_P(x)) without canonicalizing the blocks"""
    a, _ = _reduce_to_parabolic(x.rep, P, track=False)
    values = []
    for b in P.levi.blocks:
        idx = [i - 1 for i in b]
        values.append(val(det(MatrixF([[a[i][j] for j in idx] for i in idx]))))
    return CoweightM(P.levi, tuple(values))


def nu_table(x: GrassPoint, levi: LeviDatum) -> Dict[ParabolicDatum, CoweightM]:
    """ν_M(x_P) for every P ∈ P(M)"""
    return {P: retract_nu(x, P) for P in all_parabolics(levi)}


# === ARTHUR INTEGERS ===

def n_from_nu(nu_P: CoweightM, nu_P2: CoweightM, P: ParabolicDatum, P2: ParabolicDatum) -> int:
    """
    The n with nu_P - nu_P2 = n·β_{P,P'}

    Raises:
        NotAdjacent: if P, P2 are not adjacent
        ProportionalityViolation: if no such non-negative n exists
    """
    diff = nu_P - nu_P2
    k = diff.multiple_of(beta(P, P2))
    if k is None or k < 0:
        logger.error(f"ν difference {diff.components} is not a non-negative multiple of β for {P}, {P2}")
        raise ProportionalityViolation(
            f"ν_M(x_P) - ν_M(x_P') = {diff.components} is not n·β with n >= 0 for {P}, {P2}"
        )
    return k


def n_pair(x: GrassPoint, P: ParabolicDatum, P2: ParabolicDatum) -> int:
    """n(x, P, P') for adjacent P, P'"""
    swapped_pair(P, P2)
    return n_from_nu(retract_nu(x, P), retract_nu(x, P2), P, P2)


def retract_through(x: GrassPoint, Q: ParabolicDatum, P: ParabolicDatum) -> LeviPoint:
    """r^L_{P_L} ∘ r^G_Q(x) for Q ⊃ P, assembled as a point of X_M"""
    y = retract(x, Q)
    by_block = {}
    for l_block, point in zip(y.levi.blocks, y.points):
        inner = retract(point, restrict(P, l_block))
        for local_block, local_point in zip(inner.levi.blocks, inner.points):
            by_block[globalize(local_block, l_block)] = local_point
    levi = P.levi
    return LeviPoint(levi, tuple(by_block[b] for b in levi.blocks))


def n_pair_gallery(x: GrassPoint, P: ParabolicDatum, P2: ParabolicDatum,
                   inner_order: Optional[Sequence[int]] = None,
                   rng: Optional[random.Random] = None) -> int:
    """
    Σ m_α·n(x, B_{i-1}, B_i) along a minimal gallery between the Borel lifts
    """
    swapped_pair(P, P2)
    gallery = minimal_gallery(borel_lift(P, inner_order), borel_lift(P2, inner_order), rng)
    cache: Dict[ParabolicDatum, CoweightM] = {}

    def nu(B: ParabolicDatum) -> CoweightM:
        if B not in cache:
            cache[B] = retract_nu(x, B)
        return cache[B]

    total = 0
    for (prev, nxt), alpha in zip(zip(gallery, gallery[1:]), gallery_roots(gallery)):
        total += m_alpha(alpha, P, P2) * n_from_nu(nu(prev), nu(nxt), prev, nxt)
    return total


def n_pair_rank_one(x: GrassPoint, B: ParabolicDatum, B2: ParabolicDatum) -> int:
    """n(x, B, B') computed as n(y, B_L, B'_L) inside the rank-one Levi on y = r_Q(x)"""
    Q = rank_one_parabolic(B, B2)
    y = retract(x, Q)
    i, j = swapped_pair(B, B2)
    l_block = tuple(sorted(i + j))
    return n_pair(y.point_for(l_block), restrict(B, l_block), restrict(B2, l_block))
