#!/usr/bin/env python3
"""
Pointwise verification of the regularity criterion for affine Springer fibers

For u integral regular semisimple in m(F) and x ∈ X^u:
- (a) n(x, P, P') <= n(u, P, P') for every adjacent pair in P(M)
- (b) x is regular iff every x_P is regular in X^u_M and equality holds in (a)

n(u, P, P') is the valuation of the resultant of the two swapped block
characteristic polynomials, i.e. the sum of val(α(u)) over all roots in N ∩ N̄'.
"""

import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.exactfield import val
from ..algebra.polylinalg import resultant
from ..errors import CoprimalityViolation, LeviMismatch, NotDiagonal, TheoremViolation
from ..lattice.grassmann import GrassPoint, levi_nu, sort_key
from ..lattice.iwasawa import n_from_nu
from ..lattice.rootcomb import (
    CoweightM, LeviDatum, ParabolicDatum, adjacent_pairs, all_parabolics, borel,
    gallery_roots, minimal_gallery, opposite, borel_lift, swapped_pair,
)
from ..lattice.springer import (
    EnumWindow, FiberDatum, SweepStats, block_fiber, generate_fiber_points,
    is_regular_point, retract_fiber,
)

logger = logging.getLogger(__name__)

Pair = Tuple[ParabolicDatum, ParabolicDatum]


def pair_key(P: ParabolicDatum, P2: ParabolicDatum) -> str:
    """Serialization "P|P2" of an adjacent pair"""
    return f"{P}|{P2}"


# === n(u, P, P') ===

def n_u_pair(u: FiberDatum, P: ParabolicDatum, P2: ParabolicDatum) -> int:
    """
    val Res(charpoly(u_b), charpoly(u_b')) for the swapped blocks (b, b')

    Raises:
        NotAdjacent: if P, P2 are not adjacent
        CoprimalityViolation: if the block charpolys share a root
    """
    b, b2 = swapped_pair(P, P2)
    r = resultant(u.block_charpolys[b], u.block_charpolys[b2])
    if r.is_zero():
        raise CoprimalityViolation(f"Blocks {b} and {b2} share an eigenvalue")
    return int(val(r))


def root_valuation(u: FiberDatum, alpha: Tuple[int, int]) -> int:
    """val(α(u)) = val(u_ii - u_jj) for diagonal u"""
    i, j = alpha
    return int(val(u.u[i - 1, i - 1] - u.u[j - 1, j - 1]))


# === CERTIFICATES ===

@dataclass
class TheoremCertificate:
    """Everything checked on one point"""

    point: GrassPoint
    nu_table: Dict[ParabolicDatum, CoweightM]
    n_x_table: Dict[Pair, int]
    n_u_table: Dict[Pair, int]
    in_fiber: bool
    regular: bool
    retractions_regular: bool
    part_a_ok: bool
    part_b_ok: bool

    @property
    def ok(self) -> bool:
        return self.part_a_ok and self.part_b_ok


@dataclass
class Summary:
    """Counts over one verification run; violations is always 0 when returned"""

    candidates: int = 0
    fiber_points: int = 0
    regular: int = 0
    non_regular: int = 0
    pairs_checked: int = 0
    violations: int = 0
    wall_time: Optional[float] = None

    def add(self, cert: TheoremCertificate) -> None:
        self.fiber_points += 1
        self.pairs_checked += len(cert.n_x_table)
        if cert.regular:
            self.regular += 1
        else:
            self.non_regular += 1


def n_u_table(u: FiberDatum) -> Dict[Pair, int]:
    return {(P, P2): n_u_pair(u, P, P2) for P, P2 in adjacent_pairs(u.levi)}


def certify_point(x: GrassPoint, u: FiberDatum,
                  u_table: Optional[Dict[Pair, int]] = None) -> TheoremCertificate:
    """
    Fill the certificate of one fiber point, computing both sides independently

    Raises:
        NotInFiber: if x ∉ X^u
    """
    u_table = u_table if u_table is not None else n_u_table(u)
    regular = is_regular_point(x, u)

    retractions = {P: retract_fiber(x, u, P) for P in all_parabolics(u.levi)}
    nus = {P: levi_nu(xp) for P, xp in retractions.items()}
    retractions_regular = all(
        is_regular_point(point, block_fiber(u, b))
        for xp in retractions.values()
        for b, point in zip(xp.levi.blocks, xp.points)
    )

    x_table = {(P, P2): n_from_nu(nus[P], nus[P2], P, P2) for P, P2 in u_table}
    part_a = all(x_table[p] <= u_table[p] for p in u_table)
    equality = all(x_table[p] == u_table[p] for p in u_table)
    part_b = regular == (retractions_regular and equality)

    return TheoremCertificate(
        point=x,
        nu_table=nus,
        n_x_table=x_table,
        n_u_table=dict(u_table),
        in_fiber=True,
        regular=regular,
        retractions_regular=retractions_regular,
        part_a_ok=part_a,
        part_b_ok=part_b,
    )


def _check(cert: TheoremCertificate) -> None:
    if cert.ok:
        return
    from ..core.schema import certificate_to_json

    failed = "part (a)" if not cert.part_a_ok else "part (b)"
    logger.error(f"Theorem {failed} failed on a fiber point")
    raise TheoremViolation(f"Theorem {failed} failed", certificate_to_json(cert))


def _certify_chunk(points: Sequence[GrassPoint], u: FiberDatum) -> List[TheoremCertificate]:
    """Worker entry point; module level so it pickles"""
    table = n_u_table(u)
    return [certify_point(x, u, table) for x in points]


async def _certify_parallel(points: List[GrassPoint], u: FiberDatum,
                            workers: int) -> List[TheoremCertificate]:
    loop = asyncio.get_running_loop()
    size = max(1, -(-len(points) // (workers * 4)))
    chunks = [points[i:i + size] for i in range(0, len(points), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        tasks = [loop.run_in_executor(pool, _certify_chunk, chunk, u) for chunk in chunks]
        results = await asyncio.gather(*tasks)
    return [cert for chunk in results for cert in chunk]


def verify_theorem(u: FiberDatum, w: EnumWindow, B: Optional[ParabolicDatum] = None,
                   parallel: int = 1, timing: bool = False) -> Tuple[List[TheoremCertificate], Summary]:
    """
    Certify every generated fiber point

    Args:
        u: fiber datum
        w: enumeration window
        B: Borel for the Iwasawa coordinates (defaults to the identity order)
        parallel: worker processes; 1 runs inline
        timing: record wall time in the summary

    Raises:
        TheoremViolation: carrying the first failing certificate
    """
    start = time.perf_counter()
    B = B or borel(range(1, u.n + 1))
    stats = SweepStats()
    points = generate_fiber_points(u, B, w, stats)

    if parallel > 1 and len(points) > 1:
        certs = asyncio.run(_certify_parallel(points, u, parallel))
    else:
        certs = _certify_chunk(points, u)
    certs.sort(key=lambda c: sort_key(c.point))

    summary = Summary(candidates=stats.candidates)
    for cert in certs:
        _check(cert)
        summary.add(cert)
    if timing:
        summary.wall_time = round(time.perf_counter() - start, 3)
    logger.info(f"Certified {summary.fiber_points} points: "
                f"{summary.regular} regular, {summary.non_regular} non-regular")
    return certs, summary


# === DERIVED IDENTITIES ===

def _require_diagonal(u: FiberDatum) -> None:
    if not is_diagonal(u):
        raise NotDiagonal("Root valuations are read off the diagonal of u")


def opposite_sum_check(x: GrassPoint, u: FiberDatum, B: ParabolicDatum) -> bool:
    """
    ν_A(x_B) - ν_A(x_B̄) = Σ_{α > 0 for B} val(α(u))·α^∨ on a regular point

    A diagonal u is read with M = A whatever Levi it was given for.

    Raises:
        NotDiagonal: if u is not diagonal
        LeviMismatch: if B is not a Borel subgroup
    """
    _require_diagonal(u)
    if not B.is_borel():
        raise LeviMismatch(f"{B} is not a Borel subgroup")
    u = u if u.levi.is_torus() else torus_fiber(u)
    xb = levi_nu(retract_fiber(x, u, B))
    xbar = levi_nu(retract_fiber(x, u, opposite(B)))
    perm = B.perm
    values = dict.fromkeys(u.levi.blocks, 0)
    for a in range(len(perm)):
        for c in range(a + 1, len(perm)):
            v = root_valuation(u, (perm[a], perm[c]))
            values[(perm[a],)] += v
            values[(perm[c],)] -= v
    return (xb - xbar) == CoweightM.from_map(u.levi, values)


def gallery_sum_check(u: FiberDatum, P: ParabolicDatum, P2: ParabolicDatum,
                      inner_order: Optional[Sequence[int]] = None, rng=None) -> bool:
    """
    n(u, P, P') against Σ val(α_i(u)) over the crossing roots of a lifted gallery

    Raises:
        NotDiagonal: if u is not diagonal
    """
    _require_diagonal(u)
    gallery = minimal_gallery(borel_lift(P, inner_order), borel_lift(P2, inner_order), rng)
    total = sum(root_valuation(u, alpha) for alpha in gallery_roots(gallery))
    return total == n_u_pair(u, P, P2)


def is_diagonal(u: FiberDatum) -> bool:
    return all(not u.u[i, j] for i in range(u.n) for j in range(u.n) if i != j)


def torus_fiber(u: FiberDatum) -> FiberDatum:
    """The same diagonal u viewed with M = A"""
    return FiberDatum(u.n, LeviDatum.torus(u.n), u.u)
