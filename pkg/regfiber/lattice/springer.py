#!/usr/bin/env python3
"""
Affine Springer fibers X^u = {gG(O) : Ad(g^-1)u ∈ gl(n, O)}

Handles:
- Validation of integral regular semisimple u block-diagonal for a Levi M
- Membership, residue class ū(x) and regularity of points
- Blockwise retraction into X^u_M with a membership self-check
- Desk-scale generation of fiber points in Iwasawa coordinates
"""

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..algebra.exactfield import FieldElem, ZERO, in_O, to_rational
from ..algebra.polylinalg import (
    MatrixF, MatrixQ, PolyF, charpoly, frobenius_form, inverse, is_cyclic, is_squarefree,
    residue_matrix, resultant,
)
from ..errors import FiberRetractViolation, NotInFiber, NotIntegralRSS, SchemaError
from .grassmann import GrassPoint, LeviPoint, act, canonicalize, sort_key
from .iwasawa import retract
from .rootcomb import Block, LeviDatum, ParabolicDatum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiberDatum:
    """Integral regular semisimple u, block-diagonal for levi"""

    n: int
    levi: LeviDatum
    u: MatrixF

    @classmethod
    def create(cls, u: MatrixF, levi: Optional[LeviDatum] = None) -> "FiberDatum":
        """
        Validated constructor

        Raises:
            NotIntegralRSS: if u fails any of the fiber requirements
        """
        levi = levi or LeviDatum.whole(u.size)
        if levi.n != u.size:
            raise NotIntegralRSS(f"Levi of GL({levi.n}) for a {u.size}x{u.size} matrix")
        problem = integral_rss_problem(u, levi)
        if problem:
            raise NotIntegralRSS(problem)
        return cls(u.size, levi, u)

    def block_matrix(self, block: Block) -> MatrixF:
        return self.u.submatrix([i - 1 for i in block])

    @cached_property
    def block_charpolys(self) -> Dict[Block, PolyF]:
        return {b: charpoly(self.block_matrix(b)) for b in self.levi.blocks}


@dataclass(frozen=True)
class EnumWindow:
    """Finite window of Iwasawa coordinates n(t)·ε^μ"""

    mu_box: Tuple[Tuple[int, int], ...]
    exp_range: Tuple[int, int]
    coeff_set: Tuple[Fraction, ...]
    sample_count: int = 0
    max_terms: int = 1
    seed: int = 0

    def __post_init__(self):
        if any(lo > hi for lo, hi in self.mu_box) or self.exp_range[0] > self.exp_range[1]:
            raise SchemaError(f"Empty interval in window {self.mu_box} / {self.exp_range}")
        coeffs = tuple(to_rational(c) for c in self.coeff_set)
        if Fraction(0) not in coeffs:
            raise SchemaError("coeff_set must contain 0")
        object.__setattr__(self, "coeff_set", coeffs)
        if self.sample_count < 0 or self.max_terms < 0:
            raise SchemaError("sample_count and max_terms must be non-negative")

    @classmethod
    def cube(cls, n: int, mu: Tuple[int, int], **kwargs) -> "EnumWindow":
        return cls(mu_box=(mu,) * n, **kwargs)


@dataclass
class SweepStats:
    candidates: int = 0
    members: int = 0


# === VALIDATION ===

def integral_rss_problem(u: MatrixF, levi: LeviDatum) -> Optional[str]:
    """Reason u fails the fiber requirements, or None"""
    n = u.size
    for i in range(n):
        for j in range(n):
            if u[i, j] and levi.block_of(i + 1) != levi.block_of(j + 1):
                return f"Entry ({i + 1},{j + 1}) lies outside the blocks of M"
            if not in_O(u[i, j]):
                return f"Entry ({i + 1},{j + 1}) has negative valuation"
    if not is_squarefree(charpoly(u)):
        return "Characteristic polynomial has a repeated root"
    polys = [charpoly(u.submatrix([i - 1 for i in b])) for b in levi.blocks]
    for p, q in itertools.combinations(polys, 2):
        if resultant(p, q).is_zero():
            return "Block characteristic polynomials share a root"
    return None


def is_integral_rss(u: MatrixF, levi: LeviDatum) -> bool:
    return integral_rss_problem(u, levi) is None


# === MEMBERSHIP AND RESIDUES ===

def adjoint(g: MatrixF, u: MatrixF) -> MatrixF:
    """Ad(g^-1)u = g^-1·u·g"""
    return inverse(g) * u * g


def _is_integral(m: MatrixF) -> bool:
    return all(in_O(e) for r in m.rows for e in r)


def in_fiber(x: GrassPoint, u: FiberDatum) -> bool:
    return _is_integral(adjoint(x.rep, u.u))


def residue_class(x: GrassPoint, u: FiberDatum) -> MatrixQ:
    """
    Residue of Ad(rep^-1)u, a representative of ū(x)

    Raises:
        NotInFiber: if x ∉ X^u
    """
    conj = adjoint(x.rep, u.u)
    if not _is_integral(conj):
        raise NotInFiber("Point is not in the fiber of u")
    return residue_matrix(conj)


def is_regular_point(x: GrassPoint, u: FiberDatum) -> bool:
    return is_cyclic(residue_class(x, u))


def residue_invariants(x: GrassPoint, u: FiberDatum):
    """Invariant factors of ū(x), the conjugacy class identity"""
    return frobenius_form(residue_class(x, u))


def block_fiber(u: FiberDatum, block: Block) -> FiberDatum:
    """u_b as a fiber datum of GL(|b|) with a single block"""
    return FiberDatum(len(block), LeviDatum.whole(len(block)), u.block_matrix(block))


def retract_fiber(x: GrassPoint, u: FiberDatum, P: ParabolicDatum) -> LeviPoint:
    """
    r_P(x) with the check that each block lands in X^{u_b}

    Raises:
        FiberRetractViolation: if a block point leaves its fiber
    """
    xp = retract(x, P)
    for b, point in zip(xp.levi.blocks, xp.points):
        if not in_fiber(point, block_fiber(u, b)):
            logger.error(f"Retraction to {P} left the fiber on block {b}")
            raise FiberRetractViolation(f"r_P(x) block {b} is not in X^(u_b) for P = {P}")
    return xp


def point_residue_compatibility(x: GrassPoint, u: FiberDatum, P: ParabolicDatum) -> bool:
    """charpoly(ū_G(x)) equals the product of the blockwise residue charpolys at x_P"""
    whole = charpoly(residue_class(x, u))
    xp = retract_fiber(x, u, P)
    product = None
    for b, point in zip(xp.levi.blocks, xp.points):
        p = charpoly(residue_class(point, block_fiber(u, b)))
        product = p if product is None else product * p
    return whole == product


def torus_translate(mu: Sequence[int], x: GrassPoint) -> GrassPoint:
    """ε^μ·x"""
    return act(MatrixF.diagonal([FieldElem.eps_power(k) for k in mu]), x)


# === FIBER POINT GENERATION ===

def _upper_positions(B: ParabolicDatum) -> List[Tuple[int, int]]:
    """0-based positions of the unipotent radical of B"""
    perm = B.perm
    return [(perm[a] - 1, perm[b] - 1) for a in range(len(perm)) for b in range(a + 1, len(perm))]


def _candidate(n: int, mu: Sequence[int], coords: Dict[Tuple[int, int], FieldElem]) -> MatrixF:
    """n(t)·ε^μ"""
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = FieldElem.eps_power(mu[i])
    for (i, j), t in coords.items():
        rows[i][j] = t * FieldElem.eps_power(mu[j])
    return MatrixF(rows)


def _monomials(w: EnumWindow) -> List[FieldElem]:
    lo, hi = w.exp_range
    return [FieldElem.eps_power(k, a) for k in range(lo, hi + 1) for a in w.coeff_set if a]


def _sweep(n: int, B: ParabolicDatum, w: EnumWindow) -> Iterator[MatrixF]:
    positions = _upper_positions(B)
    monomials = _monomials(w)
    ranges = [range(lo, hi + 1) for lo, hi in w.mu_box]
    for mu in itertools.product(*ranges):
        for count in range(min(w.max_terms, len(positions)) + 1):
            for chosen in itertools.combinations(positions, count):
                for values in itertools.product(monomials, repeat=count):
                    yield _candidate(n, mu, dict(zip(chosen, values)))


def _random_laurent(rng: random.Random, w: EnumWindow) -> FieldElem:
    lo, hi = w.exp_range
    pool = list(w.coeff_set) + [Fraction(rng.randint(-3, 3), rng.randint(1, 3))]
    return FieldElem.from_laurent({rng.randint(lo, hi): rng.choice(pool)
                                   for _ in range(rng.randint(1, 2))})


def _samples(n: int, B: ParabolicDatum, w: EnumWindow) -> Iterator[MatrixF]:
    rng = random.Random(w.seed)
    positions = _upper_positions(B)
    for _ in range(w.sample_count):
        mu = [rng.randint(lo, hi) for lo, hi in w.mu_box]
        yield _candidate(n, mu, {p: _random_laurent(rng, w) for p in positions})


def iter_fiber_points(u: FiberDatum, B: ParabolicDatum, w: EnumWindow,
                      stats: Optional[SweepStats] = None) -> Iterator[GrassPoint]:
    """
    Distinct fiber points among the window's candidates, in discovery order

    Makes no completeness claim; every yielded point is a genuine member.
    """
    if len(w.mu_box) != u.n or B.n != u.n:
        raise SchemaError(f"Window or Borel does not match GL({u.n})")
    stats = stats if stats is not None else SweepStats()
    found = set()
    for g in itertools.chain(_sweep(u.n, B, w), _samples(u.n, B, w)):
        stats.candidates += 1
        if not _is_integral(adjoint(g, u.u)):
            continue
        stats.members += 1
        x = canonicalize(g)
        if x not in found:
            found.add(x)
            yield x
    logger.info(f"Sweep: {stats.candidates} candidates, {stats.members} members, {len(found)} distinct points")


def generate_fiber_points(u: FiberDatum, B: ParabolicDatum, w: EnumWindow,
                          stats: Optional[SweepStats] = None) -> List[GrassPoint]:
    """Deduplicated fiber points among the window's candidates, in canonical order"""
    return sorted(iter_fiber_points(u, B, w, stats), key=sort_key)
