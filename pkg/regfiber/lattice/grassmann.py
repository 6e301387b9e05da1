#!/usr/bin/env python3
"""
Points of the affine Grassmannian X = GL(n, F)/GL(n, O)

A coset gGL(n, O) is the O-lattice spanned by the columns of g. Its canonical
representative is the column Hermite normal form over O:
- lower triangular
- diagonal entries ε^{d_i}
- entry (i, j), j < i, a Laurent polynomial with exponents below d_i

Two matrices lie in the same coset exactly when their normal forms agree.
"""

import logging
import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from ..algebra.exactfield import (
    INFINITY, FieldElem, ONE, ZERO, in_O, laurent_truncate, val,
)
from ..algebra.polylinalg import MatrixF, det, inverse
from ..errors import LeviMismatch, SingularMatrix
from .rootcomb import Block, CoweightM, LeviDatum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GrassPoint:
    """A coset of X, always built through canonicalize"""

    n: int
    rep: MatrixF

    def exponents(self) -> Tuple[int, ...]:
        """The d_i of the diagonal ε^{d_i}"""
        return tuple(val(self.rep[i, i]) for i in range(self.n))


@dataclass(frozen=True)
class LeviPoint:
    """A point of X_M: one GrassPoint per block, aligned with levi.blocks"""

    levi: LeviDatum
    points: Tuple[GrassPoint, ...]

    def __post_init__(self):
        if len(self.points) != self.levi.rank:
            raise LeviMismatch(f"{len(self.points)} points for {self.levi.rank} blocks")
        for b, p in zip(self.levi.blocks, self.points):
            if p.n != len(b):
                raise LeviMismatch(f"Block {b} holds a point of GL({p.n})")

    @property
    def block_points(self) -> Dict[Block, GrassPoint]:
        return dict(zip(self.levi.blocks, self.points))

    def point_for(self, block: Block) -> GrassPoint:
        return self.points[self.levi.index_of(block)]

    def block_matrix(self) -> MatrixF:
        """Block-diagonal representative placed on the block indices"""
        n = self.levi.n
        rows = [[ZERO] * n for _ in range(n)]
        for b, p in zip(self.levi.blocks, self.points):
            for a, i in enumerate(b):
                for c, j in enumerate(b):
                    rows[i - 1][j - 1] = p.rep[a, c]
        return MatrixF(rows)

    def embed(self) -> GrassPoint:
        """Image under X_M ↪ X"""
        return canonicalize(self.block_matrix())


# === NORMAL FORM ===

def canonicalize(g: MatrixF) -> GrassPoint:
    """
    Column Hermite normal form of g over O

    Raises:
        SingularMatrix: if g is not invertible
    """
    n = g.size
    a = [list(r) for r in g.rows]

    def add_column(dst: int, src: int, factor: FieldElem, start: int) -> None:
        for r in range(start, n):
            if a[r][src]:
                a[r][dst] = a[r][dst] - factor * a[r][src]

    # columns to the right of row i are zero above row i at every stage
    for i in range(n):
        best, best_val = None, None
        for j in range(i, n):
            v = val(a[i][j])
            if v != INFINITY and (best is None or v < best_val):
                best, best_val = j, v
        if best is None:
            raise SingularMatrix(f"Matrix of size {n} is singular (row {i + 1})")
        if best != i:
            for r in a:
                r[i], r[best] = r[best], r[i]
        scale = FieldElem.eps_power(best_val) / a[i][i]
        if scale != ONE:
            for r in range(i, n):
                a[r][i] = a[r][i] * scale
        for j in range(i + 1, n):
            if a[i][j]:
                add_column(j, i, a[i][j] / a[i][i], i)

    # reduce below the diagonal against the pivot column of each row
    for i in range(1, n):
        d = val(a[i][i])
        for j in range(i):
            e = a[i][j]
            if not e:
                continue
            factor = (e - laurent_truncate(e, d)) / a[i][i]
            if factor:
                add_column(j, i, factor, i)
    return GrassPoint(n, MatrixF(a))


def same_coset(x: GrassPoint, y: GrassPoint) -> bool:
    if x.n != y.n:
        return False
    h = inverse(x.rep) * y.rep
    return all(in_O(e) for r in h.rows for e in r) and val(det(h)) == 0


def nu_G(x: GrassPoint) -> int:
    """val(det rep); rep is triangular so this is the sum of the d_i"""
    return sum(x.exponents())


def act(g: MatrixF, x: GrassPoint) -> GrassPoint:
    """Left translation g·x"""
    return canonicalize(g * x.rep)


def levi_nu(xm: LeviPoint) -> CoweightM:
    """ν_M: per-block val∘det"""
    return CoweightM(xm.levi, tuple(nu_G(p) for p in xm.points))


def torus_point(mu: Sequence[int]) -> GrassPoint:
    """ε^μ = diag(ε^{μ_1}, ..., ε^{μ_n})"""
    return GrassPoint(len(mu), MatrixF.diagonal([FieldElem.eps_power(k) for k in mu]))


def identity_point(n: int) -> GrassPoint:
    return GrassPoint(n, MatrixF.identity(n))


def levi_point(levi: LeviDatum, matrix: MatrixF) -> LeviPoint:
    """LeviPoint of a block-diagonal matrix"""
    points = tuple(canonicalize(matrix.submatrix([i - 1 for i in b])) for b in levi.blocks)
    return LeviPoint(levi, points)


def sort_key(x: GrassPoint) -> Tuple[int, Tuple[str, ...]]:
    """Canonical ordering of points by their serialized entries"""
    return x.n, tuple(str(e) for r in x.rep.rows for e in r)


def sorted_points(points: Iterable[GrassPoint]) -> List[GrassPoint]:
    return sorted(set(points), key=sort_key)


# === RANDOM ELEMENTS ===

_SMALL_RATIONALS = (1, -1, 2, -2, 3, "1/2", "-1/3")


def random_o_element(rng: random.Random, terms: int = 2, max_exp: int = 2) -> FieldElem:
    """Random element of O, sometimes with a unit denominator"""
    value = ZERO
    for _ in range(rng.randint(0, terms)):
        value = value + FieldElem.eps_power(rng.randint(0, max_exp), rng.choice(_SMALL_RATIONALS))
    if rng.random() < 0.25:
        value = value / (ONE + FieldElem.eps_power(rng.randint(1, max_exp), rng.choice(_SMALL_RATIONALS)))
    return value


def random_unit(rng: random.Random) -> FieldElem:
    return FieldElem.constant(rng.choice(_SMALL_RATIONALS)) + random_o_element(rng, terms=1) * FieldElem.eps_power(1)


def random_gl_o(n: int, rng: random.Random, steps: int = 4) -> MatrixF:
    """
    Random element of GL(n, O)

    Product of a diagonal of units and `steps` elementary column operations
    with O-entries, so membership holds by construction.
    """
    rows = [[random_unit(rng) if i == j else ZERO for j in range(n)] for i in range(n)]
    if n == 1:
        return MatrixF(rows)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        factor = random_o_element(rng)
        if not factor:
            continue
        # column j += factor · column i
        for r in rows:
            r[j] = r[j] + factor * r[i]
    return MatrixF(rows)


def random_matrix(n: int, rng: random.Random, exp_range: Tuple[int, int] = (-2, 2)) -> MatrixF:
    """Random invertible matrix over Q(ε) with Laurent polynomial entries"""
    lo, hi = exp_range
    while True:
        rows = [[FieldElem.from_laurent({rng.randint(lo, hi): rng.choice(_SMALL_RATIONALS)
                                         for _ in range(rng.randint(0, 2))})
                 for _ in range(n)] for _ in range(n)]
        m = MatrixF(rows)
        if det(m):
            return m
