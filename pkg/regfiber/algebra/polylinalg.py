#!/usr/bin/env python3
"""
Polynomials and square matrices over Q(ε) and over Q

Handles:
- Determinant (Bareiss elimination), inverse, characteristic polynomial
- Resultant via the Sylvester matrix
- Invariant factors over Q[λ] (Smith form of λI - m), minimal polynomial
  and Frobenius normal form

Conjugacy classes in gl(n, Q) are identified by their invariant factor
lists; a matrix is regular exactly when it has a single invariant factor.
"""

import logging
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Tuple, Union

from .exactfield import (
    FieldElem, RationalPoly, ONE, ZERO, ONE_POLY, ZERO_POLY, residue, to_rational,
)
from ..errors import SingularMatrix, ZeroPolynomial

logger = logging.getLogger(__name__)


class PolyF:
    """Polynomial in λ over Q(ε), lowest degree first"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, FieldElem) else FieldElem.constant(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: Tuple[FieldElem, ...] = tuple(cs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> FieldElem:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __mul__(self, other: "PolyF") -> "PolyF":
        if self.is_zero() or other.is_zero():
            return PolyF()
        cs = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                cs[i + j] = cs[i + j] + a * b
        return PolyF(cs)

    def derivative(self) -> "PolyF":
        return PolyF([c * k for k, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyF):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyF({[str(c) for c in self.coeffs]})"


class _SquareMatrix:
    """Immutable square matrix over a field whose elements support + - * /"""

    __slots__ = ("rows",)

    zero = None
    one = None

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError(f"Matrix must be square and non-empty, got {n} rows")
        self.rows = tuple(tuple(self._coerce(x) for x in r) for r in rows)

    @staticmethod
    def _coerce(x):
        return x

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, idx: Tuple[int, int]):
        i, j = idx
        return self.rows[i][j]

    @classmethod
    def identity(cls, n: int):
        return cls([[cls.one if i == j else cls.zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence):
        n = len(entries)
        return cls([[entries[i] if i == j else cls.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int):
        return cls([[cls.zero] * n for _ in range(n)])

    def __mul__(self, other):
        if not isinstance(other, _SquareMatrix):
            return type(self)([[x * other for x in r] for r in self.rows])
        n = self.size
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = self.zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return type(self)(out)

    def __add__(self, other):
        return type(self)([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return type(self)([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def transpose(self):
        return type(self)([list(c) for c in zip(*self.rows)])

    def trace(self):
        acc = self.zero
        for i in range(self.size):
            acc = acc + self.rows[i][i]
        return acc

    def submatrix(self, indices: Sequence[int]):
        """Principal submatrix on the given 0-based indices"""
        return type(self)([[self.rows[i][j] for j in indices] for i in indices])

    def map(self, func: Callable):
        return type(self)([[func(x) for x in r] for r in self.rows])

    def __eq__(self, other) -> bool:
        if not isinstance(other, _SquareMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"{type(self).__name__}[{body}]"


class MatrixF(_SquareMatrix):
    """Square matrix over Q(ε)"""

    __slots__ = ()
    zero = ZERO
    one = ONE

    @staticmethod
    def _coerce(x):
        return x if isinstance(x, FieldElem) else FieldElem.constant(x)


class MatrixQ(_SquareMatrix):
    """Square matrix over Q"""

    __slots__ = ()
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def _coerce(x):
        return to_rational(x)


Matrix = Union[MatrixF, MatrixQ]


# === CONSTRUCTORS ===

def block_diagonal(blocks: Sequence[MatrixF]) -> MatrixF:
    n = sum(b.size for b in blocks)
    rows = [[ZERO] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i in range(b.size):
            for j in range(b.size):
                rows[offset + i][offset + j] = b[i, j]
        offset += b.size
    return MatrixF(rows)


def companion(poly: PolyF) -> MatrixF:
    """Companion matrix of a monic polynomial (subdiagonal ones, last column -coeffs)"""
    if poly.is_zero() or poly.degree() < 1:
        raise ZeroPolynomial("Companion matrix needs a polynomial of degree >= 1")
    lead = poly.leading()
    d = poly.degree()
    rows = [[ZERO] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = ONE
    for i in range(d):
        rows[i][d - 1] = -poly.coeffs[i] / lead
    return MatrixF(rows)


def elementary(n: int, i: int, j: int, factor: FieldElem) -> MatrixF:
    """Identity plus factor at (i, j), i != j"""
    rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    rows[i][j] = factor
    return MatrixF(rows)


def residue_matrix(m: MatrixF) -> MatrixQ:
    """Entrywise residue; every entry must lie in O"""
    return MatrixQ([[residue(x) for x in r] for r in m.rows])


# === DETERMINANT AND INVERSE ===

def det(m: Matrix):
    """Determinant by Bareiss fraction-free elimination with row pivoting"""
    a = [list(r) for r in m.rows]
    n = len(a)
    zero, one = m.zero, m.one
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == zero:
            swap = next((i for i in range(k + 1, n) if a[i][k] != zero), None)
            if swap is None:
                return zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            lead = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - lead * a[k][j]) / prev
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def inverse(m: Matrix):
    """Gauss-Jordan inverse over the coefficient field"""
    n = m.size
    zero, one = m.zero, m.one
    a = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(m.rows)]
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if a[i][col] != zero), None)
        if pivot_row is None:
            raise SingularMatrix(f"Matrix of size {n} is singular")
        a[col], a[pivot_row] = a[pivot_row], a[col]
        inv_pivot = one / a[col][col]
        a[col] = [x * inv_pivot for x in a[col]]
        for i in range(n):
            if i == col or a[i][col] == zero:
                continue
            factor = a[i][col]
            a[i] = [x - factor * y for x, y in zip(a[i], a[col])]
    return type(m)([r[n:] for r in a])


# === CHARACTERISTIC POLYNOMIAL AND RESULTANT ===

def _charpoly_coeffs(m: Matrix) -> list:
    """Faddeev-LeVerrier; characteristic zero so division by k is exact"""
    n = m.size
    coeffs = [m.zero] * (n + 1)
    coeffs[n] = m.one
    aux = type(m).zeros(n)
    ident = type(m).identity(n)
    for k in range(1, n + 1):
        aux = m * aux + ident * coeffs[n - k + 1]
        coeffs[n - k] = -(m * aux).trace() / k
    return coeffs


def charpoly(m: Matrix):
    """
    Monic det(λI - m)

    Returns:
        PolyF for a MatrixF, RationalPoly for a MatrixQ
    """
    coeffs = _charpoly_coeffs(m)
    if isinstance(m, MatrixQ):
        return RationalPoly(coeffs)
    return PolyF(coeffs)


def sylvester(p: PolyF, q: PolyF) -> MatrixF:
    dp, dq = p.degree(), q.degree()
    size = dp + dq
    rows = []
    for i in range(dq):
        row = [ZERO] * size
        for k, c in enumerate(reversed(p.coeffs)):
            row[i + k] = c
        rows.append(row)
    for i in range(dp):
        row = [ZERO] * size
        for k, c in enumerate(reversed(q.coeffs)):
            row[i + k] = c
        rows.append(row)
    return MatrixF(rows)


def resultant(p: PolyF, q: PolyF) -> FieldElem:
    """Determinant of the Sylvester matrix of p and q"""
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("Resultant of a zero polynomial")
    if p.degree() == 0 and q.degree() == 0:
        return ONE
    return det(sylvester(p, q))


def is_squarefree(p: PolyF) -> bool:
    if p.degree() < 1:
        return True
    return not resultant(p, p.derivative()).is_zero()


# === INVARIANT FACTORS OVER Q[λ] ===

def _smith_diagonal(a: List[List[RationalPoly]]) -> List[RationalPoly]:
    """Diagonal of the Smith form of a square matrix over Q[λ]"""
    n = len(a)
    for k in range(n):
        while True:
            entries = [(a[i][j].degree(), i, j) for i in range(k, n) for j in range(k, n)
                       if not a[i][j].is_zero()]
            if not entries:
                return [a[i][i].monic() for i in range(k)] + [ZERO_POLY] * (n - k)
            _, pi, pj = min(entries)
            a[k], a[pi] = a[pi], a[k]
            for r in a:
                r[k], r[pj] = r[pj], r[k]
            pivot = a[k][k]
            dirty = False
            for i in range(k + 1, n):
                if a[i][k].is_zero():
                    continue
                q, r = a[i][k].divmod(pivot)
                a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                dirty = dirty or not r.is_zero()
            for j in range(k + 1, n):
                if a[k][j].is_zero():
                    continue
                q, r = a[k][j].divmod(pivot)
                for row in a:
                    row[j] = row[j] - q * row[k]
                dirty = dirty or not r.is_zero()
            if dirty:
                continue
            # pivot must divide the rest of the block before moving on
            offender = next(((i, j) for i in range(k + 1, n) for j in range(k + 1, n)
                             if not a[i][j].divmod(pivot)[1].is_zero()), None)
            if offender is None:
                break
            a[k] = [x + y for x, y in zip(a[k], a[offender[0]])]
    return [a[i][i].monic() for i in range(n)]


def invariant_factors(m: MatrixQ) -> List[RationalPoly]:
    """Nontrivial invariant factors d1 | d2 | ... of m, each monic"""
    lam = RationalPoly((0, 1))
    n = m.size
    a = [[(lam if i == j else ZERO_POLY) - RationalPoly((m[i, j],)) for j in range(n)]
         for i in range(n)]
    diagonal = _smith_diagonal(a)
    factors = sorted((d for d in diagonal if d.degree() >= 1), key=lambda d: d.degree())
    logger.debug(f"Invariant factor degrees: {[d.degree() for d in factors]}")
    return factors


def frobenius_form(m: MatrixQ) -> List[RationalPoly]:
    """Invariant factor list; equal lists iff conjugate over Q"""
    return invariant_factors(m)


def frobenius_matrix(m: MatrixQ) -> MatrixQ:
    """Block-companion representative of the conjugacy class of m"""
    n = m.size
    rows = [[Fraction(0)] * n for _ in range(n)]
    offset = 0
    for d in frobenius_form(m):
        k = d.degree()
        for i in range(1, k):
            rows[offset + i][offset + i - 1] = Fraction(1)
        for i in range(k):
            rows[offset + i][offset + k - 1] = -d.coefficient(i)
        offset += k
    return MatrixQ(rows)


def minpoly(m: MatrixQ) -> RationalPoly:
    factors = invariant_factors(m)
    return factors[-1] if factors else ONE_POLY


def is_cyclic(m: MatrixQ) -> bool:
    """Regular (cyclic) iff the minimal polynomial has degree n"""
    return minpoly(m).degree() == m.size
