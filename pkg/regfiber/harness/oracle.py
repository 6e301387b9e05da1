#!/usr/bin/env python3
"""
Newton-Puiseux oracle for n(u, P, P')

Expands every root of the two swapped block characteristic polynomials as a
Puiseux series in ε (exact coefficients through sympy), then sums the
valuations of all cross differences. It shares no code path with the
resultant computation, which is the point of having it.

sympy is imported lazily so the library itself does not depend on it.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from ..algebra.polylinalg import PolyF
from ..errors import CoprimalityViolation, PrecisionExhausted
from ..lattice.rootcomb import ParabolicDatum, swapped_pair
from ..lattice.springer import FiberDatum

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 12
MAX_DEGREE = 4


@dataclass(frozen=True)
class PuiseuxRoot:
    """Leading terms of one root; exact means the series terminates"""

    terms: Tuple[Tuple[object, object], ...]  # (exponent, coefficient) in sympy numbers
    multiplicity: int
    exact: bool


def _sympy():
    try:
        import sympy
    except ImportError as e:  # pragma: no cover - depends on the environment
        raise ImportError("The Puiseux oracle needs sympy (pip install regfiber[test])") from e
    return sympy


def _to_expr(p: PolyF, x, y):
    """Polynomial in (x, y) with the denominators of the Q(ε) coefficients cleared"""
    sympy = _sympy()

    def poly(rp):
        return sum(sympy.Rational(c.numerator, c.denominator) * x ** k for k, c in enumerate(rp.coeffs))

    expr = sum(poly(c.num) / poly(c.den) * y ** j for j, c in enumerate(p.coeffs))
    numer, _ = sympy.fraction(sympy.together(expr))
    return sympy.expand(numer)


def _is_zero(c) -> bool:
    sympy = _sympy()
    return c == 0 or sympy.simplify(c) == 0


def _support(expr, x, y) -> Dict[Tuple[object, object], object]:
    """Map (y-exponent, x-exponent) -> coefficient, like monomials merged"""
    sympy = _sympy()
    support: Dict[Tuple[object, object], object] = {}
    for term in sympy.Add.make_args(sympy.expand(expr)):
        powers = term.as_powers_dict()
        ex, ey = powers.get(x, 0), powers.get(y, 0)
        coeff = sympy.simplify(term / (x ** ex * y ** ey))
        key = (sympy.nsimplify(ey), sympy.nsimplify(ex))
        support[key] = support.get(key, 0) + coeff
    return {k: c for k, c in support.items() if not _is_zero(c)}


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _lower_hull(points):
    lower = []
    for p in sorted(set(points)):
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    return lower


def _edges(support):
    """(γ, edge polynomial coefficients by relative y-degree) for each Newton polygon edge"""
    hull = _lower_hull(support.keys())
    for (j0, i0), (j1, i1) in zip(hull, hull[1:]):
        if j1 == j0:
            continue
        gamma = -(i1 - i0) / (j1 - j0)
        level = i0 + gamma * j0
        coeffs = {j - j0: c for (j, i), c in support.items() if i + gamma * j == level}
        yield gamma, coeffs


def _expand(f, x, y, floor, prefix, depth) -> List[PuiseuxRoot]:
    sympy = _sympy()
    support = _support(f, x, y)
    roots: List[PuiseuxRoot] = []
    jmin = min(j for j, _ in support)
    if jmin > 0:
        roots.append(PuiseuxRoot(tuple(prefix), int(jmin), True))
    for gamma, coeffs in _edges(support):
        if floor is not None and gamma <= floor:
            continue
        length = max(coeffs)
        if gamma > depth:
            roots.append(PuiseuxRoot(tuple(prefix), int(length), False))
            continue
        u = sympy.Symbol("u")
        edge_poly = sympy.Poly(sum(c * u ** k for k, c in coeffs.items()), u)
        found = sympy.roots(edge_poly)
        if sum(found.values()) < length:
            raise PrecisionExhausted(f"Could not solve the edge polynomial {edge_poly.as_expr()}")
        for c, _m in found.items():
            if _is_zero(c):
                continue
            shifted = sympy.expand(f.subs(y, y + c * x ** gamma))
            roots.extend(_expand(shifted, x, y, gamma, prefix + [(gamma, c)], depth))
    return roots


def puiseux_roots(p: PolyF, depth: int = DEFAULT_DEPTH) -> List[PuiseuxRoot]:
    """All roots of p as Puiseux series truncated past ε^depth"""
    if p.degree() > MAX_DEGREE:
        raise PrecisionExhausted(f"Degree {p.degree()} exceeds the oracle bound {MAX_DEGREE}")
    sympy = _sympy()
    x, y = sympy.symbols("eps lam")
    roots = _expand(_to_expr(p, x, y), x, y, None, [], depth)
    total = sum(r.multiplicity for r in roots)
    if total != p.degree():
        raise PrecisionExhausted(f"Found {total} of {p.degree()} roots")
    return roots


def _difference_valuation(r: PuiseuxRoot, s: PuiseuxRoot):
    a, b = dict(r.terms), dict(s.terms)
    for e in sorted(set(a) | set(b)):
        if not _is_zero(a.get(e, 0) - b.get(e, 0)):
            return e
    if r.exact and s.exact:
        raise CoprimalityViolation("The two blocks share an eigenvalue")
    raise PrecisionExhausted("Roots agree through the configured Puiseux depth")


def cross_valuation_sum(p: PolyF, q: PolyF, depth: int = DEFAULT_DEPTH) -> Fraction:
    """Σ val(r - s) over roots r of p and s of q, with multiplicity"""
    total = Fraction(0)
    proots, qroots = puiseux_roots(p, depth), puiseux_roots(q, depth)
    for r in proots:
        for s in qroots:
            v = _difference_valuation(r, s)
            total += r.multiplicity * s.multiplicity * Fraction(int(v.p), int(v.q))
    logger.debug(f"Puiseux cross sum over {len(proots)}x{len(qroots)} branches: {total}")
    return total


def puiseux_oracle_n_u(u: FiberDatum, P: ParabolicDatum, P2: ParabolicDatum,
                       depth: int = DEFAULT_DEPTH) -> Fraction:
    """
    Independent value of n(u, P, P') from Puiseux expansions

    Raises:
        NotAdjacent: if P, P2 are not adjacent
        PrecisionExhausted: if roots cannot be separated at this depth
    """
    b, b2 = swapped_pair(P, P2)
    return cross_valuation_sum(u.block_charpolys[b], u.block_charpolys[b2], depth)
