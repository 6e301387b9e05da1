#!/usr/bin/env python3
"""
Torus-orbit probe on regular fiber points

For split diagonal u the regular locus of X^u is expected to be a single
A(F)-orbit. The probe looks for a = diag(a_i·ε^{k_i}) with a·x = y inside a
finite box and reports what it found; a miss is never read as a refutation.

The exponent vector is forced: retractions are A(F)-equivariant, so
k = ν_A(y_B) - ν_A(x_B) for any Borel B. Only the unit coefficients are
searched, with a_1 = 1 since scalars in GL(n, O) act trivially.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..algebra.exactfield import FieldElem, to_rational
from ..algebra.polylinalg import MatrixF
from ..lattice.grassmann import GrassPoint, act, levi_nu, sort_key
from ..lattice.iwasawa import retract
from ..lattice.rootcomb import borel
from ..lattice.springer import FiberDatum, is_regular_point

logger = logging.getLogger(__name__)

RELATED = "related"
NOT_FOUND = "not_found_in_window"


@dataclass(frozen=True)
class ProbeBox:
    """Bounds of the torus search"""

    exp_bound: int = 4
    coeff_set: Tuple[Fraction, ...] = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
                                       Fraction(1, 2), Fraction(-1, 2))

    def __post_init__(self):
        coeffs = tuple(to_rational(c) for c in self.coeff_set)
        object.__setattr__(self, "coeff_set", tuple(c for c in coeffs if c))


@dataclass(frozen=True)
class ProbeRecord:
    source: GrassPoint
    target: GrassPoint
    status: str
    exponents: Optional[Tuple[int, ...]] = None
    coefficients: Optional[Tuple[Fraction, ...]] = None


def _torus_element(exponents: Sequence[int], coefficients: Sequence[Fraction]) -> MatrixF:
    return MatrixF.diagonal([FieldElem.eps_power(k, a) for k, a in zip(exponents, coefficients)])


def find_torus_element(x: GrassPoint, y: GrassPoint,
                       box: ProbeBox) -> Optional[Tuple[Tuple[int, ...], Tuple[Fraction, ...]]]:
    """(k, a) with diag(a_i ε^{k_i})·x = y inside the box, or None"""
    B = borel(range(1, x.n + 1))
    k = (levi_nu(retract(y, B)) - levi_nu(retract(x, B))).components
    if any(abs(e) > box.exp_bound for e in k):
        return None
    for tail in itertools.product(box.coeff_set, repeat=x.n - 1):
        coefficients = (Fraction(1),) + tail
        if act(_torus_element(k, coefficients), x) == y:
            return tuple(k), coefficients
    return None


def orbit_probe(u: FiberDatum, points: Sequence[GrassPoint],
                box: Optional[ProbeBox] = None) -> List[ProbeRecord]:
    """
    Relate every regular point to the first regular point

    Args:
        u: fiber datum with diagonal u
        points: fiber points; non-regular ones are skipped
        box: search bounds
    """
    box = box or ProbeBox()
    regular = sorted((x for x in points if is_regular_point(x, u)), key=sort_key)
    if not regular:
        return []
    base = regular[0]
    records = []
    for y in regular[1:]:
        found = find_torus_element(base, y, box)
        if found is None:
            records.append(ProbeRecord(base, y, NOT_FOUND))
        else:
            records.append(ProbeRecord(base, y, RELATED, *found))
    related = sum(1 for r in records if r.status == RELATED)
    logger.info(f"Orbit probe: {related}/{len(records)} regular points related to the base point")
    return records
