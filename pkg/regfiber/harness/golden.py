#!/usr/bin/env python3
"""
SL(2) closed forms for u = diag(c, -c) and x = [[1, 0], [t, 1]]·G(O)

With B the upper triangular Borel (order 1 < 2) and B̄ its opposite:
- x ∈ X^u iff val(ct) >= 0
- x regular iff val(ct) = 0, or val(c) = 0 and val(t) >= 0
- n(x, B, B̄) = max(0, -val(t))
- n(u, B, B̄) = val(2c) = val(c)
The report compares these against the general pipeline, row by row.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Sequence

from ..algebra.exactfield import INFINITY, FieldElem, ONE, ZERO, val
from ..algebra.polylinalg import MatrixF
from ..lattice.grassmann import canonicalize
from ..lattice.iwasawa import n_pair
from ..lattice.rootcomb import LeviDatum, borel
from ..lattice.springer import FiberDatum, in_fiber, is_regular_point
from .theorem import n_u_pair

logger = logging.getLogger(__name__)

UPPER = borel((1, 2))
LOWER = borel((2, 1))


@dataclass
class GoldenRow:
    c: FieldElem
    t: FieldElem
    member: bool
    regular: bool
    n_x: int
    n_u: int
    expected_member: bool
    expected_regular: bool
    expected_n_x: int
    expected_n_u: int

    @property
    def matches(self) -> bool:
        return (self.member == self.expected_member
                and self.regular == self.expected_regular
                and self.n_x == self.expected_n_x
                and self.n_u == self.expected_n_u)

    @property
    def theorem_form_holds(self) -> bool:
        """Membership iff n_x <= n_u and regularity iff n_x == n_u"""
        return (self.member == (self.n_x <= self.n_u)
                and self.regular == (self.n_x == self.n_u))


@dataclass
class GoldenReport:
    rows: List[GoldenRow] = field(default_factory=list)

    @property
    def mismatches(self) -> List[GoldenRow]:
        return [r for r in self.rows if not r.matches or not r.theorem_form_holds]


def sl2_fiber(c: FieldElem) -> FiberDatum:
    return FiberDatum.create(MatrixF.diagonal([c, -c]), LeviDatum.torus(2))


def sl2_point(t: FieldElem):
    return canonicalize(MatrixF([[ONE, ZERO], [t, ONE]]))


def expected_row(c: FieldElem, t: FieldElem) -> dict:
    vc, vt = val(c), val(t)
    vct = vc + vt
    member = vct >= 0
    return {
        "expected_member": member,
        "expected_regular": member and (vct == 0 or (vc == 0 and vt >= 0)),
        "expected_n_x": 0 if vt == INFINITY else max(0, -vt),
        "expected_n_u": int(vc),
    }


def sl2_golden(c_vals: Sequence[FieldElem], t_vals: Sequence[FieldElem]) -> GoldenReport:
    """
    Compare the pipeline with the closed forms on every (c, t)

    Raises:
        NotIntegralRSS: for c = 0 or val(c) < 0
    """
    report = GoldenReport()
    for c in c_vals:
        u = sl2_fiber(c)
        for t in t_vals:
            x = sl2_point(t)
            member = in_fiber(x, u)
            row = GoldenRow(
                c=c,
                t=t,
                member=member,
                regular=member and is_regular_point(x, u),
                n_x=n_pair(x, UPPER, LOWER),
                n_u=n_u_pair(u, UPPER, LOWER),
                **expected_row(c, t),
            )
            if not row.matches:
                logger.warning(f"Golden mismatch at c = {c}, t = {t}")
            report.rows.append(row)
    logger.info(f"Golden grid: {len(report.rows)} rows, {len(report.mismatches)} mismatches")
    return report


def default_grid():
    """c ∈ {ε^m : 0 <= m <= 3} ∪ {1 + ε}; t ∈ {a·ε^k : |k| <= 5, a ∈ {1, 2, 1/2}} ∪ {0}"""
    c_vals = [FieldElem.eps_power(m) for m in range(4)] + [ONE + FieldElem.eps_power(1)]
    t_vals = [FieldElem.eps_power(k, a) for k in range(-5, 6) for a in (1, 2, "1/2")] + [ZERO]
    return c_vals, t_vals
