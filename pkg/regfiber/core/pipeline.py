#!/usr/bin/env python3
"""
Command pipeline

Turns a RunConfig into a stream of JSON-ready records. One method per
command; the CLI handlers only choose the method and write the stream.
"""

import logging
from typing import Any, Dict, Iterator, List, Optional

from ..algebra.codec import format_rational
from ..errors import InvariantViolation, SchemaError
from ..harness.golden import default_grid, sl2_golden
from ..harness.sampling import ProbeBox, orbit_probe
from ..harness.theorem import is_diagonal, n_u_table, verify_theorem
from ..lattice.grassmann import GrassPoint, levi_nu, nu_G
from ..lattice.iwasawa import n_from_nu, nu_table, retract
from ..lattice.rootcomb import (
    LeviDatum, ParabolicDatum, adjacent_pairs, all_parabolics, borel,
)
from ..lattice.springer import (
    EnumWindow, FiberDatum, SweepStats, in_fiber, is_regular_point, iter_fiber_points,
    residue_class, residue_invariants,
)
from ..utils.error_handler import ErrorHandler
from .config import RunConfig
from .schema import (
    certificate_to_json, coweight_to_json, elems_from_json, fiber_from_json, fiber_to_json,
    golden_row_to_json, levi_point_to_json, pair_table_to_json, parabolic_from_json,
    parabolic_to_json, point_from_json, point_to_json, poly_to_json, probe_record_to_json,
    rational_matrix_to_json, summary_to_json, versioned, window_from_json,
)

Record = Dict[str, Any]


class Pipeline:
    """
    Runs one configured command

    Inputs are decoded lazily so that each command only demands what it uses.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.logger = logging.getLogger(self.__class__.__name__)
        self.error_handler = ErrorHandler(self.logger)

    def run(self) -> Iterator[Record]:
        steps = {
            "retract": self.retract,
            "check-point": self.check_point,
            "enumerate-fiber": self.enumerate_fiber,
            "verify-theorem": self.verify_theorem,
            "sl2-golden": self.sl2_golden,
        }
        self.logger.info(f"Running {self.config.command}")
        return (versioned(record) for record in steps[self.config.command]())

    # === INPUT DECODING ===

    def _point(self) -> GrassPoint:
        if self.config.point is None:
            raise SchemaError(f"Command {self.config.command} needs a point")
        return point_from_json(self.config.point)

    def _fibers(self) -> List[FiberDatum]:
        fibers = [fiber_from_json(doc) for doc in self.config.fibers]
        if not fibers:
            raise SchemaError(f"Command {self.config.command} needs a fiber")
        return fibers

    def _window(self, n: int) -> EnumWindow:
        if self.config.window is None:
            raise SchemaError(f"Command {self.config.command} needs an enumeration window")
        doc = dict(self.config.window)
        if self.config.seed is not None:
            doc["seed"] = self.config.seed
        return window_from_json(doc, n)

    def _borel(self, n: int) -> ParabolicDatum:
        if self.config.borel is None:
            return borel(range(1, n + 1))
        B = parabolic_from_json(self.config.borel)
        if not B.is_borel() or B.n != n:
            raise SchemaError(f"{B} is not a Borel subgroup of GL({n})")
        return B

    def _parabolics(self, n: int) -> List[ParabolicDatum]:
        if self.config.parabolics is not None:
            return [parabolic_from_json(p) for p in self.config.parabolics]
        fibers = self.config.fibers
        levi = fiber_from_json(fibers[0]).levi if fibers else LeviDatum.torus(n)
        return all_parabolics(levi)

    # === COMMANDS ===

    def retract(self) -> Iterator[Record]:
        x = self._point()
        for P in self._parabolics(x.n):
            if P.n != x.n:
                raise SchemaError(f"Parabolic {P} does not match GL({x.n})")
            xp = retract(x, P)
            yield {
                "kind": "retraction",
                "parabolic": parabolic_to_json(P),
                "point": levi_point_to_json(xp),
                "nu": coweight_to_json(levi_nu(xp)),
            }

    def check_point(self) -> Iterator[Record]:
        x = self._point()
        for u in self._fibers():
            if u.n != x.n:
                raise SchemaError(f"Point of GL({x.n}) checked against a fiber of GL({u.n})")
            member = in_fiber(x, u)
            record = {
                "kind": "point_check",
                "fiber": fiber_to_json(u),
                "point": point_to_json(x),
                "in_fiber": member,
                "nu_G": nu_G(x),
                "residue": None,
                "invariant_factors": None,
                "regular": False,
                "n_x_table": self._n_x_table(x, u.levi),
                "n_u_table": pair_table_to_json(n_u_table(u)),
                "n_u_oracle": self._oracle_table(u),
            }
            if member:
                record["residue"] = rational_matrix_to_json(residue_class(x, u))
                record["invariant_factors"] = [poly_to_json(d) for d in residue_invariants(x, u)]
                record["regular"] = is_regular_point(x, u)
            yield record

    def _n_x_table(self, x: GrassPoint, levi: LeviDatum) -> Dict[str, int]:
        nus = nu_table(x, levi)
        return pair_table_to_json({(P, P2): n_from_nu(nus[P], nus[P2], P, P2)
                                   for P, P2 in adjacent_pairs(levi)})

    def _oracle_table(self, u: FiberDatum) -> Optional[Dict[str, str]]:
        """Puiseux cross-check of n(u, ·); None when sympy or the precision is unavailable"""
        def compute():
            from ..harness.oracle import puiseux_oracle_n_u
            return {f"{P}|{P2}": format_rational(puiseux_oracle_n_u(u, P, P2))
                    for P, P2 in adjacent_pairs(u.levi)}

        return self.error_handler.safe_execute(compute, None, "Puiseux oracle unavailable")

    def enumerate_fiber(self) -> Iterator[Record]:
        for u in self._fibers():
            stats = SweepStats()
            count = 0
            for x in iter_fiber_points(u, self._borel(u.n), self._window(u.n), stats):
                count += 1
                yield {
                    "kind": "fiber_point",
                    "point": point_to_json(x),
                    "nu_G": nu_G(x),
                    "regular": is_regular_point(x, u),
                }
            yield {
                "kind": "sweep_summary",
                "fiber": fiber_to_json(u),
                "candidates": stats.candidates,
                "fiber_points": count,
            }

    def verify_theorem(self) -> Iterator[Record]:
        for u in self._fibers():
            certs, summary = verify_theorem(
                u, self._window(u.n), self._borel(u.n),
                parallel=self.config.parallel, timing=self.config.timing,
            )
            for cert in certs:
                yield certificate_to_json(cert)
            record = summary_to_json(summary)
            record["fiber"] = fiber_to_json(u)
            yield record

            if self.config.probe is not None:
                yield from self._probe(u, [c.point for c in certs])

    def _probe(self, u: FiberDatum, points: List[GrassPoint]) -> Iterator[Record]:
        if not is_diagonal(u):
            self.logger.warning("Orbit probe skipped: u is not diagonal")
            return
        probe = self.config.probe
        box = ProbeBox(
            exp_bound=int(probe.get("exp_bound", ProbeBox.exp_bound)),
            coeff_set=tuple(probe["coeff_set"]) if "coeff_set" in probe else ProbeBox().coeff_set,
        )
        for record in orbit_probe(u, points, box):
            yield probe_record_to_json(record)

    def sl2_golden(self) -> Iterator[Record]:
        c_vals, t_vals = default_grid()
        if self.config.c_values is not None:
            c_vals = elems_from_json(self.config.c_values, "c_values")
        if self.config.t_values is not None:
            t_vals = elems_from_json(self.config.t_values, "t_values")
        report = sl2_golden(c_vals, t_vals)
        for row in report.rows:
            yield golden_row_to_json(row)
        yield {"kind": "golden_summary", "rows": len(report.rows), "mismatches": len(report.mismatches)}
        if report.mismatches:
            self.logger.error(f"{len(report.mismatches)} golden rows disagree with the closed forms")
            raise InvariantViolation(f"{len(report.mismatches)} golden rows disagree with the closed forms")
