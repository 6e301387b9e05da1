#!/usr/bin/env python3
"""
Theorem Commands Handler
Handles theorem verification and the SL(2) golden grid
"""

from .base import BaseHandler
from ...utils import Display


class TheoremHandler(BaseHandler):
    """
    Handles verification commands

    Responsibilities:
    - verify-theorem: certificates for every generated fiber point plus a summary
    - sl2-golden: the closed-form comparison table

    Violations are raised, never reported as a plain failure.
    """

    commands = ("verify-theorem", "sl2-golden")

    def handle(self, config) -> bool:
        if config.command == "verify-theorem":
            return self._handle_verify(config)
        return self._handle_golden(config)

    def _handle_verify(self, config) -> bool:
        Display.progress(f"Verifying with {config.parallel} worker(s)")
        records = self.emit(config, self.pipeline.verify_theorem(), keep=("summary", "orbit_probe"))
        for summary in (r for r in records if r["kind"] == "summary"):
            Display.success(f"{summary['fiber_points']} points certified: "
                            f"{summary['regular']} regular, {summary['non_regular']} non-regular, "
                            f"{summary['violations']} violations")
        probes = [r for r in records if r["kind"] == "orbit_probe"]
        if probes:
            related = sum(1 for r in probes if r["status"] == "related")
            Display.info(f"Orbit probe related {related} of {len(probes)} regular points to the base point")
        return True

    def _handle_golden(self, config) -> bool:
        Display.header("SL(2) closed-form grid")
        records = self.emit(config, self.pipeline.sl2_golden(), keep=("golden_summary",))
        summary = records[-1]
        Display.success(f"Golden grid: {summary['rows']} rows, {summary['mismatches']} mismatches")
        return True
