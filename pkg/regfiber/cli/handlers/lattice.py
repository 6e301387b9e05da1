#!/usr/bin/env python3
"""
Lattice Commands Handler
Handles retractions and single-point checks
"""

from .base import BaseHandler
from ...utils import Display


class LatticeHandler(BaseHandler):
    """
    Handles point-level commands

    Responsibilities:
    - retract: x_P and ν_M(x_P) for the requested parabolics
    - check-point: membership, residue class and regularity
    """

    commands = ("retract", "check-point")

    def handle(self, config) -> bool:
        if config.command == "retract":
            return self._handle_retract(config)
        return self._handle_check_point(config)

    def _handle_retract(self, config) -> bool:
        records = self.emit(config, self.pipeline.retract(), keep=("retraction",))
        Display.success(f"Retracted the point to {len(records)} parabolics")
        return True

    def _handle_check_point(self, config) -> bool:
        records = self.emit(config, self.pipeline.check_point(), keep=("point_check",))
        for record in records:
            Display.key_value_table({
                "in fiber": record["in_fiber"],
                "regular": record["regular"],
                "nu_G": record["nu_G"],
            })
        return True
