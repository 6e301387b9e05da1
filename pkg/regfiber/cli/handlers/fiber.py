#!/usr/bin/env python3
"""
Fiber Commands Handler
Handles enumeration of affine Springer fiber points
"""

from .base import BaseHandler
from ...utils import Display


class FiberHandler(BaseHandler):
    """Streams deduplicated fiber points found in the enumeration window"""

    commands = ("enumerate-fiber",)

    def handle(self, config) -> bool:
        Display.progress("Sweeping the enumeration window")
        records = self.emit(config, self.pipeline.enumerate_fiber(), keep=("sweep_summary",))
        for summary in records:
            Display.success(f"{summary['fiber_points']} fiber points "
                            f"from {summary['candidates']} candidates")
        return True
