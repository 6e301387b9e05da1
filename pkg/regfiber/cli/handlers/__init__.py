"""
regfiber CLI Handlers Package
One handler per command family
"""

from .base import BaseHandler
from .lattice import LatticeHandler
from .fiber import FiberHandler
from .theorem import TheoremHandler

__all__ = [
    'BaseHandler',
    'LatticeHandler',
    'FiberHandler',
    'TheoremHandler'
]
