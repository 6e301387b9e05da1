"""
regfiber - regularity criterion for affine Springer fibers of GL(n)
Exact Q(ε) linear algebra, retractions and Arthur's integers n(x, P, P')
"""

__version__ = "1.0.0"

from .errors import InputError, InvariantViolation, RegfiberError
from .cli import main

__all__ = ["main", "RegfiberError", "InputError", "InvariantViolation", "__version__"]
