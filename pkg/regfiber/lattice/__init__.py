"""
GL(n) root data, the affine Grassmannian, retractions and affine Springer fibers
"""

from .rootcomb import CoweightM, LeviDatum, ParabolicDatum, borel
from .grassmann import GrassPoint, LeviPoint, canonicalize
from .iwasawa import iwasawa_factor, n_pair, retract
from .springer import EnumWindow, FiberDatum, in_fiber, is_regular_point

__all__ = [
    "LeviDatum", "ParabolicDatum", "CoweightM", "borel",
    "GrassPoint", "LeviPoint", "canonicalize",
    "iwasawa_factor", "retract", "n_pair",
    "FiberDatum", "EnumWindow", "in_fiber", "is_regular_point",
]
