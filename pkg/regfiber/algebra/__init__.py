"""
Exact arithmetic over F = Q(ε) with the ε-adic valuation, and linear algebra on top of it
"""

from .exactfield import EPS, INFINITY, ONE, ZERO, FieldElem, RationalPoly, val
from .polylinalg import MatrixF, MatrixQ, PolyF, charpoly, det, inverse, resultant
from .codec import format_elem, parse_elem

__all__ = [
    "FieldElem", "RationalPoly", "ZERO", "ONE", "EPS", "INFINITY", "val",
    "MatrixF", "MatrixQ", "PolyF", "charpoly", "det", "inverse", "resultant",
    "format_elem", "parse_elem",
]
