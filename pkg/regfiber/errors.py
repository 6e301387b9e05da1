#!/usr/bin/env python3
"""
regfiber exception hierarchy

Two families:
- InputError: the caller handed us something unusable (CLI exit status 1)
- InvariantViolation: a proved statement failed at runtime, which means a bug
  in this package (CLI exit status 2)
"""

from typing import Any, Dict, Optional


class RegfiberError(Exception):
    """Base class for every error raised by regfiber"""


# === INPUT ERRORS ===

class InputError(RegfiberError):
    """Invalid input; maps to exit status 1"""


class FieldSyntaxError(InputError):
    """Malformed field-element text"""

    def __init__(self, message: str, text: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}: {text!r}")
        self.text = text
        self.line = line
        self.column = column


class SchemaError(InputError):
    """JSON document does not match the declared schema"""


class SingularMatrix(InputError):
    """Matrix is not invertible over F"""


class NegativeValuation(InputError):
    """Residue requested for an element outside O"""


class ZeroPolynomial(InputError):
    """Operation undefined on the zero polynomial"""


class LeviMismatch(InputError):
    """Parabolics compared across different Levi subgroups"""


class NotAdjacent(InputError):
    """Parabolics are not adjacent in P(M)"""


class RootNotInNNbar(InputError):
    """Root does not lie in N ∩ N̄' for the given pair"""


class NotInFiber(InputError):
    """Point does not lie in the affine Springer fiber"""


class NotIntegralRSS(InputError):
    """Element fails the integral regular semisimple requirements"""


class CoprimalityViolation(InputError):
    """Block characteristic polynomials share a root"""


class PrecisionExhausted(InputError):
    """Puiseux expansions could not separate the roots at the configured depth"""


class NotDiagonal(InputError):
    """Identity needs u diagonal in the standard basis"""


# === INVARIANT VIOLATIONS ===

class InvariantViolation(RegfiberError):
    """A proved statement failed; maps to exit status 2"""


class ProportionalityViolation(InvariantViolation):
    """ν-difference is not a non-negative multiple of β"""


class FiberRetractViolation(InvariantViolation):
    """Retracted point left the Levi fiber"""


class TheoremViolation(InvariantViolation):
    """Part (a) or the part (b) biconditional failed on a point"""

    def __init__(self, message: str, certificate: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.certificate = certificate
