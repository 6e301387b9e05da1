#!/usr/bin/env python3
"""
Exact arithmetic in Q and in the rational function field Q(ε)

Q(ε) is viewed inside the Laurent series field F = C((ε)). Elements are kept
as reduced fractions num/den of polynomials over Q with the lowest nonzero
coefficient of den equal to 1, so equality of elements is equality of their
stored forms. Valuation and residue are computed exactly from that form.
"""

import math
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

from ..errors import NegativeValuation

Rational = Fraction
Valuation = Union[int, float]
Scalar = Union[int, Fraction]

INFINITY = math.inf


def to_rational(value) -> Fraction:
    """Coerce int, Fraction or 'p/q' text to a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"Cannot use {type(value).__name__} as a rational number")


class RationalPoly:
    """
    Dense univariate polynomial over Q, lowest degree first

    Used both for polynomials in ε (the EpsPoly of the field layer) and for
    polynomials in λ over Q (minimal polynomials, invariant factors).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _trusted(cls, cs: list) -> "RationalPoly":
        obj = cls.__new__(cls)
        while cs and not cs[-1]:
            cs.pop()
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def monomial(cls, coeff: Scalar, degree: int) -> "RationalPoly":
        if degree < 0:
            raise ValueError(f"Negative exponent {degree} in a polynomial")
        return cls._trusted([Fraction(0)] * degree + [to_rational(coeff)])

    @classmethod
    def from_terms(cls, terms: Dict[int, Scalar]) -> "RationalPoly":
        if not terms:
            return cls()
        top = max(terms)
        cs = [Fraction(0)] * (top + 1)
        for k, c in terms.items():
            if k < 0:
                raise ValueError(f"Negative exponent {k} in a polynomial")
            cs[k] += to_rational(c)
        return cls._trusted(cs)

    # === STRUCTURE ===

    @property
    def terms(self) -> Dict[int, Fraction]:
        """Finite map exponent -> nonzero coefficient"""
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial"""
        return len(self.coeffs) - 1

    def lowdeg(self) -> Valuation:
        """Lowest exponent with a nonzero coefficient; +inf for zero"""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return INFINITY

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def lowest(self) -> Fraction:
        for c in self.coeffs:
            if c:
                return c
        return Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c) == 1

    # === ARITHMETIC ===

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for k, c in enumerate(b):
            cs[k] += c
        return RationalPoly._trusted(cs)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly._trusted([-c for c in self.coeffs])

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "RationalPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RationalPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        cs = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    cs[i + j] += a * b
        return RationalPoly._trusted(cs)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RationalPoly":
        result = RationalPoly((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: Scalar) -> "RationalPoly":
        factor = to_rational(factor)
        return RationalPoly._trusted([c * factor for c in self.coeffs])

    def shift(self, k: int) -> "RationalPoly":
        """Multiply by x^k; negative k divides and requires divisibility"""
        if k >= 0:
            return RationalPoly._trusted([Fraction(0)] * k + list(self.coeffs))
        if any(self.coeffs[:-k]):
            raise ValueError(f"Polynomial not divisible by x^{-k}")
        return RationalPoly._trusted(list(self.coeffs[-k:]))

    def divmod(self, other: "RationalPoly") -> Tuple["RationalPoly", "RationalPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree()
        lead = other.leading()
        if len(rem) - 1 < dq:
            return RationalPoly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c / lead
            quot[k - dq] = q
            for i, b in enumerate(other.coeffs):
                rem[k - dq + i] -= q * b
        return RationalPoly._trusted(quot), RationalPoly._trusted(rem[:dq])

    def exact_div(self, other: "RationalPoly") -> "RationalPoly":
        if other.is_monomial():
            return self.shift(-other.lowdeg()).scale(1 / other.lowest())
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("Inexact polynomial division")
        return q

    def monic(self) -> "RationalPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading())

    def derivative(self) -> "RationalPoly":
        return RationalPoly._trusted([k * c for k, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # === PROTOCOL ===

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPoly({[str(c) for c in self.coeffs]})"


EpsPoly = RationalPoly

ZERO_POLY = RationalPoly()
ONE_POLY = RationalPoly((1,))


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    """Monic gcd over Q; gcd(0, 0) = 0"""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_monomial() or b.is_monomial():
        return RationalPoly.monomial(1, min(a.lowdeg(), b.lowdeg()))
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r.monic()
    return a.monic()


def _common_factor(num: RationalPoly, den: RationalPoly) -> RationalPoly:
    if den.degree() == 0:
        return ONE_POLY
    return poly_gcd(num, den)


class FieldElem:
    """
    Element num/den of Q(ε) in canonical form

    Invariants: den != 0, gcd(num, den) = 1, the lowest nonzero coefficient of
    den is 1, and zero is stored as 0/1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = ONE_POLY if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("FieldElem with zero denominator")
        self.num, self.den = _reduce(num, den)
        self._hash = None

    @classmethod
    def _canonical(cls, num: RationalPoly, den: RationalPoly) -> "FieldElem":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def constant(cls, value: Scalar) -> "FieldElem":
        value = to_rational(value)
        return cls._canonical(RationalPoly._trusted([value]), ONE_POLY)

    @classmethod
    def eps_power(cls, k: int, coeff: Scalar = 1) -> "FieldElem":
        """coeff·ε^k for any integer k"""
        coeff = to_rational(coeff)
        if not coeff:
            return ZERO
        if k >= 0:
            return cls._canonical(RationalPoly.monomial(coeff, k), ONE_POLY)
        return cls._canonical(RationalPoly._trusted([coeff]), RationalPoly.monomial(1, -k))

    @classmethod
    def from_laurent(cls, terms: Dict[int, Scalar]) -> "FieldElem":
        """Laurent polynomial Σ c_k ε^k, negative k allowed"""
        terms = {k: to_rational(c) for k, c in terms.items() if c}
        if not terms:
            return ZERO
        low = min(terms)
        if low >= 0:
            return cls(RationalPoly.from_terms(terms))
        shifted = RationalPoly.from_terms({k - low: c for k, c in terms.items()})
        return cls(shifted, RationalPoly.monomial(1, -low))

    # === VALUATION ===

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def valuation(self) -> Valuation:
        if self.num.is_zero():
            return INFINITY
        return self.num.lowdeg() - self.den.lowdeg()

    # === ARITHMETIC ===

    def __add__(self, other) -> "FieldElem":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return FieldElem(self.num + other.num, self.den)
        return FieldElem(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        return FieldElem._canonical(-self.num, self.den)

    def __sub__(self, other) -> "FieldElem":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "FieldElem":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "FieldElem":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if other.den.degree() == 0 and other.num.degree() == 0:
            return FieldElem._canonical(self.num.scale(other.num.coeffs[0]), self.den)
        if self.den.degree() == 0 and self.num.degree() == 0:
            return FieldElem._canonical(other.num.scale(self.num.coeffs[0]), other.den)
        return FieldElem(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.num.is_zero():
            raise ZeroDivisionError("Inverse of zero in Q(ε)")
        return FieldElem(self.den, self.num)

    def __truediv__(self, other) -> "FieldElem":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "FieldElem":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElem(self.num ** exponent, self.den ** exponent)

    # === PROTOCOL ===

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num.coeffs, self.den.coeffs))
        return self._hash

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __str__(self) -> str:
        from .codec import format_elem
        return format_elem(self)

    def __repr__(self) -> str:
        return f"FieldElem('{self}')"


def _as_poly(value) -> RationalPoly:
    if isinstance(value, RationalPoly):
        return value
    return RationalPoly((to_rational(value),))


def _reduce(num: RationalPoly, den: RationalPoly) -> Tuple[RationalPoly, RationalPoly]:
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    g = _common_factor(num, den)
    if g.degree() > 0:
        num, den = num.exact_div(g), den.exact_div(g)
    low = den.lowest()
    if low != 1:
        num, den = num.scale(1 / low), den.scale(1 / low)
    return num, den


def _coerce(value):
    if isinstance(value, FieldElem):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return FieldElem.constant(value)
    return NotImplemented


ZERO = FieldElem._canonical(ZERO_POLY, ONE_POLY)
ONE = FieldElem._canonical(ONE_POLY, ONE_POLY)
EPS = FieldElem._canonical(RationalPoly((0, 1)), ONE_POLY)


# === VALUATION AND RESIDUE ===

def val(a: FieldElem) -> Valuation:
    """ε-adic valuation; +inf for zero"""
    return a.valuation()


def in_O(a: FieldElem) -> bool:
    return a.valuation() >= 0


def is_unit(a: FieldElem) -> bool:
    """a ∈ O^×"""
    return a.valuation() == 0


def residue(a: FieldElem) -> Fraction:
    """Image of a ∈ O under O -> Q (the ε^0 coefficient)"""
    v = a.valuation()
    if v < 0:
        raise NegativeValuation(f"Residue of {a} with valuation {v}")
    if v > 0:
        return Fraction(0)
    # val 0 on a reduced fraction forces num(0) != 0 and den(0) = 1
    return a.num.coefficient(0) / a.den.coefficient(0)


def laurent_coefficients(a: FieldElem, upto: int) -> Dict[int, Fraction]:
    """
    Exact Laurent coefficients of a for exponents val(a) <= k < upto

    Args:
        a: element of Q(ε)
        upto: exclusive upper exponent bound

    Returns:
        Map exponent -> nonzero coefficient
    """
    if a.is_zero():
        return {}
    num_low, den_low = a.num.lowdeg(), a.den.lowdeg()
    start = num_low - den_low
    count = upto - start
    if count <= 0:
        return {}
    num = a.num.coeffs[num_low:]
    den = a.den.coeffs[den_low:]
    # den[0] = 1 by normalization, so 1/den is a power series with integer recursion
    inv = [Fraction(1)]
    for m in range(1, count):
        acc = Fraction(0)
        for i in range(1, min(m, len(den) - 1) + 1):
            acc -= den[i] * inv[m - i]
        inv.append(acc)
    series = {}
    for m in range(count):
        acc = Fraction(0)
        for i in range(min(m, len(num) - 1) + 1):
            acc += num[i] * inv[m - i]
        if acc:
            series[start + m] = acc
    return series


def laurent_truncate(a: FieldElem, upto: int) -> FieldElem:
    """Laurent polynomial made of the terms of a with exponent < upto"""
    return FieldElem.from_laurent(laurent_coefficients(a, upto))
