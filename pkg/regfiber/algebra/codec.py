#!/usr/bin/env python3
"""
Text form of field elements

Grammar (whitespace allowed between tokens):
    elem     := operand ["/" operand]
    operand  := "(" poly ")" | poly
    poly     := term ("+" term)*
    term     := rational ["*eps^" integer] | ["-" | "+"] "eps" ["^" integer]
    rational := ["-"] digits ["/" digits]

A bare p/q is always a rational literal, so quotients of polynomials are
written with parentheses: (1 + 1*eps^1)/(1 + -1*eps^1).
"""

from fractions import Fraction
from typing import Union

from .exactfield import FieldElem, RationalPoly, ZERO, to_rational
from ..errors import FieldSyntaxError


def format_rational(c: Fraction) -> str:
    return str(c)


def format_poly(p: RationalPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        parts.append(format_rational(c) if k == 0 else f"{format_rational(c)}*eps^{k}")
    return " + ".join(parts)


def format_elem(a: FieldElem) -> str:
    if a.den.degree() == 0:
        return format_poly(a.num)
    return f"({format_poly(a.num)})/({format_poly(a.den)})"


def parse_elem(text: Union[str, int]) -> FieldElem:
    """
    Parse the text form of an element of Q(ε)

    Raises:
        FieldSyntaxError: with 1-based line and column of the offending character
    """
    if isinstance(text, int) and not isinstance(text, bool):
        return FieldElem.constant(text)
    if not isinstance(text, str):
        raise FieldSyntaxError(f"Expected a string, got {type(text).__name__}", str(text), 1, 1)
    return _Parser(text).parse()


def parse_rational(text: Union[str, int]) -> Fraction:
    try:
        return to_rational(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise FieldSyntaxError("Malformed rational", str(text), 1, 1)


class _Parser:
    """Recursive-descent parser over a single string"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> FieldElem:
        self._skip()
        if self.pos >= len(self.text):
            self._fail("Empty field element")
        num = self._operand()
        self._skip()
        if self._peek() == "/":
            self.pos += 1
            self._skip()
            start = self.pos
            den = self._operand()
            if den.is_zero():
                self.pos = start
                self._fail("Zero denominator")
            num = num / den
        self._skip()
        if self.pos != len(self.text):
            self._fail(f"Unexpected character {self._peek()!r}")
        return num

    def _operand(self) -> FieldElem:
        if self._peek() == "(":
            self.pos += 1
            value = self._poly()
            self._skip()
            self._expect(")")
            return value
        return self._poly()

    def _poly(self) -> FieldElem:
        total = self._term()
        while True:
            self._skip()
            if self._peek() != "+":
                return total
            self.pos += 1
            total = total + self._term()

    def _term(self) -> FieldElem:
        self._skip()
        sign = 1
        if self._peek() in ("-", "+") and self.text.startswith("eps", self.pos + 1):
            sign = -1 if self._peek() == "-" else 1
            self.pos += 1
        if self.text.startswith("eps", self.pos):
            coeff = Fraction(sign)
        else:
            coeff = self._rational()
            self._skip()
            if self._peek() != "*":
                return FieldElem.constant(coeff)
            self.pos += 1
            self._skip()
            if not self.text.startswith("eps", self.pos):
                self._fail("Expected 'eps'")
        self.pos += 3
        self._skip()
        exponent = 1
        if self._peek() == "^":
            self.pos += 1
            self._skip()
            exponent = self._integer()
        return FieldElem.eps_power(exponent, coeff) if coeff else ZERO

    def _rational(self) -> Fraction:
        numerator = self._integer()
        if self._peek() == "/" and self._peek(1).isdigit():
            self.pos += 1
            start = self.pos
            denominator = self._digits()
            if denominator == 0:
                self.pos = start
                self._fail("Zero denominator in rational")
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def _integer(self) -> int:
        sign = 1
        if self._peek() in ("-", "+"):
            sign = -1 if self._peek() == "-" else 1
            self.pos += 1
        return sign * self._digits()

    def _digits(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self._fail("Expected digits")
        return int(self.text[start:self.pos])

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self, offset: int = 0) -> str:
        idx = self.pos + offset
        return self.text[idx] if idx < len(self.text) else ""

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            self._fail(f"Expected {char!r}")
        self.pos += 1

    def _fail(self, message: str) -> None:
        line = self.text.count("\n", 0, self.pos) + 1
        column = self.pos - (self.text.rfind("\n", 0, self.pos) + 1) + 1
        raise FieldSyntaxError(message, self.text, line, column)
