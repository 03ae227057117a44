"""
Phase 1: Polynomial Expression Parser

Recursive-descent parser for the textual polynomial syntax used by problem
files and tests:

    expr   := term (('+' | '-') term)*
    term   := unary (['*'] unary)*        implicit multiplication allowed
    unary  := ('+' | '-') unary | power
    power  := atom ['^' INTEGER]
    atom   := INTEGER ['/' INTEGER] | NAME | '(' expr ')'

Names must be declared; the declaration order is the variable order.

Usage:
    from phase_1.parser import parse_polynomial

    f = parse_polynomial("y*w^2 + x*w - y*z^2", ["x", "y", "z", "w"])
"""

import re
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from phase_1.polynomial import Polynomial, PolynomialError, default_names

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


class PolynomialSyntaxError(PolynomialError):
    """Malformed polynomial text. `column` is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.reason = message
        self.column = column


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.names = list(names)
        self.index = {name: i for i, name in enumerate(self.names)}
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str) -> List[Tuple[str, str, int]]:
        tokens = []
        at = 0
        while at < len(text):
            if text[at:].strip() == "":
                break
            match = _TOKEN.match(text, at)
            if not match:
                column = at + len(text[at:]) - len(text[at:].lstrip()) + 1
                raise PolynomialSyntaxError(f"unexpected character {text[column - 1]!r}", column)
            kind = match.lastgroup
            tokens.append((kind, match.group(kind), match.start(kind) + 1))
            at = match.end()
        tokens.append(("end", "", len(text) + 1))
        return tokens

    # ── token helpers ──

    def peek(self) -> Tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> Tuple[str, str, int]:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def accept(self, op: str) -> bool:
        kind, value, _ = self.peek()
        if kind == "op" and value == op:
            self.pos += 1
            return True
        return False

    def starts_atom(self) -> bool:
        kind, value, _ = self.peek()
        return kind in ("num", "name") or (kind == "op" and value == "(")

    # ── grammar ──

    def parse(self) -> Polynomial:
        result = self.expr()
        kind, value, column = self.peek()
        if kind != "end":
            raise PolynomialSyntaxError(f"unexpected {value!r}", column)
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        result = self.unary()
        while True:
            if self.accept("*"):
                result = result * self.unary()
            elif self.starts_atom():
                result = result * self.unary()
            else:
                return result

    def unary(self) -> Polynomial:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.accept("^"):
            kind, value, column = self.take()
            if kind != "num":
                raise PolynomialSyntaxError("exponent must be a non-negative integer", column)
            return base ** int(value)
        return base

    def atom(self) -> Polynomial:
        kind, value, column = self.take()
        nvars = len(self.names)
        if kind == "num":
            number = Fraction(int(value))
            if self.accept("/"):
                dkind, dvalue, dcolumn = self.take()
                if dkind != "num":
                    raise PolynomialSyntaxError("expected denominator", dcolumn)
                if int(dvalue) == 0:
                    raise PolynomialSyntaxError("zero denominator", dcolumn)
                number = number / int(dvalue)
            return Polynomial.constant(nvars, number)
        if kind == "name":
            if value not in self.index:
                raise PolynomialSyntaxError(f"undeclared variable {value!r}", column)
            return Polynomial.variable(nvars, self.index[value])
        if kind == "op" and value == "(":
            inner = self.expr()
            if not self.accept(")"):
                raise PolynomialSyntaxError("expected ')'", self.peek()[2])
            return inner
        if kind == "end":
            raise PolynomialSyntaxError("unexpected end of expression", column)
        raise PolynomialSyntaxError(f"unexpected {value!r}", column)


def parse_polynomial(text: str, names: Optional[Sequence[str]] = None, nvars: Optional[int] = None) -> Polynomial:
    """Parse text over the given variable names (default x, y, z, w)."""
    if names is None:
        names = default_names(nvars if nvars is not None else 4)
    if len(set(names)) != len(names):
        raise PolynomialError(f"duplicate variable names in {list(names)}")
    return _Parser(text, names).parse()


def format_polynomial(f: Polynomial, names: Optional[Sequence[str]] = None) -> str:
    return f.format(names)
