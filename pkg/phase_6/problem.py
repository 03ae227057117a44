"""
Phase 6: Problem Files

Text format:

    # the unit circle
    vars: x, y
    x^2 + y^2 - 1        # one polynomial per line
    point: 0, 1/2        # optional, used by valuation and eval

The first non-comment line declares the variable order. Every later
nonempty line is a polynomial over those variables, except `point:` lines.

Usage:
    from phase_6.problem import parse_problem

    problem = parse_problem(open("circle.txt").read())
    problem.polynomials[0]
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from phase_1.parser import PolynomialSyntaxError, format_polynomial, parse_polynomial
from phase_1.polynomial import Polynomial

logger = logging.getLogger(__name__)

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")
_RATIONAL = re.compile(r"\s*-?\d+(/\d+)?\s*$")


class ProblemSyntaxError(ValueError):
    """Malformed problem file. `line` and `column` are 1-based."""

    def __init__(self, reason: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {reason}")
        self.reason = reason
        self.line = line
        self.column = column


@dataclass
class ProblemFile:
    """
    Attributes:
        variables:   Variable names in projection order (last = main variable).
        polynomials: Input polynomials over `variables`.
        point:       Optional point from a `point:` line.
    """
    variables: List[str]
    polynomials: List[Polynomial] = field(default_factory=list)
    point: Optional[Tuple[Fraction, ...]] = None

    @property
    def nvars(self) -> int:
        return len(self.variables)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def _split_list(body: str, offset: int) -> List[Tuple[str, int]]:
    """Comma-separated items with their 1-based columns."""
    items = []
    at = offset
    for raw in body.split(","):
        lead = len(raw) - len(raw.lstrip())
        items.append((raw.strip(), at + lead + 1))
        at += len(raw) + 1
    return items


def _parse_header(line: str, number: int) -> List[str]:
    head, sep, body = line.partition(":")
    if not sep or head.strip() != "vars":
        raise ProblemSyntaxError("expected 'vars:' header", number, 1)
    names: List[str] = []
    for name, column in _split_list(body, len(head) + 1):
        if not _NAME.match(name):
            raise ProblemSyntaxError(f"invalid variable name {name!r}", number, column)
        if name in names:
            raise ProblemSyntaxError(f"duplicate variable {name!r}", number, column)
        names.append(name)
    return names


def parse_point(text: str, line: int = 1, offset: int = 0) -> Tuple[Fraction, ...]:
    """Comma-separated rationals such as "0, -1/2"."""
    if not text.strip():
        return ()
    values = []
    for item, column in _split_list(text, offset):
        if not _RATIONAL.match(item):
            raise ProblemSyntaxError(f"invalid coordinate {item!r}", line, column)
        values.append(Fraction(item))
    return tuple(values)


def parse_problem(text: str) -> ProblemFile:
    problem: Optional[ProblemFile] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        if problem is None:
            problem = ProblemFile(variables=_parse_header(line, number))
            continue
        head, sep, body = line.partition(":")
        if sep:
            if head.strip() != "point":
                raise ProblemSyntaxError(f"unknown directive {head.strip()!r}", number, 1)
            problem.point = parse_point(body, number, len(head) + 1)
            continue
        try:
            poly = parse_polynomial(line, problem.variables)
        except PolynomialSyntaxError as e:
            raise ProblemSyntaxError(e.reason, number, e.column) from e
        if poly.is_zero():
            raise ProblemSyntaxError("zero polynomial", number, len(line) - len(line.lstrip()) + 1)
        problem.polynomials.append(poly)

    if problem is None:
        raise ProblemSyntaxError("expected 'vars:' header", 1, 1)
    if not problem.polynomials:
        raise ProblemSyntaxError("empty polynomial list", max(1, len(text.splitlines())), 1)
    logger.debug(f"Parsed problem with {len(problem.polynomials)} polynomials in {problem.nvars} variables")
    return problem


def format_problem(problem: ProblemFile) -> str:
    lines = ["vars: " + ", ".join(problem.variables)]
    lines.extend(format_polynomial(f, problem.variables) for f in problem.polynomials)
    if problem.point is not None:
        lines.append("point: " + ", ".join(str(v) for v in problem.point))
    return "\n".join(lines) + "\n"
