"""
Phase 2: Exact Rational Intervals

Closed intervals [lo, hi] with Fraction endpoints and the interval
arithmetic needed to enclose a polynomial's value over a box.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from phase_1.polynomial import Polynomial, PolynomialError

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Interval:
    """
    Closed rational interval.

    Attributes:
        lo: Lower endpoint.
        hi: Upper endpoint (lo <= hi; lo == hi encodes a single rational).
    """
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: Number) -> "Interval":
        return cls(Fraction(value), Fraction(value))

    # ── queries ──

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, value: Number) -> bool:
        return self.lo <= value <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self) -> Optional[int]:
        """Certified sign of every value in the interval, None when 0 is inside."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def magnitude(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        if not self.overlaps(other):
            raise ValueError(f"{self} and {other} are disjoint")
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    # ── arithmetic ──

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: "Interval") -> "Interval":
        return self + (-other)

    def __mul__(self, other: "Interval") -> "Interval":
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(products), max(products))

    def scale(self, factor: Number) -> "Interval":
        a, b = self.lo * factor, self.hi * factor
        return Interval(min(a, b), max(a, b))

    def __pow__(self, exponent: int) -> "Interval":
        if exponent == 0:
            return Interval.point(1)
        a, b = self.lo ** exponent, self.hi ** exponent
        if exponent % 2 or self.lo >= 0:
            return Interval(min(a, b), max(a, b))
        if self.hi <= 0:
            return Interval(b, a)
        return Interval(Fraction(0), max(a, b))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def evaluate_on_box(f: Polynomial, box: Sequence[Interval]) -> Interval:
    """Enclosure of f over a box, one interval per variable of f's ring."""
    if len(box) < f.nvars:
        raise PolynomialError(f"box has {len(box)} sides, ring has {f.nvars} variables")
    total = Interval.point(0)
    for mono, coeff in f.terms.items():
        term = Interval.point(coeff)
        for side, e in zip(box, mono):
            if e:
                term = term * side ** e
        total = total + term
    return total
