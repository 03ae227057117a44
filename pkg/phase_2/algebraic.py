"""
Phase 2: Real Algebraic Numbers

A real algebraic number is a squarefree integer polynomial together with an
interval containing exactly one of its roots. Rational numbers use a point
interval and a linear polynomial; every number whose defining polynomial
has a rational root in its interval is turned into that rational when it is
built, so "point interval" and "rational" mean the same thing.

The isolation interval never changes after construction (it is what gets
serialized). Comparisons and sign tests refine a separate cached
approximation in place; the cache is guarded by a lock so sample points can
be shared between lifting workers.

Usage:
    from phase_2.algebraic import RealAlgebraicNumber, real_roots

    sqrt2 = real_roots(parse_polynomial("y^2 - 2", ["y"]))[1][0]
    sqrt2.approximate(Fraction(1, 1000))          # close to 1.414
    sqrt2 > RealAlgebraicNumber.from_rational(1)  # True
"""

import logging
import threading
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, List, Optional, Sequence, Tuple, Union

from phase_1.basis import gcd
from phase_1.polynomial import Polynomial, PolynomialError
from phase_2.interval import Interval
from phase_2.roots import dup_eval, dup_sign, isolate_roots, refine_interval, _refine_step

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]

# Largest leading coefficient for which rational roots are searched exhaustively.
RATIONAL_SEARCH_LIMIT = 10 ** 7


def _divisors(n: int) -> List[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_root_in(coeffs: Sequence[Fraction], lo: Fraction, hi: Fraction) -> Optional[Fraction]:
    """
    The rational root of an integer squarefree polynomial in (lo, hi), if any.

    After refining to width 1/(2|lc|) at most one fraction p/q with q | lc
    fits inside, so testing round(mid * q) / q for each divisor q is complete.
    """
    if lo == hi:
        return lo if dup_eval(coeffs, lo) == 0 else None
    lead = abs(int(coeffs[-1]))
    if lead > RATIONAL_SEARCH_LIMIT:
        logger.warning(f"Leading coefficient {lead} too large for rational root search")
        return None
    lo, hi = refine_interval(coeffs, lo, hi, Fraction(1, 2 * lead))
    if lo == hi:
        return lo
    mid = (lo + hi) / 2
    for q in _divisors(lead):
        candidate = Fraction(round(mid * q), q)
        if lo < candidate < hi and dup_eval(coeffs, candidate) == 0:
            return candidate
    return None


class RealAlgebraicNumber:
    """
    Exact real algebraic number.

    Attributes:
        poly:      Defining polynomial, 1 variable, squarefree, integer primitive,
                   positive leading coefficient.
        isolation: Isolating interval fixed at construction.
    """

    def __init__(self, poly: Polynomial, isolation: Interval):
        if poly.nvars != 1:
            raise PolynomialError("defining polynomial must have exactly one variable")
        if poly.degree(0) < 1:
            raise PolynomialError("defining polynomial must have positive degree")
        poly = poly.normalize()
        coeffs = poly.univariate_coefficients(0)
        lo, hi = isolation.lo, isolation.hi

        if lo == hi:
            if dup_eval(coeffs, lo) != 0:
                raise ValueError(f"{lo} is not a root of {poly}")
            value: Optional[Fraction] = lo
        elif len(coeffs) == 2:
            value = -coeffs[0] / coeffs[1]
            if not lo < value < hi:
                raise ValueError(f"root of {poly} is outside {isolation}")
        else:
            if dup_sign(coeffs, lo) * dup_sign(coeffs, hi) >= 0:
                raise ValueError(f"{isolation} does not isolate a root of {poly}")
            value = rational_root_in(coeffs, lo, hi)

        if value is not None:
            self._set_rational(value)
        else:
            self.poly = poly
            self.isolation = isolation
            self._coeffs = coeffs
            self._approx = isolation
        self._lock = threading.Lock()

    def _set_rational(self, value: Fraction) -> None:
        self.poly = Polynomial.from_univariate([-value.numerator, value.denominator])
        self.isolation = Interval.point(value)
        self._coeffs = self.poly.univariate_coefficients(0)
        self._approx = self.isolation

    # ── constructors ──

    @classmethod
    def from_rational(cls, value: Number) -> "RealAlgebraicNumber":
        value = Fraction(value)
        return cls(Polynomial.from_univariate([-value.numerator, value.denominator]), Interval.point(value))

    @classmethod
    def coerce(cls, value: Union["RealAlgebraicNumber", Number]) -> "RealAlgebraicNumber":
        if isinstance(value, RealAlgebraicNumber):
            return value
        return cls.from_rational(value)

    # ── queries ──

    @property
    def is_rational(self) -> bool:
        return self.isolation.is_point()

    @property
    def value(self) -> Fraction:
        """Exact value of a rational number."""
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.isolation.lo

    @property
    def degree(self) -> int:
        return self.poly.degree(0)

    @property
    def interval(self) -> Interval:
        """Current cached enclosure (never wider than the isolation)."""
        with self._lock:
            return self._approx

    def bisect(self) -> Interval:
        """Halve the cached enclosure once and return it."""
        with self._lock:
            if not self._approx.is_point():
                lo, hi = _refine_step(self._coeffs, self._approx.lo, self._approx.hi)
                self._approx = Interval(lo, hi)
            return self._approx

    def enclosure(self, width: Fraction) -> Interval:
        """Cached enclosure refined to at most `width`."""
        current = self.interval
        while current.width > width:
            current = self.bisect()
        return current

    def refine(self, width: Fraction) -> "RealAlgebraicNumber":
        """Same number with an isolation interval of width <= `width`."""
        if self.is_rational:
            return self
        enclosure = self.enclosure(width)
        refined = object.__new__(RealAlgebraicNumber)
        refined.poly = self.poly
        refined.isolation = enclosure
        refined._coeffs = self._coeffs
        refined._approx = enclosure
        refined._lock = threading.Lock()
        return refined

    def approximate(self, width: Fraction = Fraction(1, 2 ** 20)) -> Fraction:
        if self.is_rational:
            return self.value
        return self.enclosure(width).midpoint

    def __float__(self) -> float:
        return float(self.approximate(Fraction(1, 2 ** 60)))

    # ── ordering ──

    def compare(self, other: Union["RealAlgebraicNumber", Number]) -> int:
        """-1, 0 or 1; exact."""
        other = RealAlgebraicNumber.coerce(other)
        if self.is_rational and other.is_rational:
            a, b = self.value, other.value
            return (a > b) - (a < b)
        common: Optional[Polynomial] = None
        if not self.is_rational and not other.is_rational:
            common = gcd(self.poly, other.poly)
            if common.degree(0) < 1:
                common = None
        while True:
            a, b = self.interval, other.interval
            if a.hi < b.lo:
                return -1
            if b.hi < a.lo:
                return 1
            if common is not None:
                # endpoints of the overlap are endpoints of one of the two
                # enclosures, so neither is a root of the common factor
                shared = a.intersect(b)
                coeffs = common.univariate_coefficients(0)
                if dup_sign(coeffs, shared.lo) * dup_sign(coeffs, shared.hi) < 0:
                    return 0
            self.bisect()
            other.bisect()

    def sign(self) -> int:
        return self.compare(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (RealAlgebraicNumber, int, Fraction)):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other) -> bool:
        return self.compare(other) >= 0

    __hash__ = None

    # ── serialization ──

    def to_dict(self) -> Dict[str, list]:
        coeffs = [int(c) for c in self._coeffs]
        return {"poly": coeffs, "interval": [str(self.isolation.lo), str(self.isolation.hi)]}

    @classmethod
    def from_dict(cls, data: Dict[str, list]) -> "RealAlgebraicNumber":
        poly = Polynomial.from_univariate(data["poly"])
        lo, hi = (Fraction(v) for v in data["interval"])
        return cls(poly, Interval(lo, hi))

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.value)
        return f"root of {self.poly.format(['t'])} in {self.isolation}"

    def __repr__(self) -> str:
        return f"RealAlgebraicNumber({self})"


# ── Root finding ────────────────────────────────────────────────────────────

def real_roots(f: Polynomial, var: Optional[int] = None) -> List[Tuple[RealAlgebraicNumber, int]]:
    """Real roots of a univariate polynomial as (number, multiplicity), increasing."""
    return [
        (RealAlgebraicNumber(root.factor, root.interval), root.multiplicity)
        for root in isolate_roots(f, var)
    ]


def sort_numbers(numbers: Sequence[RealAlgebraicNumber]) -> List[RealAlgebraicNumber]:
    return sorted(numbers, key=cmp_to_key(lambda a, b: a.compare(b)))


def merge_roots(roots: Sequence[Tuple[RealAlgebraicNumber, int]]) -> List[Tuple[RealAlgebraicNumber, int]]:
    """Sort roots from several polynomials and add multiplicities of equal ones."""
    ordered = sorted(roots, key=cmp_to_key(lambda a, b: a[0].compare(b[0])))
    merged: List[Tuple[RealAlgebraicNumber, int]] = []
    for number, multiplicity in ordered:
        if merged and merged[-1][0].compare(number) == 0:
            merged[-1] = (merged[-1][0], merged[-1][1] + multiplicity)
        else:
            merged.append((number, multiplicity))
    return merged
