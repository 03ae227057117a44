"""
Phase 4: Lazard Valuation and Lazard Evaluation

The valuation of f at a point alpha is the lexicographically least exponent
tuple v with a nonzero coefficient in the expansion of f about alpha. It is
computed one coordinate at a time: at level i, v_i is the order of vanishing
of the current polynomial in x_i at alpha_i, and the current polynomial is
replaced by its Taylor coefficient of that order evaluated at alpha_i.
Stopping one coordinate early gives the Lazard evaluation: a nonzero
univariate residual in the last variable plus the (n - 1)-tuple of orders.

Points are Towers (phase_2), so every operation works at algebraic points;
plain sequences of rationals are accepted and wrapped.

Usage:
    from phase_4.valuation import lazard_evaluate, valuation_at

    f = parse_polynomial("x*y^2 + x^2*y", ["x", "y"])
    valuation_at(f, [0, 0])          # Valuation((1, 2))
    lazard_evaluate(sphere, [0, 0])  # residual z^2 - 1, valuation (0, 0)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from phase_1.polynomial import Polynomial, PolynomialError, expand_about
from phase_2.algebraic import RealAlgebraicNumber
from phase_2.tower import Tower, TowerPolynomial, prune

logger = logging.getLogger(__name__)

PointLike = Union[Tower, Sequence[Union[RealAlgebraicNumber, int, Fraction]]]


def as_tower(point: PointLike) -> Tower:
    return point if isinstance(point, Tower) else Tower(point)


@dataclass(frozen=True, order=True)
class Valuation:
    """
    Exponent tuple compared lexicographically.

    Attributes:
        entries: Non-negative integers, one per coordinate.
    """
    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if any(e < 0 for e in self.entries):
            raise ValueError(f"valuation entries must be non-negative: {self.entries}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __add__(self, other: "Valuation") -> "Valuation":
        _check_lengths(self, other)
        return Valuation(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def dot(self, weights: Sequence[int]) -> int:
        if len(weights) != len(self.entries):
            raise ValueError("weight vector length does not match valuation length")
        return sum(c * v for c, v in zip(weights, self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_list(self) -> List[int]:
        return list(self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def _check_lengths(u: Valuation, v: Valuation) -> None:
    if len(u) != len(v):
        raise ValueError(f"valuation lengths differ: {len(u)} vs {len(v)}")


def lex_compare(u: Union[Valuation, Sequence[int]], v: Union[Valuation, Sequence[int]]) -> int:
    """-1, 0 or 1 by lexicographic order; lengths must match."""
    u = u if isinstance(u, Valuation) else Valuation(tuple(u))
    v = v if isinstance(v, Valuation) else Valuation(tuple(v))
    _check_lengths(u, v)
    return (u.entries > v.entries) - (u.entries < v.entries)


# ── Lazard evaluation ───────────────────────────────────────────────────────

@dataclass
class LazardEvalResult:
    """
    Outcome of Lazard evaluation of f on a point of length n - 1.

    Attributes:
        residual:  Nonzero polynomial in x_n; variables below n - 1 that remain
                   are symbols of irrational tower coordinates.
        valuation: The (n - 1)-tuple of orders divided out on the way.
        tower:     The point the residual's symbols refer to.
    """
    residual: Polynomial
    valuation: Valuation
    tower: Tower

    @property
    def over_tower(self) -> TowerPolynomial:
        return TowerPolynomial(self.residual, self.tower, len(self.tower))

    @property
    def is_rational(self) -> bool:
        return self.over_tower.is_rational()


def _lazard_loop(f: Polynomial, tower: Tower, levels: int) -> Tuple[Polynomial, List[int]]:
    current = f
    orders: List[int] = []
    for index in range(levels):
        term = current
        order = 0
        while True:
            value = prune(tower.substitute_coordinate(term, index), tower, index + 1)
            if not value.is_zero():
                break
            term = term.derivative(index)
            order += 1
            if term.is_zero():
                raise RuntimeError(f"{current} vanishes identically in x{index + 1} at {tower}")
        orders.append(order)
        current = value.scale(Fraction(1, factorial(order)))
    return current, orders


def lazard_evaluate(f: Polynomial, point: PointLike) -> LazardEvalResult:
    """Lazard evaluation of f (n variables) on a point with n - 1 coordinates."""
    if f.is_zero():
        raise PolynomialError("Lazard evaluation of the zero polynomial")
    tower = as_tower(point)
    if len(tower) != f.nvars - 1:
        raise PolynomialError(f"point has {len(tower)} coordinates, expected {f.nvars - 1}")
    residual, orders = _lazard_loop(f, tower, len(tower))
    return LazardEvalResult(residual=residual, valuation=Valuation(tuple(orders)), tower=tower)


def valuation_at(f: Polynomial, point: PointLike) -> Valuation:
    """Lazard valuation of f at a point with one coordinate per variable."""
    if f.is_zero():
        raise PolynomialError("valuation of the zero polynomial")
    tower = as_tower(point)
    if len(tower) != f.nvars:
        raise PolynomialError(f"point has {len(tower)} coordinates, expected {f.nvars}")
    _, orders = _lazard_loop(f, tower, len(tower))
    return Valuation(tuple(orders))


# ── Expansion coefficients and orders ───────────────────────────────────────

def _taylor_coefficient(f: Polynomial, exponents: Sequence[int]) -> Polynomial:
    """(1/u!) d^u f / dx^u as a polynomial, before substitution."""
    scale = 1
    for index, k in enumerate(exponents):
        for _ in range(k):
            f = f.derivative(index)
        scale *= factorial(k)
    return f.scale(Fraction(1, scale))


def expansion_coefficient(f: Polynomial, point: PointLike, exponents: Sequence[int]) -> Polynomial:
    """
    Coefficient of prod (x_i - alpha_i)^u_i in the expansion of f about a point.

    Works for points shorter than f's ring; the remaining variables stay free.
    Rational points go through an explicit Taylor shift, algebraic points
    through derivatives followed by reduction over the tower.
    """
    if f.is_zero():
        raise PolynomialError("expansion of the zero polynomial")
    tower = as_tower(point)
    k = len(tower)
    if len(exponents) != k or k > f.nvars:
        raise PolynomialError(f"exponent tuple {tuple(exponents)} does not match a {k}-coordinate point")
    if tower.is_rational():
        shifted = expand_about(f, tower.rational_values())
        terms = {
            (0,) * k + mono[k:]: c
            for mono, c in shifted.terms.items()
            if tuple(mono[:k]) == tuple(exponents)
        }
        return Polynomial(f.nvars, terms)
    coefficient = _taylor_coefficient(f, exponents)
    return prune(tower.reduce(coefficient, k), tower, k)


def _exponent_tuples(bounds: Sequence[int], total: int) -> Iterable[Tuple[int, ...]]:
    for exps in product(*(range(b + 1) for b in bounds)):
        if sum(exps) == total:
            yield exps


def order_at(f: Polynomial, point: PointLike) -> int:
    """Minimal total degree of a nonzero term of f expanded about the point."""
    if f.is_zero():
        raise PolynomialError("order of the zero polynomial")
    tower = as_tower(point)
    if len(tower) != f.nvars:
        raise PolynomialError(f"point has {len(tower)} coordinates, expected {f.nvars}")
    if tower.is_rational():
        shifted = expand_about(f, tower.rational_values())
        return min(sum(mono) for mono in shifted.terms)
    bounds = [f.degree(i) for i in range(f.nvars)]
    for total in range(f.total_degree() + 1):
        for exps in _exponent_tuples(bounds, total):
            coefficient = _taylor_coefficient(f, exps)
            if not coefficient.is_zero() and tower.sign(coefficient) != 0:
                return total
    raise RuntimeError(f"no nonzero Taylor coefficient of {f} at {tower}")


# ── Invariance verdicts ─────────────────────────────────────────────────────

@dataclass
class InvarianceVerdict:
    """
    Whether a quantity is constant over a list of points.

    Attributes:
        invariant: True when every point gives the same value.
        value:     Value at the first point (None for an empty list).
        witness:   Indices (0, j) of the first disagreeing pair, else None.
        values:    Values at the witness pair, else None.
    """
    invariant: bool
    value: Optional[object] = None
    witness: Optional[Tuple[int, int]] = None
    values: Optional[Tuple[object, object]] = None


def _invariance(values: List[object]) -> InvarianceVerdict:
    if not values:
        return InvarianceVerdict(invariant=True)
    first = values[0]
    for index, value in enumerate(values[1:], start=1):
        if value != first:
            return InvarianceVerdict(False, first, (0, index), (first, value))
    return InvarianceVerdict(True, first)


def valuation_invariant_on(f: Polynomial, points: Sequence[PointLike]) -> InvarianceVerdict:
    if f.is_zero():
        raise PolynomialError("valuation of the zero polynomial")
    return _invariance([valuation_at(f, p) for p in points])


def order_invariant_on(f: Polynomial, points: Sequence[PointLike]) -> InvarianceVerdict:
    if f.is_zero():
        raise PolynomialError("order of the zero polynomial")
    return _invariance([order_at(f, p) for p in points])
