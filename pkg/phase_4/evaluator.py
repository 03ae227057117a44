"""
Phase 4: Evaluator Vectors and Monomial Test Curves

An evaluator for a set V of valuations is a weight vector c with
c_i >= 1 + max over v in V of sum_{j > i} c_j * v_j. Under such weights the
lexicographic order on V agrees with the order of the scalar products <c, v>,
and the order at s = 0 of g(p + (s^c_1, ..., s^c_n)) equals <c, v_p(g)>.
This gives an independent check of valuation_at that never runs the
coordinate-by-coordinate loop.

Usage:
    from phase_4.evaluator import MonomialCurve, curve_order, evaluator_for

    c = evaluator_for([Valuation((1, 2)), Valuation((0, 1))])   # (3, 1)
    curve_order(g, MonomialCurve((0, 0), c))                    # 5
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Sequence, Tuple

from phase_1.polynomial import Polynomial, PolynomialError
from phase_4.valuation import Valuation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Evaluator:
    """
    Positive integer weights, one per coordinate.

    Attributes:
        weights: c_1, ..., c_n, all at least 1.
    """
    weights: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(c) for c in self.weights))
        if not self.weights:
            raise ValueError("an evaluator needs at least one weight")
        if any(c < 1 for c in self.weights):
            raise ValueError(f"evaluator weights must be positive: {self.weights}")

    def __len__(self) -> int:
        return len(self.weights)

    def dot(self, valuation: Valuation) -> int:
        return valuation.dot(self.weights)

    def truncated(self) -> "Evaluator":
        """Drop the last weight; an evaluator for V stays one for V with last entries removed."""
        if len(self.weights) < 2:
            raise ValueError("cannot truncate a one-weight evaluator")
        return Evaluator(self.weights[:-1])

    def is_evaluator_for(self, valuations: Iterable[Valuation]) -> bool:
        return is_evaluator(self, valuations)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.weights) + ")"


def _check_valuations(valuations: Sequence[Valuation], n: int) -> None:
    for v in valuations:
        if len(v) != n:
            raise ValueError(f"valuation {v} does not have length {n}")


def evaluator_for(valuations: Iterable[Valuation], c_last: int = 1) -> Evaluator:
    """Smallest weights satisfying the evaluator inequalities with c_n = c_last."""
    valuations = list(valuations)
    if not valuations:
        raise ValueError("evaluator_for needs at least one valuation")
    if c_last < 1:
        raise ValueError("c_last must be positive")
    n = len(valuations[0])
    _check_valuations(valuations, n)
    weights = [0] * n
    weights[-1] = c_last
    for i in range(n - 2, -1, -1):
        weights[i] = 1 + max(
            sum(weights[j] * v[j] for j in range(i + 1, n)) for v in valuations
        )
    return Evaluator(tuple(weights))


def is_evaluator(evaluator: Evaluator, valuations: Iterable[Valuation]) -> bool:
    valuations = list(valuations)
    c = evaluator.weights
    n = len(c)
    _check_valuations(valuations, n)
    for i in range(n - 1):
        needed = 1 + max((sum(c[j] * v[j] for j in range(i + 1, n)) for v in valuations), default=0)
        if c[i] < needed:
            logger.debug(f"Weight c{i + 1}={c[i]} below required {needed}")
            return False
    return True


@dataclass(frozen=True)
class MonomialCurve:
    """
    The curve s -> p + (s^c_1, ..., s^c_n).

    Attributes:
        base_point: Rational coordinates p.
        exponents:  Evaluator c.
    """
    base_point: Tuple[Fraction, ...]
    exponents: Evaluator

    def __post_init__(self):
        object.__setattr__(self, "base_point", tuple(Fraction(a) for a in self.base_point))
        if len(self.base_point) != len(self.exponents):
            raise ValueError("base point and exponents differ in length")


def _substitute_curve(g: Polynomial, curve: MonomialCurve) -> Dict[int, Fraction]:
    """Sparse coefficients in s of g along the curve."""
    powers: Dict[Tuple[int, int], Dict[int, Fraction]] = {}

    def power(index: int, k: int) -> Dict[int, Fraction]:
        # (p_i + s^c_i)^k by the binomial theorem
        key = (index, k)
        if key not in powers:
            p = curve.base_point[index]
            c = curve.exponents.weights[index]
            series: Dict[int, Fraction] = {}
            for j in range(k + 1):
                coeff = comb(k, j) * p ** (k - j)
                if coeff:
                    series[c * j] = Fraction(coeff)
            powers[key] = series
        return powers[key]

    total: Dict[int, Fraction] = {}
    for mono, coeff in g.terms.items():
        series = {0: coeff}
        for index, k in enumerate(mono):
            if k == 0:
                continue
            factor = power(index, k)
            product: Dict[int, Fraction] = {}
            for a, ca in series.items():
                for b, cb in factor.items():
                    product[a + b] = product.get(a + b, 0) + ca * cb
            series = product
        for e, c in series.items():
            total[e] = total.get(e, 0) + c
    return {e: c for e, c in total.items() if c}


def curve_order(g: Polynomial, curve: MonomialCurve) -> int:
    """Order at s = 0 of g restricted to the monomial curve."""
    if g.is_zero():
        raise PolynomialError("curve order of the zero polynomial")
    if g.nvars != len(curve.base_point):
        raise PolynomialError(f"curve has {len(curve.base_point)} coordinates, polynomial has {g.nvars}")
    series = _substitute_curve(g, curve)
    if not series:
        raise ValueError(f"{g} vanishes identically on the curve with exponents {curve.exponents}")
    return min(series)
