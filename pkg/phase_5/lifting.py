"""
Phase 5: Lifting

Builds the stack over one base cell. Each basis element is Lazard-evaluated
at the base sample point (exact arithmetic over the sample's tower); the real
roots of the residuals, merged with multiplicities, are the sections, and
one rational point is chosen in every sector.

Sector sample convention: 0 when it lies in the sector, otherwise the floor
or ceiling of the midpoint, otherwise the midpoint; below the lowest section
floor(root) - 1 and above the highest ceil(root) + 1.

Usage:
    from phase_5.lifting import lift_over_point

    stack = lift_over_point(basis, base_cell, level_polynomials)
"""

import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from phase_1.basis import BasisSet
from phase_1.polynomial import Polynomial
from phase_2.algebraic import RealAlgebraicNumber, merge_roots
from phase_2.tower import Tower, roots_over_tower
from phase_4.valuation import Valuation, lazard_evaluate, valuation_at
from phase_5.cells import Cell, Stack

logger = logging.getLogger(__name__)

Root = Tuple[RealAlgebraicNumber, int]


# ── Sections ────────────────────────────────────────────────────────────────

def residual_roots(f: Polynomial, tower: Tower) -> List[Root]:
    """Real roots, with multiplicities, of the Lazard residual of f over the tower."""
    var = f.nvars - 1
    residual = lazard_evaluate(f, tower).residual
    if residual.degree(var) < 1:
        return []
    return roots_over_tower(residual, tower, var)


def section_roots(basis: BasisSet, tower: Tower) -> List[Root]:
    """Sections over a point: merged residual roots of every basis element."""
    found: List[Root] = []
    for element in basis:
        found.extend(residual_roots(element, tower))
    return merge_roots(found)


# ── Rational points between sections ───────────────────────────────────────

def lower_end(number: RealAlgebraicNumber) -> Fraction:
    return number.value if number.is_rational else number.interval.lo


def upper_end(number: RealAlgebraicNumber) -> Fraction:
    return number.value if number.is_rational else number.interval.hi


def separate(lower: RealAlgebraicNumber, upper: RealAlgebraicNumber) -> Tuple[Fraction, Fraction]:
    """Rationals lo < hi with lower <= lo and hi <= upper; requires lower < upper."""
    while not upper_end(lower) < lower_end(upper):
        lower.bisect()
        upper.bisect()
    return upper_end(lower), lower_end(upper)


def sector_sample(lower: Optional[RealAlgebraicNumber], upper: Optional[RealAlgebraicNumber]) -> Fraction:
    if lower is None and upper is None:
        return Fraction(0)
    if lower is None:
        return Fraction(math.floor(lower_end(upper)) - 1)
    if upper is None:
        return Fraction(math.ceil(upper_end(lower)) + 1)
    lo, hi = separate(lower, upper)
    mid = (lo + hi) / 2
    for candidate in (Fraction(0), Fraction(math.floor(mid)), Fraction(math.ceil(mid)), mid):
        if lower < candidate and upper > candidate:
            return candidate
    raise RuntimeError(f"no rational found between {lower} and {upper}")


# ── Stacks ──────────────────────────────────────────────────────────────────

def describe(polynomials: Sequence[Polynomial], sample: Tower) -> Tuple[Tuple[int, ...], Tuple[Valuation, ...]]:
    """Signs and valuations of the polynomials at a full-length sample point."""
    signs = tuple(sample.sign(f) for f in polynomials)
    valuations = tuple(valuation_at(f, sample) for f in polynomials)
    return signs, valuations


def stack_coordinates(roots: Sequence[Root]) -> List[RealAlgebraicNumber]:
    """Sample coordinates bottom-up: sector, section, sector, ..., sector."""
    numbers = [r for r, _ in roots]
    bounds: List[Optional[RealAlgebraicNumber]] = [None, *numbers, None]
    coordinates: List[RealAlgebraicNumber] = []
    for j in range(len(numbers) + 1):
        coordinates.append(RealAlgebraicNumber.from_rational(sector_sample(bounds[j], bounds[j + 1])))
        if j < len(numbers):
            coordinates.append(numbers[j])
    return coordinates


def lift_over_point(basis: BasisSet, base: Cell, polynomials: Sequence[Polynomial] = ()) -> Stack:
    """Stack over `base` for the basis in one more variable than the base level."""
    roots = section_roots(basis, base.sample)
    cells = []
    for position, coordinate in enumerate(stack_coordinates(roots), start=1):
        sample = base.sample.extend(coordinate)
        signs, valuations = describe(polynomials, sample)
        cells.append(Cell(index=base.index.child(position), sample=sample, signs=signs, valuations=valuations))
    logger.debug(f"Stack over {base.index}: {len(roots)} sections")
    return Stack(base=base, sections=tuple(roots), cells=tuple(cells))
