"""
Phase 5: Empirical Lazard Delineability Check

A polynomial f in n variables is Lazard delineable on a cell S of R^(n-1)
when its Lazard valuation on the points of S is constant and the real roots
of the Lazard residual keep their number and multiplicities over S. This
module probes that on random rational points of full-dimensional cells.

Probe points are constructed directly inside a cell, one coordinate at a
time: the sections over the probe's prefix are recomputed from the level's
basis and a random rational is drawn between the two sections bounding the
cell's sector. No rejection sampling is needed.

Usage:
    from phase_5.delineability import check_delineability

    base = vcadl([parse_polynomial("x^2 - 1", ["x"])])
    for verdict in check_delineability(circle, base, probes=8):
        print(verdict.index, verdict.delineable, verdict.multiplicities)
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from phase_1.polynomial import Polynomial, PolynomialError
from phase_2.algebraic import RealAlgebraicNumber
from phase_2.tower import Tower, roots_over_tower
from phase_4.valuation import Valuation, lazard_evaluate
from phase_5.cells import Cell, CellIndex, Decomposition
from phase_5.lifting import lower_end, section_roots, separate, upper_end

logger = logging.getLogger(__name__)

DEFAULT_PROBES = 8
DEFAULT_SEED = 0
PROBE_SPREAD = 4


class CellSelectionError(ValueError):
    """A cell that cannot be probed (not full-dimensional or not in the decomposition)."""


class SectionCountMismatch(RuntimeError):
    """Probe points of one cell see a different number of sections than its sample point."""


@dataclass
class ProbeResult:
    """
    What f looks like over one point.

    Attributes:
        point:          The point, one coordinate per base level.
        valuation:      Orders divided out by Lazard evaluation.
        multiplicities: Multiplicities of the residual's real roots, increasing.
    """
    point: Tuple[Union[Fraction, RealAlgebraicNumber], ...]
    valuation: Valuation
    multiplicities: Tuple[int, ...]

    @property
    def sections(self) -> int:
        return len(self.multiplicities)

    def same_shape(self, other: "ProbeResult") -> bool:
        return self.valuation == other.valuation and self.multiplicities == other.multiplicities


@dataclass
class DelineabilityVerdict:
    """
    Attributes:
        index:          Base cell that was probed.
        delineable:     True when every probe matched the sample point.
        reference:      Profile at the cell's sample point.
        probes:         Number of probe points checked.
        counterexample: First probe that disagreed, if any.
        mismatch:       Why probe points could not be built, when the section
                        count over the cell changed.
    """
    index: CellIndex
    delineable: bool
    reference: ProbeResult
    probes: int
    counterexample: Optional[ProbeResult] = None
    mismatch: Optional[str] = None

    @property
    def sections(self) -> int:
        return self.reference.sections

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return self.reference.multiplicities


# ── Probe points ────────────────────────────────────────────────────────────

def random_between(lower: Optional[RealAlgebraicNumber], upper: Optional[RealAlgebraicNumber],
                   rng: random.Random) -> Fraction:
    """Random rational strictly between two numbers (None is an infinite end)."""
    if lower is None and upper is None:
        lo, hi = Fraction(-PROBE_SPREAD), Fraction(PROBE_SPREAD)
    elif lower is None:
        hi = lower_end(upper)
        lo = hi - PROBE_SPREAD
    elif upper is None:
        lo = upper_end(lower)
        hi = lo + PROBE_SPREAD
    else:
        lo, hi = separate(lower, upper)
    return lo + (hi - lo) * Fraction(rng.randint(1, 63), 64)


def sample_cell_points(decomposition: Decomposition, index: Union[CellIndex, Sequence[int]],
                       count: int, rng: random.Random) -> List[Tower]:
    """
    Points of a cell built coordinate by coordinate.

    Sector coordinates are random rationals; section coordinates are the
    corresponding root over the probe's prefix, so they may be algebraic.
    """
    index = index if isinstance(index, CellIndex) else CellIndex(tuple(index))
    if index.level > decomposition.lifted:
        raise CellSelectionError(f"cell {index} is above the lifted levels")
    points: List[Tower] = []
    for _ in range(count):
        tower = Tower([])
        for level, position in enumerate(index.indices, start=1):
            roots = [r for r, _ in section_roots(decomposition.bases[level - 1], tower)]
            expected = decomposition.stack_over(index.indices[:level - 1]).sections
            if len(roots) != len(expected):
                raise SectionCountMismatch(
                    f"{len(roots)} sections over probe {tower}, the stack over "
                    f"{CellIndex(index.indices[:level - 1])} has {len(expected)}"
                )
            if position > 2 * len(roots) + 1:
                raise CellSelectionError(f"cell {index} does not exist")
            if position % 2 == 0:
                coordinate: Union[Fraction, RealAlgebraicNumber] = roots[position // 2 - 1]
            else:
                slot = (position - 1) // 2
                lower = roots[slot - 1] if slot > 0 else None
                upper = roots[slot] if slot < len(roots) else None
                coordinate = random_between(lower, upper, rng)
            tower = tower.extend(coordinate)
        points.append(tower)
    return points


# ── Delineability ───────────────────────────────────────────────────────────

def profile(f: Polynomial, point: Tower) -> ProbeResult:
    result = lazard_evaluate(f, point)
    var = f.nvars - 1
    roots = roots_over_tower(result.residual, point, var) if result.residual.degree(var) > 0 else []
    multiplicities = tuple(m for _, m in roots)
    values = tuple(c.value if c.is_rational else c for c in point)
    return ProbeResult(point=values, valuation=result.valuation, multiplicities=multiplicities)


def _selected_cells(decomposition: Decomposition, level: int,
                    cells: Optional[Sequence[Union[CellIndex, Sequence[int]]]]) -> List[Cell]:
    if level == 0:
        return [Cell.root()]
    if level > decomposition.lifted:
        raise CellSelectionError(f"decomposition is lifted to level {decomposition.lifted}, need {level}")
    if cells is None:
        return [c for c in decomposition.levels[level - 1] if c.is_full_dimensional]
    selected = []
    for requested in cells:
        index = requested if isinstance(requested, CellIndex) else CellIndex(tuple(requested))
        if index.level != level:
            raise CellSelectionError(f"cell {index} is not at level {level}")
        if not index.is_full_dimensional:
            raise CellSelectionError(f"cell {index} is not full-dimensional")
        try:
            selected.append(decomposition.cell(index))
        except KeyError as e:
            raise CellSelectionError(str(e)) from e
    return selected


def check_delineability(
    f: Polynomial,
    decomposition: Decomposition,
    probes: int = DEFAULT_PROBES,
    seed: int = DEFAULT_SEED,
    cells: Optional[Sequence[Union[CellIndex, Sequence[int]]]] = None,
) -> List[DelineabilityVerdict]:
    """
    Probe Lazard delineability of f over full-dimensional cells of level n - 1.

    Args:
        f:             Nonzero polynomial in n variables.
        decomposition: Decomposition lifted to at least level n - 1.
        probes:        Random points per cell, besides the sample point.
        seed:          Seed of the probe generator.
        cells:         Indices to check; default every full-dimensional cell.
    """
    if f.is_zero():
        raise PolynomialError("delineability of the zero polynomial")
    if probes < 0:
        raise ValueError(f"probes must be non-negative, got {probes}")
    level = f.nvars - 1
    rng = random.Random(seed)
    verdicts: List[DelineabilityVerdict] = []
    for cell in _selected_cells(decomposition, level, cells):
        reference = profile(f, cell.sample)
        counterexample: Optional[ProbeResult] = None
        try:
            points = sample_cell_points(decomposition, cell.index, probes, rng) if level else []
        except SectionCountMismatch as e:
            logger.warning(f"{f} is not delineable on cell {cell.index}: {e}")
            verdicts.append(DelineabilityVerdict(
                index=cell.index, delineable=False, reference=reference, probes=0, mismatch=str(e),
            ))
            continue
        for point in points:
            probe = profile(f, point)
            if not probe.same_shape(reference):
                counterexample = probe
                logger.warning(f"{f} is not delineable on cell {cell.index}: probe {point} differs")
                break
        verdicts.append(DelineabilityVerdict(
            index=cell.index,
            delineable=counterexample is None,
            reference=reference,
            probes=len(points),
            counterexample=counterexample,
        ))
    return verdicts
