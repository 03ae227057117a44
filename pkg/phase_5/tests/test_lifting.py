"""
Unit tests for phase_5/lifting.py (sections, sector samples, stacks)
"""

from fractions import Fraction

import pytest

from phase_1.basis import squarefree_basis
from phase_1.parser import parse_polynomial
from phase_1.polynomial import Polynomial
from phase_2.algebraic import RealAlgebraicNumber
from phase_2.interval import Interval
from phase_2.tower import Tower
from phase_4.valuation import Valuation
from phase_5.cells import Cell, CellIndex
from phase_5.lifting import lift_over_point, section_roots, sector_sample


# ── Helpers ────────────────────────────────────────────────────────────────

def P(text: str, names: str) -> Polynomial:
    return parse_polynomial(text, list(names))


def R(value) -> RealAlgebraicNumber:
    return RealAlgebraicNumber.from_rational(value)


def sqrt2() -> RealAlgebraicNumber:
    return RealAlgebraicNumber(parse_polynomial("t^2 - 2", ["t"]), Interval(1, 2))


def base_cell(*coordinates) -> Cell:
    return Cell(index=CellIndex((1,) * len(coordinates)), sample=Tower(coordinates))


CIRCLE = P("x^2 + y^2 - 1", "xy")
CIRCLE_BASIS = squarefree_basis([CIRCLE], 1)


# ── Tests: sector samples ─────────────────────────────────────────────────

class TestSectorSample:
    def test_empty_line(self):
        assert sector_sample(None, None) == 0

    def test_unbounded_sides(self):
        assert sector_sample(None, R(-1)) == -2
        assert sector_sample(R(1), None) == 2
        assert sector_sample(None, R(Fraction(1, 2))) == -1

    def test_prefers_zero(self):
        assert sector_sample(R(-1), R(1)) == 0

    def test_prefers_integer(self):
        assert sector_sample(R(1), R(3)) == 2

    def test_between_irrational_and_rational(self):
        value = sector_sample(sqrt2(), R(2))
        assert sqrt2() < value < 2

    def test_unbounded_above_irrational(self):
        assert sector_sample(sqrt2(), None) == 3


# ── Tests: stacks ─────────────────────────────────────────────────────────

class TestLiftOverPoint:
    def test_circle_over_zero(self):
        stack = lift_over_point(CIRCLE_BASIS, base_cell(0), [CIRCLE])
        assert len(stack) == 5
        assert [r.value for r, _ in stack.sections] == [-1, 1]
        assert [c.sample[1].value for c in stack.cells] == [-2, -1, 0, 1, 2]
        assert [c.index.indices for c in stack.cells] == [(1, j) for j in range(1, 6)]

    def test_circle_outside(self):
        stack = lift_over_point(CIRCLE_BASIS, base_cell(2), [CIRCLE])
        assert len(stack) == 1
        assert stack.cells[0].sample[1].value == 0
        assert stack.cells[0].signs == (1,)

    def test_circle_tangent(self):
        stack = lift_over_point(CIRCLE_BASIS, base_cell(-1), [CIRCLE])
        assert stack.multiplicities == (2,)
        assert stack.cells[1].valuations == (Valuation((0, 2)),)
        assert stack.cells[0].valuations == (Valuation((0, 0)),)

    def test_lazard_evaluation_not_substitution(self):
        f = P("y*z - x", "xyz")
        stack = lift_over_point(squarefree_basis([f], 2), base_cell(0, 0), [f])
        assert len(stack) == 3
        assert stack.sections[0][0] == 0
        assert stack.cells[1].valuations == (Valuation((0, 1, 1)),)
        assert stack.cells[0].valuations == (Valuation((0, 1, 0)),)

    def test_over_algebraic_point(self):
        stack = lift_over_point(CIRCLE_BASIS, base_cell(sqrt2()), [CIRCLE])
        assert len(stack) == 1

    def test_sections_over_irrational_abscissa(self):
        half = RealAlgebraicNumber(parse_polynomial("2*t^2 - 1", ["t"]), Interval(0, 1))
        roots = section_roots(CIRCLE_BASIS, Tower([half]))
        assert len(roots) == 2
        for root, multiplicity in roots:
            assert multiplicity == 1
            assert float(root) ** 2 == pytest.approx(0.5)

    def test_level_one(self):
        basis = squarefree_basis([P("x^2 - 2", "x")], 0)
        stack = lift_over_point(basis, Cell.root(), [P("x^2 - 2", "x")])
        assert len(stack) == 5
        assert [c.sample[0].is_rational for c in stack.cells] == [True, False, True, False, True]
        assert stack.cells[2].sample[0].value == 0
