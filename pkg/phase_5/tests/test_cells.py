"""
Unit tests for phase_5/cells.py (cell indices, cells, stacks)
"""

from fractions import Fraction

import pytest

from phase_1.parser import parse_polynomial
from phase_2.algebraic import RealAlgebraicNumber
from phase_2.interval import Interval
from phase_2.tower import Tower
from phase_4.valuation import Valuation
from phase_5.cells import Cell, CellIndex, Stack


# ── Helpers ────────────────────────────────────────────────────────────────

def sqrt2() -> RealAlgebraicNumber:
    return RealAlgebraicNumber(parse_polynomial("t^2 - 2", ["t"]), Interval(1, 2))


# ── Tests ──────────────────────────────────────────────────────────────────

class TestCellIndex:
    def test_sector_section_parity(self):
        index = CellIndex((3, 2))
        assert index.level == 2
        assert not index.is_section_at(1)
        assert index.is_section_at(2)
        assert not index.is_full_dimensional
        assert index.dimension == 1

    def test_parent_and_child(self):
        assert CellIndex((3, 2)).parent == CellIndex((3,))
        assert CellIndex((3,)).child(5) == CellIndex((3, 5))

    def test_order_is_lexicographic(self):
        assert sorted([CellIndex((2, 1)), CellIndex((1, 3)), CellIndex((1, 1))]) == [
            CellIndex((1, 1)), CellIndex((1, 3)), CellIndex((2, 1)),
        ]

    def test_str(self):
        assert str(CellIndex((1, 2, 3))) == "(1, 2, 3)"

    def test_zero_component_rejected(self):
        with pytest.raises(ValueError, match="positive"):
            CellIndex((1, 0))


class TestCell:
    def test_root(self):
        root = Cell.root()
        assert root.level == 0
        assert len(root.sample) == 0

    def test_to_dict_rational(self):
        cell = Cell(CellIndex((2,)), Tower([Fraction(-1, 2)]), signs=(0,), valuations=(Valuation((1,)),))
        assert cell.to_dict() == {"index": [2], "sample": ["-1/2"], "signs": [0], "valuations": [[1]]}

    def test_to_dict_algebraic(self):
        cell = Cell(CellIndex((2,)), Tower([sqrt2()]))
        assert cell.to_dict()["sample"] == [{"poly": [-2, 0, 1], "interval": ["1", "2"]}]

    def test_sample_values(self):
        cell = Cell(CellIndex((1, 2)), Tower([3, sqrt2()]))
        values = cell.sample_values()
        assert values[0] == 3
        assert isinstance(values[1], RealAlgebraicNumber)


class TestStack:
    def test_cell_count_checked(self):
        base = Cell.root()
        one = Cell(CellIndex((1,)), Tower([0]))
        with pytest.raises(ValueError, match="1 cells for 1 sections"):
            Stack(base=base, sections=((RealAlgebraicNumber.from_rational(0), 1),), cells=(one,))

    def test_multiplicities(self):
        base = Cell.root()
        zero = RealAlgebraicNumber.from_rational(0)
        cells = tuple(Cell(CellIndex((j,)), Tower([v])) for j, v in enumerate([-1, 0, 1], start=1))
        assert Stack(base=base, sections=((zero, 2),), cells=cells).multiplicities == (2,)
