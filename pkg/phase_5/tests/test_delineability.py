"""
Unit tests for phase_5/delineability.py (probe points, delineability verdicts)
"""

import random
from dataclasses import replace

import pytest

from phase_1.basis import squarefree_basis
from phase_1.parser import parse_polynomial
from phase_1.polynomial import Polynomial, PolynomialError
from phase_4.valuation import Valuation
from phase_5.cad import vcadl
from phase_5.cells import CellIndex
from phase_5.delineability import (
    CellSelectionError,
    SectionCountMismatch,
    check_delineability,
    sample_cell_points,
)


# ── Helpers ────────────────────────────────────────────────────────────────

def P(text: str, names: str) -> Polynomial:
    return parse_polynomial(text, list(names))


CIRCLE = P("x^2 + y^2 - 1", "xy")
SPHERE = P("x^2 + y^2 + z^2 - 1", "xyz")


# ── Tests: probe points ───────────────────────────────────────────────────

class TestSampleCellPoints:
    def setup_method(self):
        self.decomposition = vcadl([P("x^2 - 1", "x")])

    def test_points_stay_in_sector(self):
        points = sample_cell_points(self.decomposition, (3,), 20, random.Random(1))
        for point in points:
            assert -1 < point[0].value < 1

    def test_unbounded_sector(self):
        for point in sample_cell_points(self.decomposition, (5,), 10, random.Random(2)):
            assert point[0].value > 1

    def test_section_points_are_the_root(self):
        points = sample_cell_points(self.decomposition, (4,), 3, random.Random(3))
        assert all(p[0] == 1 for p in points)

    def test_two_levels(self):
        decomposition = vcadl([CIRCLE])
        for point in sample_cell_points(decomposition, (3, 3), 10, random.Random(4)):
            x, y = point[0].value, point[1].value
            assert -1 < x < 1
            assert x * x + y * y < 1

    def test_missing_cell_raises(self):
        with pytest.raises(CellSelectionError, match="does not exist"):
            sample_cell_points(self.decomposition, (7,), 1, random.Random(5))


# ── Tests: verdicts ───────────────────────────────────────────────────────

class TestCheckDelineability:
    def test_circle_over_inner_interval(self):
        base = vcadl([P("x^2 - 1", "x")])
        verdicts = {v.index: v for v in check_delineability(CIRCLE, base, probes=8)}
        assert set(verdicts) == {CellIndex((1,)), CellIndex((3,)), CellIndex((5,))}
        inner = verdicts[CellIndex((3,))]
        assert inner.delineable
        assert inner.sections == 2
        assert inner.multiplicities == (1, 1)
        assert inner.probes == 8
        assert verdicts[CellIndex((1,))].sections == 0

    def test_cone_off_the_axes(self):
        base = vcadl([P("x*y", "xy")])
        verdicts = check_delineability(P("z^2 - x*y", "xyz"), base, probes=8)
        assert [v.index.indices for v in verdicts] == [(1, 1), (1, 3), (3, 1), (3, 3)]
        assert all(v.delineable for v in verdicts)
        assert verdicts[0].multiplicities == (1, 1)
        assert verdicts[1].sections == 0

    def test_no_roots_is_delineable(self):
        base = vcadl([P("x", "x")])
        verdicts = check_delineability(P("y^2 + x^2 + 1", "xy"), base, probes=4)
        assert all(v.delineable and v.sections == 0 for v in verdicts)

    def test_valuation_reported(self):
        base = vcadl([P("x", "x")])
        verdict = check_delineability(P("x*y - 1", "xy"), base, probes=4, cells=[(3,)])[0]
        assert verdict.reference.valuation == Valuation((0,))

    def test_counterexample_when_projection_is_missing(self):
        base = vcadl([P("x + 1", "x")])
        verdict = check_delineability(P("y^2 - x", "xy"), base, probes=8, cells=[(3,)])[0]
        assert not verdict.delineable
        assert verdict.counterexample is not None
        assert verdict.counterexample.multiplicities != verdict.multiplicities

    def test_seed_reproducible(self):
        base = vcadl([P("x^2 - 1", "x")])
        first = check_delineability(CIRCLE, base, probes=5, seed=9)
        second = check_delineability(CIRCLE, base, probes=5, seed=9)
        assert [v.reference for v in first] == [v.reference for v in second]

    def test_univariate_over_the_point(self):
        verdicts = check_delineability(P("x^2 - 1", "x"), vcadl([], nvars=1))
        assert len(verdicts) == 1
        assert verdicts[0].multiplicities == (1, 1)
        assert verdicts[0].probes == 0

    def test_section_cell_rejected(self):
        base = vcadl([P("x^2 - 1", "x")])
        with pytest.raises(CellSelectionError, match="not full-dimensional"):
            check_delineability(CIRCLE, base, cells=[(2,)])

    def test_wrong_level_rejected(self):
        base = vcadl([CIRCLE])
        with pytest.raises(CellSelectionError, match="not at level"):
            check_delineability(CIRCLE, base, cells=[(3, 3)])

    def test_zero_polynomial_raises(self):
        with pytest.raises(PolynomialError, match="zero polynomial"):
            check_delineability(Polynomial.zero(2), vcadl([P("x", "x")]))

class TestSectionCountMismatch:
    def setup_method(self):
        # level-1 basis with three roots under a stack built for two
        circle = vcadl([CIRCLE])
        self.decomposition = replace(circle, bases=[squarefree_basis([P("x^3 - x", "x")], 0)] + circle.bases[1:])

    def test_sample_cell_points_raises(self):
        with pytest.raises(SectionCountMismatch, match="3 sections"):
            sample_cell_points(self.decomposition, (3, 3), 2, random.Random(0))

    def test_becomes_a_failed_verdict(self):
        verdicts = check_delineability(SPHERE, self.decomposition, probes=2)
        assert verdicts
        assert not any(v.delineable for v in verdicts)
        assert all(v.probes == 0 and v.counterexample is None for v in verdicts)
        assert "3 sections" in verdicts[0].mismatch
