"""
Unit tests for phase_2/tower.py (sign certification, substitution, roots over towers)
"""

import random
from fractions import Fraction

import pytest

from phase_1.parser import parse_polynomial
from phase_1.polynomial import Polynomial, PolynomialError
from phase_2.algebraic import RealAlgebraicNumber
from phase_2.interval import Interval
from phase_2.tower import (
    Tower,
    TowerDegeneracyError,
    is_zero_at,
    roots_over_tower,
    sign_at,
    substitute_tower,
)


# ── Helpers ────────────────────────────────────────────────────────────────

def P(text: str, names: str = "xy") -> Polynomial:
    return parse_polynomial(text, list(names))


def sqrt(n: int, negative: bool = False) -> RealAlgebraicNumber:
    poly = parse_polynomial(f"t^2 - {n}", ["t"])
    bound = n + 1
    return RealAlgebraicNumber(poly, Interval(-bound, 0) if negative else Interval(0, bound))


# ── Tests: signs ──────────────────────────────────────────────────────────

class TestSign:
    def test_rational_point(self):
        assert sign_at(P("x^2 + y^2 - 1"), [Fraction(3, 5), Fraction(4, 5)]) == 0
        assert sign_at(P("x^2 + y^2 - 1"), [1, 1]) == 1

    def test_defining_polynomial_vanishes(self):
        assert is_zero_at(P("x^2 - 2", "x"), Tower([sqrt(2)]))

    def test_nonzero_sign(self):
        assert sign_at(P("x - 1", "x"), [sqrt(2)]) == 1
        assert sign_at(P("x + 1", "x"), [sqrt(2, negative=True)]) == -1

    def test_hidden_zero_needs_norm(self):
        # sqrt2 * sqrt2 - 2 only cancels exactly; intervals alone never certify it
        tower = Tower([sqrt(2), sqrt(2)])
        assert sign_at(P("x*y - 2"), tower) == 0
        assert sign_at(P("x*y - 2 + 1/1000000"), tower) == 1

    def test_sqrt2_times_sqrt3_minus_sqrt6(self):
        tower = Tower([sqrt(2), sqrt(3), sqrt(6)])
        assert sign_at(P("x*y - z", "xyz"), tower) == 0

    def test_variables_beyond_tower_raise(self):
        with pytest.raises(PolynomialError, match="beyond"):
            sign_at(P("x + y"), [1])

    def test_sign_is_multiplicative(self):
        rng = random.Random(17)
        towers = [Tower([sqrt(2), 1]), Tower([Fraction(1, 2), sqrt(3, negative=True)]), Tower([sqrt(2), sqrt(3)])]
        for _ in range(60):
            f = Polynomial(2, {(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-3, 3) for _ in range(3)})
            g = Polynomial(2, {(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-3, 3) for _ in range(3)})
            tower = rng.choice(towers)
            assert sign_at(f * g, tower) == sign_at(f, tower) * sign_at(g, tower)

    def test_agrees_with_narrow_interval_evaluation(self):
        tower = Tower([sqrt(2), sqrt(5)])
        f = P("x^3 - 2*x*y + y^2 - 3")
        reference = f.value_at([tower[0].approximate(Fraction(1, 10 ** 12)),
                                tower[1].approximate(Fraction(1, 10 ** 12))])
        assert sign_at(f, tower) == (1 if reference > 0 else -1)


# ── Tests: substitution ───────────────────────────────────────────────────

class TestSubstitute:
    def test_rational_substitution(self):
        result = substitute_tower(P("x^2 + y^2 + z^2 - 1", "xyz"), Tower([0, 0]), keep=1)
        assert result.polynomial == P("z^2 - 1", "xyz")
        assert result.is_rational()

    def test_algebraic_root_gives_zero(self):
        assert substitute_tower(P("x^2 - 2", "x"), Tower([sqrt(2)]), keep=0).is_zero()

    def test_pruning_drops_vanishing_coefficient(self):
        f = P("(x^2 - 2)*y^2 + x*y + 1")
        result = substitute_tower(f, Tower([sqrt(2)]), keep=1)
        assert result.degree(1) == 1
        assert result.polynomial == P("x*y + 1")

    def test_symbol_reduced_modulo_defining_polynomial(self):
        result = substitute_tower(P("x^3*y", "xy"), Tower([sqrt(2)]), keep=1)
        assert result.polynomial == P("2*x*y")

    def test_tower_too_short_raises(self):
        with pytest.raises(PolynomialError, match="cannot keep"):
            substitute_tower(P("x + y + z", "xyz"), Tower([1]), keep=1)


# ── Tests: roots over towers ──────────────────────────────────────────────

class TestRootsOverTower:
    def test_rational_tower(self):
        roots = roots_over_tower(P("y^2 - 1"), Tower([0]), 1)
        assert [r.value for r, _ in roots] == [-1, 1]

    def test_root_equal_to_symbol(self):
        tower = Tower([sqrt(2)])
        roots = roots_over_tower(P("y - x"), tower, 1)
        assert len(roots) == 1
        assert roots[0][0] == sqrt(2)
        assert roots[0][1] == 1

    def test_multiplicity_over_symbol(self):
        roots = roots_over_tower(P("(y - x)^2*(y + 1)"), Tower([sqrt(2)]), 1)
        assert [m for _, m in roots] == [1, 2]
        assert roots[0][0] == -1

    def test_conjugate_roots_filtered(self):
        # the norm (y^2 - 2)(y^2 - 8) has four roots; only -sqrt2 and 2*sqrt2 are roots of f
        f = P("y^2 - x*y - 2*x^2")  # (y - 2x)(y + x)
        roots = roots_over_tower(f, Tower([sqrt(2)]), 1)
        values = [float(r) for r, _ in roots]
        assert values == pytest.approx([-1.41421356, 2.82842712])

    def test_degenerate_norm_repaired(self):
        alpha = RealAlgebraicNumber(parse_polynomial("t^4 - 4", ["t"]), Interval(1, 2))
        f = P("(x^2 + 2)*y - (x^2 + 2)")
        roots = roots_over_tower(f, Tower([alpha]), 1)
        assert [(r.value, m) for r, m in roots] == [(1, 1)]

    def test_degenerate_norm_over_two_symbols(self):
        # x^2 + y^2 - 1 vanishes at (i*sqrt2, sqrt3) but is 4 at (sqrt2, sqrt3)
        alpha = RealAlgebraicNumber(parse_polynomial("t^4 - 4", ["t"]), Interval(1, 2))
        beta = RealAlgebraicNumber(parse_polynomial("t^4 - 9", ["t"]), Interval(1, 2))
        f = P("(x^2 + y^2 - 1)*z - (x^2 + y^2 - 1)", "xyz")
        roots = roots_over_tower(f, Tower([alpha, beta]), 2)
        assert [(r.value, m) for r, m in roots] == [(1, 1)]

    def test_degenerate_norm_in_both_symbols(self):
        alpha = RealAlgebraicNumber(parse_polynomial("t^4 - 4", ["t"]), Interval(1, 2))
        beta = RealAlgebraicNumber(parse_polynomial("t^4 - 9", ["t"]), Interval(1, 2))
        f = P("(x^2 + 2)*(y^2 + 3)*(z + 1)", "xyz")
        roots = roots_over_tower(f, Tower([alpha, beta]), 2)
        assert [(r.value, m) for r, m in roots] == [(-1, 1)]

    def test_degeneracy_error_type(self):
        assert issubclass(TowerDegeneracyError, ArithmeticError)
