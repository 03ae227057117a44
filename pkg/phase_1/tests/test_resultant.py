"""
Unit tests for phase_1/resultant.py (subresultant PRS, discriminants)

The Sylvester determinant is the oracle for the fast resultant.
"""

import random

import pytest

from phase_1.parser import parse_polynomial
from phase_1.polynomial import Polynomial, PolynomialError
from phase_1.resultant import (
    determinant,
    discriminant,
    resultant,
    sylvester_matrix,
    sylvester_resultant,
)


# ── Helpers ────────────────────────────────────────────────────────────────

def P(text: str, names: str = "xy") -> Polynomial:
    return parse_polynomial(text, list(names))


def random_poly(rng: random.Random, nvars: int, main_degree: int, other_degree: int) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, 5)):
        mono = [rng.randint(0, other_degree) for _ in range(nvars - 1)] + [rng.randint(0, main_degree)]
        terms[tuple(mono)] = rng.randint(-5, 5)
    # guarantee the requested degree in the main variable
    top = [0] * (nvars - 1) + [main_degree]
    terms[tuple(top)] = rng.choice([-3, -2, -1, 1, 2, 3])
    return Polynomial(nvars, terms)


# ── Tests: resultant ──────────────────────────────────────────────────────

class TestResultant:
    def test_linear_sign_convention(self):
        assert resultant(P("y - x"), P("y - 1"), 1) == P("x - 1")

    def test_common_root_gives_zero(self):
        f = P("(y - x)*(y + 1)")
        g = P("(y - x)*(y - 2)")
        assert resultant(f, g, 1).is_zero()

    def test_result_is_free_of_main_variable(self):
        r = resultant(P("x^2 + y^2 - 1"), P("x - y"), 1)
        assert 1 not in r.variables()
        assert r == P("2*x^2 - 1")

    def test_swap_sign(self):
        f = P("y^3 + x*y + 1")
        g = P("y^2 - x")
        # (-1)^(3*2) = 1
        assert resultant(g, f, 1) == resultant(f, g, 1)
        h = P("y - x")
        # (-1)^(3*1) = -1
        assert resultant(h, f, 1) == -resultant(f, h, 1)

    @pytest.mark.parametrize("f,g,expected", [
        ("y", "2*y^3 + 1", "1"),
        ("2*y^3 + 1", "y", "-1"),
        ("y - x", "y^3", "x^3"),
        ("y^3", "y - x", "-x^3"),
        ("x*y - 1", "y^3 + x", "1 + x^4"),
    ])
    def test_odd_degree_pairs(self, f, g, expected):
        # res(f, g) = lc(f)^deg(g) * product of g over the roots of f
        assert resultant(P(f), P(g), 1) == P(expected)
        assert sylvester_resultant(P(f), P(g), 1) == P(expected)

    def test_zero_degree_raises(self):
        with pytest.raises(PolynomialError, match="positive degree"):
            resultant(P("x + 1"), P("y"), 1)

    def test_zero_polynomial_raises(self):
        with pytest.raises(PolynomialError, match="zero"):
            resultant(P("0"), P("y"), 1)

    def test_matches_sylvester_on_fixed_pairs(self):
        pairs = [
            ("y^3 - 2*x*y + 1", "y^2 + x"),
            ("x*y^4 + y - 1", "y^3 - x^2*y + 2"),
            ("y^2 + x^2 - 1", "2*y"),
        ]
        for f, g in pairs:
            assert resultant(P(f), P(g), 1) == sylvester_resultant(P(f), P(g), 1)

    def test_matches_sylvester_random_bivariate(self):
        rng = random.Random(7)
        for _ in range(200):
            f = random_poly(rng, 2, rng.randint(1, 4), 2)
            g = random_poly(rng, 2, rng.randint(1, 4), 2)
            assert resultant(f, g, 1) == sylvester_resultant(f, g, 1)

    def test_matches_sylvester_random_trivariate(self):
        rng = random.Random(11)
        for _ in range(30):
            f = random_poly(rng, 3, rng.randint(1, 3), 1)
            g = random_poly(rng, 3, rng.randint(1, 3), 1)
            assert resultant(f, g, 2) == sylvester_resultant(f, g, 2)


# ── Tests: discriminant ───────────────────────────────────────────────────

class TestDiscriminant:
    def test_circle(self):
        assert discriminant(P("x^2 + y^2 - 1"), 1) == P("4 - 4*x^2")

    def test_quadratic_formula(self):
        f = P("y*w^2 + x*w - y*z^2", "xyzw")
        assert discriminant(f, 3) == P("x^2 + 4*y^2*z^2", "xyzw")

    def test_cubic(self):
        # y^3 + p*y + q has discriminant -4p^3 - 27q^2
        f = P("y^3 + x*y + 1")
        assert discriminant(f, 1) == P("-4*x^3 - 27")

    def test_double_root_vanishes(self):
        assert discriminant(P("(y - x)^2"), 1).is_zero()

    def test_linear_raises(self):
        with pytest.raises(PolynomialError, match="degree >= 2"):
            discriminant(P("x*y + 1"), 1)


# ── Tests: Sylvester machinery ────────────────────────────────────────────

class TestSylvester:
    def test_matrix_shape(self):
        rows = sylvester_matrix(P("y^2 + 1"), P("y - x"), 1)
        assert len(rows) == 3
        assert all(len(r) == 3 for r in rows)

    def test_determinant_with_swap(self):
        one, zero = P("1"), P("0")
        matrix = [[zero, one], [one, zero]]
        assert determinant(matrix) == P("-1")


# ── Tests: sympy oracle ───────────────────────────────────────────────────

class TestAgainstSympy:
    def setup_method(self):
        self.sympy = pytest.importorskip("sympy")
        self.symbols = self.sympy.symbols("x y z")

    def to_sympy(self, f: Polynomial):
        expr = 0
        for mono, c in f.terms.items():
            term = self.sympy.Rational(c.numerator, c.denominator)
            for symbol, e in zip(self.symbols, mono):
                term *= symbol ** e
            expr += term
        return expr

    def test_bivariate_pairs(self):
        rng = random.Random(17)
        x, y, _ = self.symbols
        for _ in range(200):
            f = random_poly(rng, 2, rng.randint(1, 4), 2)
            g = random_poly(rng, 2, rng.randint(1, 4), 2)
            m, n = f.degree(1), g.degree(1)
            if m >= n:
                expected = self.sympy.resultant(self.to_sympy(f), self.to_sympy(g), y)
            else:
                # sympy drops the (-1)^(m*n) factor when it swaps its arguments
                expected = (-1) ** (m * n) * self.sympy.resultant(self.to_sympy(g), self.to_sympy(f), y)
            assert self.sympy.expand(self.to_sympy(resultant(f, g, 1)) - expected) == 0

    def test_discriminant_of_quadratic_in_z(self):
        _, _, z = self.symbols
        f = P("y*z^2 + x*z - y", "xyz")
        expected = self.sympy.discriminant(self.to_sympy(f), z)
        assert self.sympy.expand(self.to_sympy(discriminant(f, 2)) - expected) == 0
