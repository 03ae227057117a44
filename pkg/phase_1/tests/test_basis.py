"""
Unit tests for phase_1/basis.py (gcd, contents, squarefree bases)
"""

import random

import pytest

from phase_1.basis import (
    BasisSet,
    content_and_primitive,
    gcd,
    gcd_list,
    is_squarefree,
    squarefree_basis,
    squarefree_decomposition,
    squarefree_part,
)
from phase_1.parser import parse_polynomial
from phase_1.polynomial import Polynomial, PolynomialError, divides


# ── Helpers ────────────────────────────────────────────────────────────────

def P(text: str, names: str = "xy") -> Polynomial:
    return parse_polynomial(text, list(names))


def random_factor(rng: random.Random) -> Polynomial:
    """Small polynomial with positive degree in y."""
    a, b, c = rng.randint(-3, 3), rng.randint(-3, 3), rng.choice([1, 2])
    y = Polynomial.variable(2, 1)
    x = Polynomial.variable(2, 0)
    return (c * y + a * x + b) if rng.random() < 0.6 else (y * y + a * x + b)


# ── Tests: gcd ────────────────────────────────────────────────────────────

class TestGcd:
    def test_common_linear_factor(self):
        assert gcd(P("x^2 - y^2"), P("(x - y)^2")) == P("x - y")

    def test_coprime(self):
        assert gcd(P("x + y"), P("x - y")) == P("1")

    def test_with_zero(self):
        assert gcd(P("-2*x - 4"), P("0")) == P("x + 2")

    def test_both_zero_raises(self):
        with pytest.raises(PolynomialError):
            gcd(P("0"), P("0"))

    def test_content_factor_kept(self):
        # common factor x lives only in the content with respect to y
        assert gcd(P("x*y + x"), P("x*y^2 - x")) == P("x*y + x")

    def test_gcd_list(self):
        assert gcd_list([P("x*y"), P("x^2"), P("3*x*y^2")]) == P("x")

    def test_normalized_sign(self):
        g = gcd(P("-(x + 1)*(y - 2)"), P("(x + 1)*(y + 5)"))
        assert g == P("x + 1")


# ── Tests: contents ───────────────────────────────────────────────────────

class TestContent:
    def test_numeric_content(self):
        content, primitive = content_and_primitive(P("2*z + 2", "z"), 0)
        assert content == P("2", "z")
        assert primitive == P("z + 1", "z")

    def test_polynomial_content(self):
        content, primitive = content_and_primitive(P("y*z^2 - y", "yz"), 1)
        assert content == P("y", "yz")
        assert primitive == P("z^2 - 1", "yz")

    def test_product_restores_input(self):
        f = P("-6*x^2*y^2 + 6*y^2 - 3*x*y + 3")
        content, primitive = content_and_primitive(f, 0)
        assert content * primitive == f

    def test_zero_raises(self):
        with pytest.raises(PolynomialError):
            content_and_primitive(P("0"), 1)


# ── Tests: squarefree ─────────────────────────────────────────────────────

class TestSquarefree:
    def test_yun_decomposition(self):
        f = P("(y - 1)^2*(y + 2)^3", "y")
        assert squarefree_decomposition(f, 0) == [(P("y - 1", "y"), 2), (P("y + 2", "y"), 3)]

    def test_yun_multivariate(self):
        f = P("(y - x)^2*(y + x)")
        assert squarefree_decomposition(f, 1) == [(P("x + y"), 1), (P("x - y"), 2)]

    def test_squarefree_part_multivariate(self):
        assert squarefree_part(P("y*z^2", "yz")) == P("y*z", "yz")
        assert squarefree_part(P("x^3*(y - 1)^2")) == P("x*y - x")

    def test_is_squarefree(self):
        assert is_squarefree(P("y^2 - x"), 1)
        assert not is_squarefree(P("(y - x)^2"), 1)


class TestSquarefreeBasis:
    def test_refines_shared_factor(self):
        basis = squarefree_basis([P("y^2 - 1", "y"), P("y - 1", "y")], 0)
        assert isinstance(basis, BasisSet)
        assert basis.elements == (P("y - 1", "y"), P("y + 1", "y"))

    def test_splits_off_main_variable(self):
        basis = squarefree_basis([P("y^3 - y^2", "y")], 0)
        assert basis.elements == (P("y", "y"), P("y - 1", "y"))

    def test_repeated_factor_appears_once(self):
        basis = squarefree_basis([P("(y - x)^3"), P("y - x")], 1)
        assert basis.elements == (P("x - y"),)

    def test_zero_input_raises(self):
        with pytest.raises(PolynomialError, match="zero"):
            squarefree_basis([P("0")], 1)

    def test_no_main_degree_raises(self):
        with pytest.raises(PolynomialError, match="positive degree"):
            squarefree_basis([P("x + 1")], 1)

    def test_random_bases_are_coprime_and_squarefree(self):
        rng = random.Random(3)
        for _ in range(40):
            inputs = []
            for _ in range(rng.randint(1, 3)):
                f = Polynomial.one(2)
                for _ in range(rng.randint(1, 3)):
                    f = f * random_factor(rng)
                inputs.append(f.normalize())
            basis = squarefree_basis(inputs, 1)
            for i, p in enumerate(basis):
                assert p.degree(1) > 0
                assert is_squarefree(p, 1)
                assert any(divides(p, f) for f in inputs)
                for q in basis.elements[i + 1:]:
                    assert gcd(p, q).degree(1) < 1
            for f in inputs:
                covered = Polynomial.one(2)
                for p in basis:
                    if divides(p, f):
                        covered = covered * p
                assert divides(covered, f)
                assert covered.degree(1) == squarefree_part(f).degree(1)
