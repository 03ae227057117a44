"""
Phase 1: GCDs, Contents and Squarefree Bases

gcd is the recursive primitive PRS: split off contents with respect to the
highest occurring variable, run a primitive pseudo-remainder sequence on the
primitive parts and recurse on the contents.

A squarefree basis of a set of polynomials (all positive degree in the main
variable, primitive) is a list of pairwise coprime squarefree polynomials
whose products give every input up to a constant. Full irreducible
factorisation is not needed for projection or lifting, so it is not done.
"""

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, List, Sequence, Tuple

from phase_1.polynomial import Polynomial, PolynomialError, exact_divide, pseudo_remainder

logger = logging.getLogger(__name__)


# ── GCD ──────────────────────────────────────────────────────────────────────

def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Normalized greatest common divisor. gcd(f, 0) = normalize(f)."""
    if f.nvars != g.nvars:
        raise PolynomialError("ring mismatch in gcd")
    if f.is_zero() and g.is_zero():
        raise PolynomialError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.normalize()
    if g.is_zero():
        return f.normalize()
    return _gcd(f, g).normalize()


def gcd_list(polys: Iterable[Polynomial]) -> Polynomial:
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise PolynomialError("gcd of an empty or all-zero list")
    return reduce(gcd, polys[1:], polys[0].normalize())


def _gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    nvars = f.nvars
    if f.is_constant() or g.is_constant():
        return Polynomial.one(nvars)
    var = max(f.variables() | g.variables())
    cf = _content(f, var)
    cg = _content(g, var)
    common = _gcd(cf, cg)
    a = exact_divide(f, cf)
    b = exact_divide(g, cg)
    if a.degree(var) < b.degree(var):
        a, b = b, a
    while not b.is_zero():
        remainder = pseudo_remainder(a, b, var)
        a, b = b, (_primitive(remainder, var) if not remainder.is_zero() else remainder)
    return (common * _primitive(a, var)).normalize()


def _content(f: Polynomial, var: int) -> Polynomial:
    coeffs = [c for c in f.coefficients(var) if not c.is_zero()]
    if len(coeffs) == 1:
        return coeffs[0].normalize()
    result = coeffs[0]
    for c in coeffs[1:]:
        result = _gcd(result, c)
        if result.is_constant():
            return Polynomial.one(f.nvars)
    return result.normalize()


def _primitive(f: Polynomial, var: int) -> Polynomial:
    return exact_divide(f, _content(f, var)).normalize()


def content_and_primitive(f: Polynomial, var: int) -> Tuple[Polynomial, Polynomial]:
    """
    Split f = content * primitive with respect to x_var.

    The primitive part is normalized (integer primitive, positive leading
    coefficient) and the rational scalar goes into the content, so
    content_and_primitive(2z + 2, z) == (2, z + 1).
    """
    if f.is_zero():
        raise PolynomialError("content of the zero polynomial is undefined")
    content = _content(f, var)
    raw = exact_divide(f, content)
    primitive = raw.normalize()
    factor = raw.leading_coeff() / primitive.leading_coeff()
    return content.scale(factor), primitive


# ── Squarefree decomposition ────────────────────────────────────────────────

def squarefree_decomposition(f: Polynomial, var: int) -> List[Tuple[Polynomial, int]]:
    """
    Yun's algorithm with respect to x_var: [(a_i, i)] with f ~ prod a_i^i.

    Only factors of positive degree in x_var are reported; call it on
    primitive input to get a complete decomposition.
    """
    if f.is_zero():
        raise PolynomialError("squarefree decomposition of the zero polynomial")
    if f.degree(var) < 1:
        return []
    df = f.derivative(var)
    a = gcd(f, df)
    b = exact_divide(f, a)
    c = exact_divide(df, a)
    d = c - b.derivative(var)
    factors: List[Tuple[Polynomial, int]] = []
    multiplicity = 1
    while b.degree(var) > 0:
        a = gcd(b, d)
        b = exact_divide(b, a)
        c = exact_divide(d, a)
        d = c - b.derivative(var)
        if a.degree(var) > 0:
            factors.append((a.normalize(), multiplicity))
        multiplicity += 1
    return factors


def squarefree_part(f: Polynomial) -> Polynomial:
    """Product of the distinct factors of f over all variables, normalized."""
    if f.is_zero():
        raise PolynomialError("squarefree part of the zero polynomial")
    if f.is_constant():
        return Polynomial.one(f.nvars)
    var = max(f.variables())
    content, primitive = content_and_primitive(f, var)
    g = gcd(primitive, primitive.derivative(var))
    return (squarefree_part(content) * exact_divide(primitive, g)).normalize()


def is_squarefree(f: Polynomial, var: int) -> bool:
    if f.degree(var) < 1:
        return True
    return gcd(f, f.derivative(var)).degree(var) < 1


# ── Squarefree basis ────────────────────────────────────────────────────────

@dataclass(frozen=True)
class BasisSet:
    """
    Pairwise coprime squarefree polynomials of positive degree in x_var.

    Attributes:
        var:      Index of the main variable.
        elements: Normalized polynomials in a deterministic order.
    """
    var: int
    elements: Tuple[Polynomial, ...]

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, index: int) -> Polynomial:
        return self.elements[index]

    def product(self, nvars: int) -> Polynomial:
        return reduce(lambda a, b: a * b, self.elements, Polynomial.one(nvars))


def _insert_coprime(basis: List[Polynomial], p: Polynomial, var: int) -> List[Polynomial]:
    refined: List[Polynomial] = []
    for q in basis:
        if p.degree(var) < 1:
            refined.append(q)
            continue
        g = gcd(p, q)
        if g.degree(var) < 1:
            refined.append(q)
            continue
        rest = exact_divide(q, g).normalize()
        refined.append(g)
        if rest.degree(var) > 0:
            refined.append(rest)
        p = exact_divide(p, g).normalize()
    if p.degree(var) > 0:
        refined.append(p)
    return refined


def squarefree_basis(polys: Sequence[Polynomial], var: int) -> BasisSet:
    """
    Squarefree coprime basis of polynomials that have positive degree in x_var.

    A power of x_var dividing an input (zero trailing coefficient) is split
    off as the element x_var itself before Yun's decomposition runs.
    """
    pieces: List[Polynomial] = []
    for f in polys:
        if f.is_zero():
            raise PolynomialError("zero polynomial in squarefree basis input")
        if f.degree(var) < 1:
            raise PolynomialError(f"basis input {f} has no positive degree in x{var + 1}")
        k = f.min_degree(var)
        if k:
            x = Polynomial.variable(f.nvars, var)
            pieces.append(x)
            f = exact_divide(f, x ** k)
        pieces.extend(factor for factor, _ in squarefree_decomposition(f, var))

    elements: List[Polynomial] = []
    for piece in pieces:
        elements = _insert_coprime(elements, piece, var)
    ordered = tuple(sorted(set(elements), key=lambda p: p.sort_key()))
    logger.debug(f"Squarefree basis in x{var + 1}: {len(polys)} inputs -> {len(ordered)} elements")
    return BasisSet(var=var, elements=ordered)
