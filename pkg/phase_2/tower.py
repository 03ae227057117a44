"""
Phase 2: Algebraic Sample-Point Towers

A Tower is the sample point (alpha_1, ..., alpha_k) of a cell. Polynomials
are evaluated on it symbolically: a rational coordinate is substituted, an
irrational coordinate i stays as the symbol x_i and is reduced modulo its
defining polynomial. What is left is a polynomial in the free variables
whose coefficients are polynomials in the tower symbols.

Deciding whether such a coefficient vanishes at the tower is the one
genuinely hard question here. Interval evaluation certifies a nonzero sign
quickly. When the enclosure keeps straddling 0, the norm R(t) (iterated
resultants of t - e with the defining polynomials) gives a lower bound on
|e(alpha)| for a nonzero value, so a narrow enough enclosure certifies 0.

Usage:
    from phase_2.tower import Tower, sign_at, substitute_tower

    sign_at(parse_polynomial("x^2 - 2", ["x"]), Tower([sqrt2]))      # 0
    substitute_tower(circle, Tower([0]), keep=1).polynomial         # y^2 - 1
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from phase_1.basis import gcd_list
from phase_1.polynomial import Monomial, Polynomial, PolynomialError, exact_divide
from phase_1.resultant import resultant
from phase_2.algebraic import Number, RealAlgebraicNumber, real_roots
from phase_2.interval import Interval, evaluate_on_box

logger = logging.getLogger(__name__)

# Enclosure rounds tried before paying for the norm computation.
NORM_AFTER_ROUNDS = 3


class TowerDegeneracyError(ArithmeticError):
    """The norm of a polynomial over the tower vanished and could not be repaired."""


class Tower:
    """
    Immutable sequence of sample coordinates.

    Attributes:
        coordinates: RealAlgebraicNumber per variable, x1 first.
    """

    def __init__(self, coordinates: Sequence[Union[RealAlgebraicNumber, Number]] = ()):
        self.coordinates: Tuple[RealAlgebraicNumber, ...] = tuple(
            RealAlgebraicNumber.coerce(c) for c in coordinates
        )

    def __len__(self) -> int:
        return len(self.coordinates)

    def __getitem__(self, index: int) -> RealAlgebraicNumber:
        return self.coordinates[index]

    def __iter__(self) -> Iterator[RealAlgebraicNumber]:
        return iter(self.coordinates)

    def __repr__(self) -> str:
        return "Tower(" + ", ".join(str(c) for c in self.coordinates) + ")"

    def extend(self, coordinate: Union[RealAlgebraicNumber, Number]) -> "Tower":
        return Tower(self.coordinates + (RealAlgebraicNumber.coerce(coordinate),))

    def prefix(self, length: int) -> "Tower":
        return Tower(self.coordinates[:length])

    def replace(self, index: int, coordinate: RealAlgebraicNumber) -> "Tower":
        coords = list(self.coordinates)
        coords[index] = coordinate
        return Tower(coords)

    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.coordinates)

    def rational_values(self) -> Tuple[Fraction, ...]:
        return tuple(c.value for c in self.coordinates)

    def symbols(self) -> List[int]:
        """Indices of irrational coordinates."""
        return [i for i, c in enumerate(self.coordinates) if not c.is_rational]

    # ── substitution ──

    def substitute_coordinate(self, f: Polynomial, index: int) -> Polynomial:
        coord = self.coordinates[index]
        if coord.is_rational:
            return f.evaluate(index, coord.value)
        if f.degree(index) < coord.degree:
            return f
        return f.remainder_by(index, coord.poly.embed_univariate(index, f.nvars))

    def reduce(self, f: Polynomial, count: Optional[int] = None) -> Polynomial:
        """Substitute the first `count` coordinates (default: all that fit the ring)."""
        count = min(len(self), f.nvars) if count is None else count
        if count > len(self):
            raise PolynomialError(f"tower has {len(self)} coordinates, {count} requested")
        for index in range(count):
            f = self.substitute_coordinate(f, index)
        return f

    # ── sign certification ──

    def box(self, nvars: int) -> List[Interval]:
        sides = [c.interval for c in self.coordinates[:nvars]]
        return sides + [Interval.point(0)] * (nvars - len(sides))

    def norm(self, e: Polynomial) -> Polynomial:
        """1-variable R(t), nonzero, with R(e(alpha)) = 0."""
        n = e.nvars
        t = Polynomial.variable(n + 1, n)
        acc = t - e.extend(n + 1)
        for index in sorted(e.variables(), reverse=True):
            if acc.degree(index) < 1:
                continue
            defining = self.coordinates[index].poly.embed_univariate(index, n + 1)
            acc = resultant(acc, defining, index)
        return acc.as_univariate(n)

    def _zero_bound(self, e: Polynomial) -> Optional[Fraction]:
        """Lower bound on |e(alpha)| when nonzero; None when e(alpha) is certainly 0."""
        coeffs = self.norm(e).univariate_coefficients(0)
        low = next(i for i, c in enumerate(coeffs) if c)
        tail = coeffs[low:]
        if len(tail) == 1:
            return None
        a0 = abs(tail[0])
        top = max(abs(c) for c in tail[1:])
        return a0 / (a0 + top)

    def certified_sign(self, e: Polynomial) -> int:
        """Exact sign of a reduced polynomial in the tower symbols."""
        if e.is_constant():
            c = e.constant_value()
            return (c > 0) - (c < 0)
        symbols = sorted(e.variables())
        if symbols[-1] >= len(self) or any(self.coordinates[i].is_rational for i in symbols):
            raise PolynomialError(f"{e} still has variables that are not tower symbols")
        bound: Optional[Fraction] = None
        rounds = 0
        while True:
            enclosure = evaluate_on_box(e, self.box(e.nvars))
            sign = enclosure.sign()
            if sign is not None:
                return sign
            rounds += 1
            if rounds == NORM_AFTER_ROUNDS:
                bound = self._zero_bound(e)
                if bound is None:
                    return 0
            if bound is not None and enclosure.magnitude() < bound:
                return 0
            for index in symbols:
                self.coordinates[index].bisect()

    def sign(self, f: Polynomial) -> int:
        """Sign of f at the tower; every variable of f must be a tower coordinate."""
        if f.variables() and max(f.variables()) >= len(self):
            raise PolynomialError(f"{f} has variables beyond the {len(self)} tower coordinates")
        return self.certified_sign(self.reduce(f, min(len(self), f.nvars)))


# ── Polynomials over the tower ──────────────────────────────────────────────

@dataclass
class TowerPolynomial:
    """
    A polynomial whose first `level` variables were substituted by a tower.

    Attributes:
        polynomial: Remaining polynomial; variables below `level` are tower symbols.
        tower:      The tower the symbols refer to.
        level:      Number of substituted coordinates.
    """
    polynomial: Polynomial
    tower: Tower
    level: int

    def is_zero(self) -> bool:
        return self.polynomial.is_zero()

    def is_rational(self) -> bool:
        """True when no tower symbol remains."""
        return not any(i < self.level for i in self.polynomial.variables())

    def degree(self, var: int) -> int:
        return self.polynomial.degree(var)

    def groups(self) -> Dict[Monomial, Polynomial]:
        return coefficient_groups(self.polynomial, self.level)


def coefficient_groups(f: Polynomial, level: int) -> Dict[Monomial, Polynomial]:
    """Split f by monomials in the free variables (index >= level)."""
    groups: Dict[Monomial, Dict[Monomial, Fraction]] = {}
    for mono, c in f.terms.items():
        free = (0,) * level + mono[level:]
        groups.setdefault(free, {})[mono[:level] + (0,) * (f.nvars - level)] = c
    return {free: Polynomial(f.nvars, terms) for free, terms in groups.items()}


def prune(f: Polynomial, tower: Tower, level: int) -> Polynomial:
    """Drop free-monomial groups whose symbolic coefficient vanishes at the tower."""
    kept: Dict[Monomial, Fraction] = {}
    for free, coeff in coefficient_groups(f, level).items():
        if not coeff.is_constant() and tower.certified_sign(coeff) == 0:
            continue
        for mono, c in coeff.terms.items():
            kept[tuple(a + b for a, b in zip(mono, free))] = c
    return Polynomial(f.nvars, kept)


def substitute_tower(f: Polynomial, tower: Tower, keep: int) -> TowerPolynomial:
    """Substitute all but the last `keep` variables of f and prune vanishing groups."""
    count = f.nvars - keep
    if count < 0 or count > len(tower):
        raise PolynomialError(
            f"cannot keep {keep} of {f.nvars} variables with a {len(tower)}-coordinate tower"
        )
    reduced = prune(tower.reduce(f, count), tower, count)
    return TowerPolynomial(reduced, tower.prefix(count), count)


def sign_at(f: Polynomial, tower: Union[Tower, Sequence[Union[RealAlgebraicNumber, Number]]]) -> int:
    tower = tower if isinstance(tower, Tower) else Tower(tower)
    return tower.sign(f)


def is_zero_at(f: Polynomial, tower: Union[Tower, Sequence]) -> bool:
    return sign_at(f, tower) == 0


# ── Roots over a tower ──────────────────────────────────────────────────────

def _univariate_parts(g: Polynomial, index: int) -> List[Polynomial]:
    """Coefficients of g with respect to every variable except x_index, as 1-variable polynomials."""
    groups: Dict[Monomial, Dict[Monomial, Fraction]] = {}
    for mono, c in g.terms.items():
        rest = mono[:index] + (0,) + mono[index + 1:]
        groups.setdefault(rest, {})[tuple(e if i == index else 0 for i, e in enumerate(mono))] = c
    return [Polynomial(g.nvars, terms).as_univariate(index) for terms in groups.values()]


def _split_defining(coord: RealAlgebraicNumber, common: Polynomial, tower: Tower, index: int) -> RealAlgebraicNumber:
    """The factor of coord.poly (common or its cofactor) that alpha is a root of."""
    cofactor = exact_divide(coord.poly, common)
    on_common = tower.certified_sign(common.embed_univariate(index, index + 1)) == 0
    return RealAlgebraicNumber(common if on_common else cofactor, coord.isolation)


def _repair_degenerate(f: Polynomial, tower: Tower, symbols: Sequence[int]) -> Tower:
    """
    Shrink the defining polynomial at which the iterated norm of f vanishes.

    res_{x_i}(g, p_i) = 0 means g vanishes identically at some roots of p_i;
    those roots are the common factor of p_i with every coefficient of g in x_i.
    """
    g = f
    for index in reversed(symbols):
        if g.degree(index) < 1:
            continue
        coord = tower[index]
        step = resultant(g, coord.poly.embed_univariate(index, f.nvars), index)
        if not step.is_zero():
            g = step
            continue
        common = gcd_list([coord.poly] + _univariate_parts(g, index))
        if 0 < common.degree(0) < coord.degree:
            smaller = _split_defining(coord, common, tower, index)
            logger.warning(f"Replaced defining polynomial of coordinate {index + 1} by {smaller.poly}")
            return tower.replace(index, smaller)
        break
    raise TowerDegeneracyError(f"norm of {f} vanishes over {tower}")


def _multiplicity(f: Polynomial, extended: Tower, var: int) -> int:
    """Order of vanishing in x_var at the last tower coordinate (0 if f does not vanish)."""
    order = 0
    current = f
    while not current.is_zero():
        value = current.scale(Fraction(1, factorial(order)))
        if extended.certified_sign(extended.reduce(value, var + 1)) != 0:
            return order
        current = current.derivative(var)
        order += 1
    raise RuntimeError(f"all derivatives of {f} vanish at {extended}")


def roots_over_tower(f: Polynomial, tower: Tower, var: int) -> List[Tuple[RealAlgebraicNumber, int]]:
    """
    Real roots in x_var, with multiplicities, of a pruned polynomial over a tower.

    f may involve the tower symbols (irrational coordinates below var) and x_var,
    nothing else. Its leading coefficient in x_var must not vanish at the tower.
    """
    if f.is_zero():
        raise PolynomialError("roots of the zero polynomial over a tower")
    symbols = sorted(f.variables() - {var})
    if not symbols:
        return real_roots(f, var)
    if any(i >= var or tower[i].is_rational for i in symbols):
        raise PolynomialError(f"{f} is not reduced over the tower")
    base = tower.prefix(var)

    for _ in range(sum(tower[i].degree for i in symbols) + 1):
        norm = f
        for index in reversed(symbols):
            if norm.degree(index) >= 1:
                norm = resultant(norm, base[index].poly.embed_univariate(index, f.nvars), index)
        if not norm.is_zero():
            break
        base = _repair_degenerate(f, base, symbols)
        f = prune(base.reduce(f, var), base, var)
        symbols = sorted(f.variables() - {var})
        if not symbols:
            return real_roots(f, var)
    else:
        raise TowerDegeneracyError(f"norm of {f} keeps vanishing over {tower}")

    found: List[Tuple[RealAlgebraicNumber, int]] = []
    for candidate, _ in real_roots(norm, var):
        multiplicity = _multiplicity(f, base.extend(candidate), var)
        if multiplicity:
            found.append((candidate, multiplicity))
    logger.debug(f"{len(found)} real roots over tower from a degree-{norm.degree(var)} norm")
    return found
