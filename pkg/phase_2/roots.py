"""
Phase 2: Real Root Isolation

Descartes-rule bisection on dense univariate coefficient lists (Fractions,
low to high). Multiplicities come from Yun's decomposition: the squarefree
part is isolated once and each interval is attributed to the factor that
changes sign over it.

A Sturm sequence counter is kept as an independent cross-check.

Usage:
    from phase_2.roots import isolate_real_roots

    isolate_real_roots(parse_polynomial("(y - 1)^2*(y + 2)", ["y"]))
    # [(Interval(-2, -2), 1), (Interval(1, 1), 2)]
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import floor, log2
from typing import List, Optional, Sequence, Tuple

from phase_1.basis import squarefree_decomposition
from phase_1.polynomial import Polynomial, PolynomialError
from phase_2.interval import Interval

logger = logging.getLogger(__name__)

Dense = List[Fraction]


@dataclass(frozen=True)
class IsolatedRoot:
    """
    One real root of a univariate polynomial.

    Attributes:
        interval:     Isolating interval; a point interval for an exact rational root.
                      Open-interval endpoints are never roots of `factor`.
        multiplicity: Multiplicity of the root in the input polynomial.
        factor:       The squarefree Yun factor (1-variable polynomial) the root belongs to.
    """
    interval: Interval
    multiplicity: int
    factor: Polynomial


# ── Dense helpers ───────────────────────────────────────────────────────────

def dup_strip(coeffs: Sequence[Fraction]) -> Dense:
    out = [Fraction(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return out


def dup_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def dup_sign(coeffs: Sequence[Fraction], x: Fraction) -> int:
    v = dup_eval(coeffs, x)
    return (v > 0) - (v < 0)


def dup_taylor_shift(coeffs: Sequence[Fraction], a: Fraction) -> Dense:
    """Coefficients of p(x + a)."""
    c = list(coeffs)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += a * c[j + 1]
    return c


def dup_derivative(coeffs: Sequence[Fraction]) -> Dense:
    return [k * c for k, c in enumerate(coeffs)][1:]


def dup_rem(f: Sequence[Fraction], g: Sequence[Fraction]) -> Dense:
    f = dup_strip(f)
    g = dup_strip(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    while len(f) >= len(g) and f:
        factor = f[-1] / g[-1]
        shift = len(f) - len(g)
        for i, c in enumerate(g):
            f[shift + i] -= factor * c
        f = dup_strip(f)
    return f


def sign_variations(seq: Sequence[Fraction]) -> int:
    signs = [1 if c > 0 else -1 for c in seq if c]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def root_upper_bound(coeffs: Sequence[Fraction]) -> Fraction:
    """Power of two strictly above the Cauchy bound 1 + max|a_i / a_d|."""
    coeffs = dup_strip(coeffs)
    if len(coeffs) < 2:
        return Fraction(1)
    lead = abs(coeffs[-1])
    cauchy = 1 + max(abs(c) / lead for c in coeffs[:-1])
    bound = Fraction(2) ** max(floor(log2(cauchy)) - 1, 0)
    while bound <= cauchy:
        bound *= 2
    return bound


def _descartes_count(coeffs: Sequence[Fraction], lo: Fraction, hi: Fraction) -> int:
    """Sign variations bounding the number of roots in the open interval (lo, hi)."""
    width = hi - lo
    shifted = dup_taylor_shift(coeffs, lo)
    scaled = [c * width ** k for k, c in enumerate(shifted)]
    reciprocal = list(reversed(scaled))
    return sign_variations(dup_taylor_shift(reciprocal, Fraction(1)))


# ── Isolation of a squarefree polynomial ────────────────────────────────────

def _refine_step(coeffs: Sequence[Fraction], lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    mid = (lo + hi) / 2
    s_mid = dup_sign(coeffs, mid)
    if s_mid == 0:
        return mid, mid
    s_lo = dup_sign(coeffs, lo)
    if s_lo:
        return (lo, mid) if s_lo != s_mid else (mid, hi)
    s_hi = dup_sign(coeffs, hi)
    if s_hi:
        return (mid, hi) if s_hi != s_mid else (lo, mid)
    return (lo, mid) if _descartes_count(coeffs, lo, mid) else (mid, hi)


def isolate_squarefree(coeffs: Sequence[Fraction]) -> List[Tuple[Fraction, Fraction]]:
    """
    Disjoint isolating intervals for the real roots of a squarefree polynomial.

    Returns (lo, hi) pairs in increasing order; lo == hi for exact roots.
    Open intervals do not touch each other or any exact root, so their
    endpoints are never roots.
    """
    coeffs = dup_strip(coeffs)
    if len(coeffs) < 2:
        return []
    bound = root_upper_bound(coeffs)
    found: List[Tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        count = _descartes_count(coeffs, lo, hi)
        if count == 0:
            continue
        if count == 1:
            found.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if dup_eval(coeffs, mid) == 0:
            found.append((mid, mid))
        stack.append((mid, hi))
        stack.append((lo, mid))
    found.sort()

    # separate neighbours that share an endpoint
    changed = True
    while changed:
        changed = False
        for i in range(len(found) - 1):
            (a_lo, a_hi), (b_lo, b_hi) = found[i], found[i + 1]
            if a_hi < b_lo:
                continue
            changed = True
            if a_lo != a_hi:
                found[i] = _refine_step(coeffs, a_lo, a_hi)
            if b_lo != b_hi:
                found[i + 1] = _refine_step(coeffs, b_lo, b_hi)
    return found


def refine_interval(coeffs: Sequence[Fraction], lo: Fraction, hi: Fraction, width: Fraction) -> Tuple[Fraction, Fraction]:
    """Bisect an isolating interval of a squarefree polynomial down to `width`."""
    while hi - lo > width:
        lo, hi = _refine_step(coeffs, lo, hi)
    return lo, hi


# ── Public entry points ─────────────────────────────────────────────────────

def _main_variable(f: Polynomial, var: Optional[int]) -> int:
    if var is not None:
        return var
    occurring = f.variables()
    if len(occurring) > 1:
        raise PolynomialError(f"{f} is not univariate")
    return occurring.pop() if occurring else 0


def isolate_roots(f: Polynomial, var: Optional[int] = None) -> List[IsolatedRoot]:
    """Isolated real roots of a univariate polynomial with multiplicities and factors."""
    if f.is_zero():
        raise PolynomialError("the zero polynomial has no isolated roots")
    var = _main_variable(f, var)
    f = f.as_univariate(var)
    factors = squarefree_decomposition(f, 0)
    if not factors:
        return []
    squarefree = Polynomial.one(1)
    for factor, _ in factors:
        squarefree = squarefree * factor
    dense_factors = [(factor, factor.univariate_coefficients(0), k) for factor, k in factors]

    roots: List[IsolatedRoot] = []
    for lo, hi in isolate_squarefree(squarefree.univariate_coefficients(0)):
        for factor, dense, k in dense_factors:
            if lo == hi:
                hit = dup_eval(dense, lo) == 0
            else:
                hit = dup_sign(dense, lo) * dup_sign(dense, hi) < 0
            if hit:
                roots.append(IsolatedRoot(Interval(lo, hi), k, factor))
                break
        else:
            raise RuntimeError(f"isolating interval [{lo}, {hi}] matched no squarefree factor of {f}")
    logger.debug(f"Isolated {len(roots)} real roots of degree-{f.degree(0)} polynomial")
    return roots


def isolate_real_roots(f: Polynomial, var: Optional[int] = None) -> List[Tuple[Interval, int]]:
    """[(interval, multiplicity)] sorted increasingly, pairwise disjoint."""
    return [(r.interval, r.multiplicity) for r in isolate_roots(f, var)]


# ── Sturm cross-check ───────────────────────────────────────────────────────

def sturm_sequence(coeffs: Sequence[Fraction]) -> List[Dense]:
    seq = [dup_strip(coeffs), dup_strip(dup_derivative(coeffs))]
    while seq[-1] and len(seq[-1]) > 1:
        rem = dup_rem(seq[-2], seq[-1])
        if not rem:
            break
        seq.append([-c for c in rem])
    return [s for s in seq if s]


def _variations_at(seq: Sequence[Dense], x: Optional[Fraction], side: int = 0) -> int:
    if x is None:
        # sign at +inf (side 1) or -inf (side -1) is the sign of the leading term
        values = [s[-1] * (side ** (len(s) - 1)) for s in seq]
    else:
        values = [dup_eval(s, x) for s in seq]
    return sign_variations(values)


def sturm_count(f: Polynomial, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None,
                var: Optional[int] = None) -> int:
    """Number of distinct real roots in (lo, hi]; None means unbounded."""
    var = _main_variable(f, var)
    coeffs = f.univariate_coefficients(var)
    if len(dup_strip(coeffs)) < 2:
        return 0
    seq = sturm_sequence(coeffs)
    left = _variations_at(seq, lo, -1)
    right = _variations_at(seq, hi, 1)
    return left - right
