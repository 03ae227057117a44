"""
Phase 1: Resultants and Discriminants

Resultants are computed with the subresultant pseudo-remainder sequence,
which keeps every intermediate exact by dividing out the predictable
factor g * h^delta at each step. A Sylvester-matrix determinant is kept
alongside as a slow, independent cross-check.

Sign convention: res(y - a, y - b) = a - b, the Sylvester determinant
with the rows of f first.
"""

import logging
from typing import List

from phase_1.polynomial import Polynomial, PolynomialError, exact_divide, pseudo_remainder

logger = logging.getLogger(__name__)


def _check_pair(f: Polynomial, g: Polynomial, var: int) -> None:
    if f.nvars != g.nvars:
        raise PolynomialError("ring mismatch in resultant")
    if f.is_zero() or g.is_zero():
        raise PolynomialError("resultant of the zero polynomial is undefined")
    if f.degree(var) < 1 or g.degree(var) < 1:
        raise PolynomialError(
            f"resultant needs positive degree in x{var + 1}: "
            f"got {f.degree(var)} and {g.degree(var)}"
        )


def resultant(f: Polynomial, g: Polynomial, var: int) -> Polynomial:
    """Res_{x_var}(f, g), a polynomial free of x_var."""
    _check_pair(f, g, var)
    nvars = f.nvars
    a, b = f, g
    sign = 1
    if a.degree(var) < b.degree(var):
        a, b = b, a
        if a.degree(var) % 2 and b.degree(var) % 2:
            sign = -1

    g_acc = Polynomial.one(nvars)
    h_acc = Polynomial.one(nvars)
    while True:
        da, db = a.degree(var), b.degree(var)
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        remainder = pseudo_remainder(a, b, var)
        a = b
        if remainder.is_zero():
            return Polynomial.zero(nvars)
        b = exact_divide(remainder, g_acc * h_acc ** delta)
        g_acc = a.leading_coefficient(var)
        if delta == 1:
            h_acc = g_acc
        elif delta > 1:
            h_acc = exact_divide(g_acc ** delta, h_acc ** (delta - 1))
        if b.degree(var) < 1:
            break

    da = a.degree(var)
    h_acc = exact_divide(b ** da, h_acc ** (da - 1))
    return h_acc.scale(sign)


def discriminant(f: Polynomial, var: int) -> Polynomial:
    """disc_{x_var}(f) = (-1)^(d(d-1)/2) * res(f, f') / lc(f), for degree d >= 2."""
    d = f.degree(var)
    if d < 2:
        raise PolynomialError(f"discriminant needs degree >= 2 in x{var + 1}, got {d}")
    res = resultant(f, f.derivative(var), var)
    quotient = exact_divide(res, f.leading_coefficient(var))
    return -quotient if (d * (d - 1) // 2) % 2 else quotient


# ── Sylvester cross-check ───────────────────────────────────────────────────

def sylvester_matrix(f: Polynomial, g: Polynomial, var: int) -> List[List[Polynomial]]:
    """(m + n) x (m + n) Sylvester matrix, n rows of f's coefficients then m of g's."""
    _check_pair(f, g, var)
    m, n = f.degree(var), g.degree(var)
    size = m + n
    zero = Polynomial.zero(f.nvars)
    fc = list(reversed(f.coefficients(var)))
    gc = list(reversed(g.coefficients(var)))
    rows: List[List[Polynomial]] = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - i - len(fc)))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - i - len(gc)))
    return rows


def determinant(matrix: List[List[Polynomial]]) -> Polynomial:
    """Fraction-free Bareiss elimination with row swaps."""
    size = len(matrix)
    if size == 0:
        raise PolynomialError("determinant of an empty matrix")
    nvars = matrix[0][0].nvars
    rows = [list(r) for r in matrix]
    sign = 1
    previous = Polynomial.one(nvars)
    for k in range(size - 1):
        if rows[k][k].is_zero():
            swap = next((i for i in range(k + 1, size) if not rows[i][k].is_zero()), None)
            if swap is None:
                return Polynomial.zero(nvars)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = exact_divide(pivot * rows[i][j] - rows[i][k] * rows[k][j], previous)
        previous = pivot
    det = rows[size - 1][size - 1]
    return -det if sign < 0 else det


def sylvester_resultant(f: Polynomial, g: Polynomial, var: int) -> Polynomial:
    return determinant(sylvester_matrix(f, g, var))
