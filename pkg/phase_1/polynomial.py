"""
Phase 1: Sparse Multivariate Polynomials

Exact polynomial arithmetic over the rationals in a fixed variable order
x1 < x2 < ... < xn. Variables are addressed by 0-based index, so the main
(last) variable of an n-variable ring is index n - 1.

Usage:
    from phase_1.polynomial import Polynomial

    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    circle = x**2 + y**2 - 1
    circle.degree(1)                 # 2
    circle.leading_coefficient(1)    # 1
    circle.evaluate(0, 0)            # y^2 - 1 (still a 2-variable polynomial)
"""

import logging
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, Union

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Number = Union[int, Fraction]


class PolynomialError(ValueError):
    """Invalid polynomial operation: ring mismatch, bad variable index, zero input."""


class InexactDivisionError(ArithmeticError):
    """An exact division left a nonzero remainder."""


def grlex_key(monomial: Monomial) -> Tuple[int, Monomial]:
    """Graded-lex key: total degree first, then exponents with x1 most significant."""
    return (sum(monomial), monomial)


class Polynomial:
    """
    Immutable sparse polynomial in `nvars` variables with Fraction coefficients.

    Attributes:
        nvars: Number of variables of the ambient ring.

    Terms are kept in a dict from exponent tuple to nonzero coefficient;
    zero coefficients are never stored, so the zero polynomial has no terms.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping[Sequence[int], Number]] = None):
        if nvars < 0:
            raise PolynomialError(f"variable count must be non-negative, got {nvars}")
        clean: Dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise PolynomialError(
                    f"monomial {mono} has {len(mono)} exponents, ring has {nvars} variables"
                )
            if any(e < 0 for e in mono):
                raise PolynomialError(f"negative exponent in monomial {mono}")
            value = clean.get(mono, Fraction(0)) + Fraction(coeff)
            if value:
                clean[mono] = value
            else:
                clean.pop(mono, None)
        self.nvars = nvars
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # caller guarantees valid monomials and nonzero Fraction coefficients
        poly = object.__new__(cls)
        poly.nvars = nvars
        poly._terms = terms
        poly._hash = None
        return poly

    # ── Constructors ─────────────────────────────────────────────────────────

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Number) -> "Polynomial":
        value = Fraction(value)
        return cls._raw(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        _check_index(nvars, index)
        mono = [0] * nvars
        mono[index] = 1
        return cls._raw(nvars, {tuple(mono): Fraction(1)})

    @classmethod
    def from_coefficients(cls, coeffs: Sequence["Polynomial"], var: int, nvars: int) -> "Polynomial":
        """Rebuild sum(coeffs[k] * x_var^k) from a low-to-high coefficient list."""
        _check_index(nvars, var)
        terms: Dict[Monomial, Fraction] = {}
        for k, c in enumerate(coeffs):
            if c.nvars != nvars:
                raise PolynomialError("coefficient ring does not match")
            for mono, value in c._terms.items():
                if mono[var]:
                    raise PolynomialError(f"coefficient involves the main variable x{var + 1}")
                shifted = mono[:var] + (k,) + mono[var + 1:]
                terms[shifted] = value
        return cls._raw(nvars, terms)

    @classmethod
    def from_univariate(cls, coeffs: Sequence[Number], var: int = 0, nvars: int = 1) -> "Polynomial":
        """Build a polynomial in x_var alone from rational coefficients, low to high."""
        _check_index(nvars, var)
        terms: Dict[Monomial, Fraction] = {}
        for k, c in enumerate(coeffs):
            c = Fraction(c)
            if c:
                mono = [0] * nvars
                mono[var] = k
                terms[tuple(mono)] = c
        return cls._raw(nvars, terms)

    # ── Basic queries ────────────────────────────────────────────────────────

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        """Copy of the term dictionary."""
        return dict(self._terms)

    def items(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_value(self) -> Fraction:
        """Coefficient of the constant monomial."""
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def variables(self) -> Set[int]:
        """Indices of variables that actually occur."""
        found: Set[int] = set()
        for mono in self._terms:
            found.update(i for i, e in enumerate(mono) if e)
        return found

    def degree(self, var: int) -> int:
        """Degree in x_var; -1 for the zero polynomial."""
        _check_index(self.nvars, var)
        if not self._terms:
            return -1
        return max(m[var] for m in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def min_degree(self, var: int) -> int:
        """Largest k such that x_var^k divides the polynomial."""
        _check_index(self.nvars, var)
        if not self._terms:
            return 0
        return min(m[var] for m in self._terms)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise PolynomialError("zero polynomial has no leading term")
        return max(self._terms, key=grlex_key)

    def leading_coeff(self) -> Fraction:
        """Graded-lex leading coefficient (a rational number)."""
        return self._terms[self.leading_monomial()]

    def coefficients(self, var: int) -> List["Polynomial"]:
        """Coefficients with respect to x_var, low to high; [] for zero."""
        deg = self.degree(var)
        buckets: List[Dict[Monomial, Fraction]] = [{} for _ in range(deg + 1)]
        for mono, c in self._terms.items():
            buckets[mono[var]][mono[:var] + (0,) + mono[var + 1:]] = c
        return [Polynomial._raw(self.nvars, b) for b in buckets]

    def coefficient(self, var: int, k: int) -> "Polynomial":
        _check_index(self.nvars, var)
        return Polynomial._raw(
            self.nvars,
            {m[:var] + (0,) + m[var + 1:]: c for m, c in self._terms.items() if m[var] == k},
        )

    def leading_coefficient(self, var: int) -> "Polynomial":
        if not self._terms:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return self.coefficient(var, self.degree(var))

    def trailing_coefficient(self, var: int) -> "Polynomial":
        """Coefficient of x_var^0."""
        return self.coefficient(var, 0)

    def univariate_coefficients(self, var: int) -> List[Fraction]:
        """Rational coefficient list, low to high, of a polynomial in x_var alone."""
        if self.variables() - {var}:
            raise PolynomialError(f"polynomial is not univariate in x{var + 1}: {self}")
        coeffs = [Fraction(0)] * (max(self.degree(var), -1) + 1)
        for mono, c in self._terms.items():
            coeffs[mono[var]] = c
        return coeffs

    def sort_key(self) -> Tuple:
        """Deterministic ordering key: total degree, then terms in grlex order."""
        return (
            self.total_degree(),
            tuple((m, c.numerator, c.denominator) for m, c in self.items()),
        )

    # ── Arithmetic ───────────────────────────────────────────────────────────

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise PolynomialError(
                    f"ring mismatch: {self.nvars} vs {other.nvars} variables"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            value = terms.get(mono, 0) + c
            if value:
                terms[mono] = value
            else:
                terms.pop(mono, None)
        return Polynomial._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                value = terms.get(mono, 0) + c1 * c2
                if value:
                    terms[mono] = value
                else:
                    terms.pop(mono, None)
        return Polynomial._raw(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise PolynomialError("negative powers are not polynomials")
        result = Polynomial.one(self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, factor: Number) -> "Polynomial":
        factor = Fraction(factor)
        if not factor:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {m: c * factor for m, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ── Calculus and substitution ────────────────────────────────────────────

    def derivative(self, var: int) -> "Polynomial":
        _check_index(self.nvars, var)
        terms: Dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            e = mono[var]
            if e:
                terms[mono[:var] + (e - 1,) + mono[var + 1:]] = c * e
        return Polynomial._raw(self.nvars, terms)

    def evaluate(self, var: int, value: Number) -> "Polynomial":
        """Substitute x_var = value; the ring keeps its variable count."""
        _check_index(self.nvars, var)
        value = Fraction(value)
        terms: Dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            reduced = mono[:var] + (0,) + mono[var + 1:]
            v = terms.get(reduced, 0) + c * value ** mono[var]
            if v:
                terms[reduced] = v
            else:
                terms.pop(reduced, None)
        return Polynomial._raw(self.nvars, terms)

    def value_at(self, point: Sequence[Number]) -> Fraction:
        """Evaluate at a full rational point of length nvars."""
        if len(point) != self.nvars:
            raise PolynomialError(f"point has {len(point)} coordinates, ring has {self.nvars}")
        point = [Fraction(p) for p in point]
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = c
            for x, e in zip(point, mono):
                if e:
                    term *= x ** e
            total += term
        return total

    def shift(self, var: int, amount: Number) -> "Polynomial":
        """Return f with x_var replaced by x_var + amount (binomial Taylor shift)."""
        _check_index(self.nvars, var)
        amount = Fraction(amount)
        if not amount:
            return self
        terms: Dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            e = mono[var]
            for j in range(e + 1):
                shifted = mono[:var] + (j,) + mono[var + 1:]
                v = terms.get(shifted, 0) + c * comb(e, j) * amount ** (e - j)
                if v:
                    terms[shifted] = v
                else:
                    terms.pop(shifted, None)
        return Polynomial._raw(self.nvars, terms)

    def remainder_by(self, var: int, divisor: "Polynomial") -> "Polynomial":
        """
        Remainder of division by a polynomial in x_var alone.

        Used to reduce tower symbols modulo their defining polynomials; the
        divisor's leading coefficient is a nonzero rational, so no pseudo
        scaling is needed.
        """
        coeffs = divisor.univariate_coefficients(var)
        d = len(coeffs) - 1
        if d < 1:
            raise PolynomialError("divisor must have positive degree")
        if self.degree(var) < d:
            return self
        lead = coeffs[-1]
        rows = self.coefficients(var)
        for k in range(len(rows) - 1, d - 1, -1):
            top = rows[k]
            if top.is_zero():
                continue
            factor = top.scale(1 / lead)
            for j in range(d):
                if coeffs[j]:
                    rows[k - d + j] = rows[k - d + j] - factor.scale(coeffs[j])
            rows[k] = Polynomial.zero(self.nvars)
        return Polynomial.from_coefficients(rows[:d], var, self.nvars)

    # ── Ring changes ─────────────────────────────────────────────────────────

    def extend(self, nvars: int) -> "Polynomial":
        """Embed into a ring with more variables appended after the existing ones."""
        if nvars < self.nvars:
            raise PolynomialError("extend cannot shrink the ring")
        pad = (0,) * (nvars - self.nvars)
        return Polynomial._raw(nvars, {m + pad: c for m, c in self._terms.items()})

    def truncate(self, nvars: int) -> "Polynomial":
        """Drop trailing variables that do not occur."""
        if nvars > self.nvars:
            raise PolynomialError("truncate cannot grow the ring")
        if any(any(m[nvars:]) for m in self._terms):
            raise PolynomialError(f"polynomial involves variables beyond x{nvars}")
        return Polynomial._raw(nvars, {m[:nvars]: c for m, c in self._terms.items()})

    def as_univariate(self, var: int) -> "Polynomial":
        """Copy of a polynomial in x_var alone as a 1-variable polynomial."""
        return Polynomial.from_univariate(self.univariate_coefficients(var))

    def embed_univariate(self, var: int, nvars: int) -> "Polynomial":
        """Place a 1-variable polynomial into variable x_var of a larger ring."""
        if self.nvars != 1:
            raise PolynomialError("embed_univariate expects a 1-variable polynomial")
        return Polynomial.from_univariate(self.univariate_coefficients(0), var, nvars)

    # ── Normal forms ─────────────────────────────────────────────────────────

    def integer_content(self) -> Fraction:
        """Rational c with self / c having coprime integer coefficients (c > 0)."""
        if not self._terms:
            return Fraction(1)
        den = lcm(*(c.denominator for c in self._terms.values()))
        num = gcd(*(int(c * den) for c in self._terms.values()))
        return Fraction(num, den)

    def normalize(self) -> "Polynomial":
        """Integer primitive representative with positive graded-lex leading coefficient."""
        if not self._terms:
            return self
        factor = self.integer_content()
        if self.leading_coeff() < 0:
            factor = -factor
        return self.scale(1 / factor)

    def integer_coefficients(self) -> Dict[Monomial, int]:
        """Terms of a normalized copy as plain ints."""
        return {m: int(c) for m, c in self.normalize()._terms.items()}

    # ── Display ──────────────────────────────────────────────────────────────

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        """Render terms in descending graded-lex order, e.g. "-y*z^2 + x*w"."""
        names = list(names) if names is not None else default_names(self.nvars)
        if len(names) < self.nvars:
            raise PolynomialError("not enough variable names")
        if not self._terms:
            return "0"
        parts: List[str] = []
        for index, (mono, c) in enumerate(self.items()):
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            if index == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.format()!r})"


def default_names(nvars: int) -> List[str]:
    """x, y, z, w for up to four variables, x1..xn beyond that."""
    if nvars <= 4:
        return ["x", "y", "z", "w"][:nvars]
    return [f"x{i + 1}" for i in range(nvars)]


def _check_index(nvars: int, var: int) -> None:
    if not 0 <= var < nvars:
        raise PolynomialError(f"variable index {var} out of range for {nvars} variables")


# ── Division ────────────────────────────────────────────────────────────────

def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """
    Quotient f / g, raising InexactDivisionError when g does not divide f.

    Multivariate division by the lex leading term; exact division never
    depends on the term order, lex just makes termination obvious.
    """
    if f.nvars != g.nvars:
        raise PolynomialError("ring mismatch in exact_divide")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    if g.is_constant():
        return f.scale(1 / g.constant_value())
    lead = max(g._terms)
    lead_coeff = g._terms[lead]
    remainder = dict(f._terms)
    quotient: Dict[Monomial, Fraction] = {}
    while remainder:
        top = max(remainder)
        if any(a < b for a, b in zip(top, lead)):
            raise InexactDivisionError(f"{g} does not divide {f}")
        q_mono = tuple(a - b for a, b in zip(top, lead))
        q_coeff = remainder[top] / lead_coeff
        quotient[q_mono] = q_coeff
        for mono, c in g._terms.items():
            target = tuple(a + b for a, b in zip(q_mono, mono))
            v = remainder.get(target, 0) - q_coeff * c
            if v:
                remainder[target] = v
            else:
                remainder.pop(target, None)
    return Polynomial._raw(f.nvars, quotient)


def divides(g: Polynomial, f: Polynomial) -> bool:
    try:
        exact_divide(f, g)
    except InexactDivisionError:
        return False
    return True


def pseudo_remainder(f: Polynomial, g: Polynomial, var: int) -> Polynomial:
    """prem(f, g) = lc(g)^(deg f - deg g + 1) * f mod g, with respect to x_var."""
    dg = g.degree(var)
    if dg < 0:
        raise ZeroDivisionError("pseudo-remainder by the zero polynomial")
    df = f.degree(var)
    if df < dg:
        return f
    lead = g.leading_coefficient(var)
    x = Polynomial.variable(f.nvars, var)
    remainder = f
    steps = df - dg + 1
    while not remainder.is_zero() and remainder.degree(var) >= dg:
        dr = remainder.degree(var)
        top = remainder.leading_coefficient(var)
        remainder = remainder * lead - top * x ** (dr - dg) * g
        steps -= 1
    if steps:
        remainder = remainder * lead ** steps
    return remainder


def expand_about(f: Polynomial, point: Sequence[Number]) -> Polynomial:
    """
    Rewrite f in powers of (x_i - point_i) for the first len(point) variables.

    The result is a polynomial in the shifted variables: its coefficient of
    u1^a1 * ... * uk^ak is the Taylor coefficient of f at the point.
    """
    if len(point) > f.nvars:
        raise PolynomialError("expansion point has more coordinates than the ring")
    result = f
    for var, value in enumerate(point):
        result = result.shift(var, value)
    return result


def monomial(nvars: int, exponents: Iterable[int], coeff: Number = 1) -> Polynomial:
    return Polynomial(nvars, {tuple(exponents): coeff})
