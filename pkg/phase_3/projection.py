"""
Phase 3: Projection Operators

Projects a squarefree basis in n variables to a set of polynomials in the
first n - 1 variables. Three operators share one collector:

    Lazard          leading coefficients, trailing coefficients,
                    discriminants, pairwise resultants
    McCallum        Lazard plus every middle coefficient
    Brown-McCallum  Lazard without the trailing coefficients

Every output polynomial is normalized the same way (squarefree part,
integer primitive, positive leading coefficient, constants dropped), so the
three sets can be compared as plain sets. Each element records which basis
elements produced it and how.

Usage:
    from phase_3.projection import lazard_projection

    basis = squarefree_basis([parse_polynomial("x^2 + y^2 - 1", ["x", "y"])], 1)
    lazard_projection(basis).polynomials     # (x^2 - 1,) in 1 variable
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from phase_1.basis import BasisSet, squarefree_part
from phase_1.polynomial import Polynomial, PolynomialError
from phase_1.resultant import discriminant, resultant

logger = logging.getLogger(__name__)


class ProvenanceKind(str, Enum):
    LEADING = "leading-coeff"
    TRAILING = "trailing-coeff"
    DISCRIMINANT = "discriminant"
    RESULTANT = "resultant-of-pair"
    MIDDLE = "middle-coeff"
    CONTENT = "content"


@dataclass(frozen=True)
class Provenance:
    """
    Where a projection polynomial came from.

    Attributes:
        kind:    Which clause of the operator produced it.
        sources: Indices of the basis elements (or input polynomials for contents).
    """
    kind: ProvenanceKind
    sources: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "sources": list(self.sources)}


@dataclass(frozen=True)
class ProjectionEntry:
    polynomial: Polynomial
    provenance: Tuple[Provenance, ...]


@dataclass(frozen=True)
class ProjectionSet:
    """
    Normalized projection polynomials in `nvars` variables.

    Attributes:
        nvars:   Variable count of the projected polynomials (one fewer than the basis).
        entries: Entries in a deterministic order, one per distinct polynomial.
    """
    nvars: int
    entries: Tuple[ProjectionEntry, ...] = ()

    @property
    def polynomials(self) -> Tuple[Polynomial, ...]:
        return tuple(e.polynomial for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, poly: Polynomial) -> bool:
        return poly in set(self.polynomials)

    def issubset(self, other: "ProjectionSet") -> bool:
        return set(self.polynomials) <= set(other.polynomials)

    def difference(self, other: "ProjectionSet") -> List[Polynomial]:
        theirs = set(other.polynomials)
        return [p for p in self.polynomials if p not in theirs]

    def provenance_of(self, poly: Polynomial) -> Tuple[Provenance, ...]:
        for entry in self.entries:
            if entry.polynomial == poly:
                return entry.provenance
        raise KeyError(f"{poly} is not in the projection set")

    def with_contents(self, contents: Sequence[Polynomial]) -> "ProjectionSet":
        """Add normalized contents of the original inputs (tagged by input index)."""
        collector = _Collector(self.nvars)
        for entry in self.entries:
            for tag in entry.provenance:
                collector.add(entry.polynomial, tag.kind, tag.sources)
        for index, content in enumerate(contents):
            collector.add(content, ProvenanceKind.CONTENT, (index,))
        return collector.build()

    def degree_stats(self) -> Dict[str, int]:
        degrees = [p.total_degree() for p in self.polynomials]
        return {"max_total_degree": max(degrees, default=0), "sum_total_degree": sum(degrees)}


def normalize_projection_polynomial(poly: Polynomial) -> Optional[Polynomial]:
    """Squarefree, primitive, positive representative; None for zero and constants."""
    if poly.is_zero() or poly.is_constant():
        return None
    normalized = squarefree_part(poly)
    return None if normalized.is_constant() else normalized


class _Collector:
    def __init__(self, nvars: int):
        self.nvars = nvars
        self.tags: Dict[Polynomial, List[Provenance]] = {}

    def add(self, poly: Polynomial, kind: ProvenanceKind, sources: Tuple[int, ...]) -> None:
        if poly.nvars != self.nvars:
            poly = poly.truncate(self.nvars)
        normalized = normalize_projection_polynomial(poly)
        if normalized is None:
            return
        tag = Provenance(kind, tuple(sources))
        tags = self.tags.setdefault(normalized, [])
        if tag not in tags:
            tags.append(tag)

    def build(self) -> ProjectionSet:
        ordered = sorted(self.tags, key=lambda p: p.sort_key())
        return ProjectionSet(
            nvars=self.nvars,
            entries=tuple(ProjectionEntry(p, tuple(self.tags[p])) for p in ordered),
        )


def _project(basis: BasisSet, leading: bool, trailing: bool, middle: bool) -> ProjectionSet:
    var = basis.var
    if var < 1:
        raise PolynomialError("projection needs at least 2 variables")
    for f in basis:
        if f.nvars != var + 1:
            raise PolynomialError(f"basis element {f} is not in {var + 1} variables")
    collector = _Collector(var)
    elements = basis.elements
    for i, f in enumerate(elements):
        coeffs = f.coefficients(var)
        if leading:
            collector.add(coeffs[-1], ProvenanceKind.LEADING, (i,))
        if trailing:
            collector.add(coeffs[0], ProvenanceKind.TRAILING, (i,))
        if middle:
            for c in coeffs[1:-1]:
                collector.add(c, ProvenanceKind.MIDDLE, (i,))
        if f.degree(var) >= 2:
            collector.add(discriminant(f, var), ProvenanceKind.DISCRIMINANT, (i,))
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            collector.add(resultant(elements[i], elements[j], var), ProvenanceKind.RESULTANT, (i, j))
    projected = collector.build()
    logger.debug(f"Projected {len(elements)} basis elements in x{var + 1} to {len(projected)} polynomials")
    return projected


def lazard_projection(basis: BasisSet) -> ProjectionSet:
    return _project(basis, leading=True, trailing=True, middle=False)


def mccallum_projection(basis: BasisSet) -> ProjectionSet:
    return _project(basis, leading=True, trailing=True, middle=True)


def brown_mccallum_projection(basis: BasisSet) -> ProjectionSet:
    return _project(basis, leading=True, trailing=False, middle=False)


# ── Comparison report ───────────────────────────────────────────────────────

@dataclass
class ProjectionComparison:
    """
    Side-by-side sizes and containment verdicts of the three operators.

    Attributes:
        lazard, mccallum, brown_mccallum: The three projection sets.
        bm_in_lazard:      P_BM is a subset of P_L.
        lazard_in_mccallum: P_L is a subset of P_M.
        lazard_only:       Witnesses of P_BM being strictly smaller (P_L minus P_BM).
        mccallum_only:     Witnesses of P_L being strictly smaller (P_M minus P_L).
    """
    lazard: ProjectionSet
    mccallum: ProjectionSet
    brown_mccallum: ProjectionSet
    bm_in_lazard: bool = False
    lazard_in_mccallum: bool = False
    lazard_only: List[Polynomial] = field(default_factory=list)
    mccallum_only: List[Polynomial] = field(default_factory=list)

    @property
    def chain_holds(self) -> bool:
        return self.bm_in_lazard and self.lazard_in_mccallum

    def sizes(self) -> Dict[str, int]:
        return {
            "brown_mccallum": len(self.brown_mccallum),
            "lazard": len(self.lazard),
            "mccallum": len(self.mccallum),
        }


def compare_projections(basis: BasisSet) -> ProjectionComparison:
    lazard = lazard_projection(basis)
    mccallum = mccallum_projection(basis)
    brown = brown_mccallum_projection(basis)
    report = ProjectionComparison(
        lazard=lazard,
        mccallum=mccallum,
        brown_mccallum=brown,
        bm_in_lazard=brown.issubset(lazard),
        lazard_in_mccallum=lazard.issubset(mccallum),
        lazard_only=lazard.difference(brown),
        mccallum_only=mccallum.difference(lazard),
    )
    if not report.chain_holds:
        logger.warning(f"Projection containment chain broken for basis of size {len(basis)}")
    return report
