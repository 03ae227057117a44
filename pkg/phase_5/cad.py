"""
Phase 5: Valuation-Invariant CAD with the Lazard Projection

Orchestrates the full decomposition:

    inputs (n variables)
      -> contents + primitive parts w.r.t. x_n
      -> squarefree basis B_n of the primitive parts
      -> contents + lazard_projection(B_n)          (n - 1 variables)
      -> ... down to one variable
    then lift level by level: every cell of level k gets a stack from B_(k+1),
    evaluated at its sample point by Lazard evaluation.

Usage:
    from phase_5.cad import vcadl

    decomposition = vcadl([parse_polynomial("x^2 + y^2 - 1", ["x", "y"])])
    len(decomposition.cells)      # 13
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

from phase_1.basis import BasisSet, content_and_primitive, squarefree_basis
from phase_1.polynomial import Polynomial, PolynomialError
from phase_3.projection import ProjectionSet, lazard_projection
from phase_4.valuation import Valuation
from phase_5.cells import Cell, CellIndex, Decomposition, Stack
from phase_5.lifting import lift_over_point

logger = logging.getLogger(__name__)

DEFAULT_WORKERS = 1


# ── Projection phase ────────────────────────────────────────────────────────

@dataclass
class ProjectionChain:
    """
    Attributes:
        level_polynomials: entry k - lowest holds the polynomials in k variables.
        bases:             Squarefree basis in x_k for each level k >= lowest.
        projections:       projections[k - lowest] maps level k + 1 to level k.
        lowest:            Level the chain stopped at; 1 for a complete chain.
    """
    level_polynomials: List[Tuple[Polynomial, ...]]
    bases: List[BasisSet]
    projections: List[ProjectionSet]
    lowest: int = 1

    def polynomials_at(self, level: int) -> Tuple[Polynomial, ...]:
        if not self.lowest <= level <= self.lowest + len(self.level_polynomials) - 1:
            raise KeyError(f"level {level} is not in the projection chain")
        return self.level_polynomials[level - self.lowest]


def split_contents(polys: Sequence[Polynomial], var: int) -> Tuple[List[Polynomial], List[Polynomial]]:
    """Contents with respect to x_var, and primitive parts of positive degree."""
    contents: List[Polynomial] = []
    primitives: List[Polynomial] = []
    for f in polys:
        if f.degree(var) < 1:
            contents.append(f)
            continue
        content, primitive = content_and_primitive(f, var)
        contents.append(content)
        primitives.append(primitive)
    return contents, primitives


def projection_chain(polys: Sequence[Polynomial], nvars: int, lowest: int = 1) -> ProjectionChain:
    """Project level by level from `nvars` variables down to `lowest` variables."""
    if not 1 <= lowest <= nvars:
        raise ValueError(f"max_level must be between 1 and {nvars}, got {lowest}")
    levels: Dict[int, Tuple[Polynomial, ...]] = {nvars: tuple(polys)}
    bases: Dict[int, BasisSet] = {}
    projections: Dict[int, ProjectionSet] = {}
    for k in range(nvars, lowest - 1, -1):
        contents, primitives = split_contents(levels[k], k - 1)
        bases[k] = squarefree_basis(primitives, k - 1)
        if k == lowest:
            break
        projected = lazard_projection(bases[k]).with_contents(contents)
        projections[k - 1] = projected
        levels[k - 1] = projected.polynomials
        logger.info(f"Projected level {k} ({len(bases[k])} basis elements) to {len(projected)} polynomials")
    return ProjectionChain(
        level_polynomials=[levels[k] for k in range(lowest, nvars + 1)],
        bases=[bases[k] for k in range(lowest, nvars + 1)],
        projections=[projections[k] for k in range(lowest, nvars)],
        lowest=lowest,
    )


def _prepare_inputs(polys: Sequence[Polynomial], nvars: Optional[int]) -> Tuple[Tuple[Polynomial, ...], int]:
    if nvars is None:
        if not polys:
            raise PolynomialError("dimension is required when there are no input polynomials")
        nvars = polys[0].nvars
    if nvars < 1:
        raise PolynomialError(f"dimension must be at least 1, got {nvars}")
    kept: List[Polynomial] = []
    for f in polys:
        if f.nvars != nvars:
            raise PolynomialError(f"input {f} has {f.nvars} variables, expected {nvars}")
        if f.is_zero():
            raise PolynomialError("zero polynomial in the input set")
        if f.is_constant():
            logger.warning(f"Dropping constant input {f}")
            continue
        kept.append(f)
    return tuple(kept), nvars


# ── Lifting phase ───────────────────────────────────────────────────────────

def _lift_level(basis: BasisSet, base_cells: List[Cell], polynomials: Sequence[Polynomial],
                workers: int) -> List[Stack]:
    lift = partial(lift_over_point, basis, polynomials=polynomials)
    if workers > 1 and len(base_cells) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(lift, base_cells))
    return [lift(cell) for cell in base_cells]


def vcadl(
    polys: Sequence[Polynomial],
    nvars: Optional[int] = None,
    workers: int = DEFAULT_WORKERS,
) -> Decomposition:
    """
    Valuation-invariant CAD of R^nvars adapted to `polys`.

    Args:
        polys:   Input polynomials, all in `nvars` variables; constants are dropped.
        nvars:   Dimension; defaults to the variable count of the inputs.
        workers: Threads used to lift the stacks of one level.

    Raises:
        PolynomialError: zero input, mismatched variable counts, dimension < 1.
        ValueError:      workers < 1.
    """
    inputs, nvars = _prepare_inputs(polys, nvars)
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")

    chain = projection_chain(inputs, nvars)
    decomposition = Decomposition(
        dimension=nvars,
        inputs=inputs,
        level_polynomials=chain.level_polynomials,
        bases=chain.bases,
        projections=chain.projections,
    )

    current = [Cell.root()]
    for k in range(1, nvars + 1):
        stacks = _lift_level(chain.bases[k - 1], current, chain.level_polynomials[k - 1], workers)
        current = [cell for stack in stacks for cell in stack.cells]
        decomposition.stacks.append(stacks)
        decomposition.levels.append(current)
        logger.info(f"Level {k}: {len(current)} cells in {len(stacks)} stacks")
    return decomposition


def project_to_level(polys: Sequence[Polynomial], level: int, nvars: Optional[int] = None) -> ProjectionChain:
    """
    Projection phase only, stopped once the polynomials in `level` variables exist.

    No cells are built; level == nvars returns just the inputs and their basis.
    """
    inputs, nvars = _prepare_inputs(polys, nvars)
    return projection_chain(inputs, nvars, lowest=level)


def signature_table(decomposition: Decomposition) -> Dict[CellIndex, Tuple[Valuation, ...]]:
    """Valuation signature of every top-level cell, sorted by index."""
    return {cell.index: cell.valuations for cell in sorted(decomposition.cells, key=lambda c: c.index)}
