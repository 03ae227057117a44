"""
Phase 5: Cells, Stacks and Decompositions

Data model of a cylindrical decomposition. A cell at level k is named by a
k-tuple of positive indices (odd component = sector, even = section, counted
bottom-up within each stack) and carries an exact sample point plus the sign
and valuation of every polynomial of its level at that point.

Usage:
    from phase_5.cad import vcadl

    decomposition = vcadl([circle])
    for cell in decomposition.cells:
        print(cell.index, cell.sample, cell.valuations)
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple, Union

from phase_1.basis import BasisSet
from phase_1.polynomial import Polynomial
from phase_2.algebraic import RealAlgebraicNumber
from phase_2.tower import Tower
from phase_3.projection import ProjectionSet
from phase_4.valuation import Valuation


@dataclass(frozen=True, order=True)
class CellIndex:
    """
    Attributes:
        indices: One positive integer per level, x1 first.
    """
    indices: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if any(i < 1 for i in self.indices):
            raise ValueError(f"cell indices must be positive: {self.indices}")

    @property
    def level(self) -> int:
        return len(self.indices)

    def is_section_at(self, level: int) -> bool:
        return self.indices[level - 1] % 2 == 0

    @property
    def is_full_dimensional(self) -> bool:
        return all(i % 2 == 1 for i in self.indices)

    @property
    def dimension(self) -> int:
        return sum(i % 2 for i in self.indices)

    @property
    def parent(self) -> "CellIndex":
        return CellIndex(self.indices[:-1])

    def child(self, position: int) -> "CellIndex":
        return CellIndex(self.indices + (position,))

    def to_list(self) -> List[int]:
        return list(self.indices)

    def __str__(self) -> str:
        return "(" + ", ".join(str(i) for i in self.indices) + ")"


def coordinate_to_json(coordinate: RealAlgebraicNumber) -> Union[str, dict]:
    """Rationals as "p/q" strings; irrationals as their defining polynomial and isolation."""
    if coordinate.is_rational:
        return str(coordinate.value)
    return coordinate.to_dict()


@dataclass
class Cell:
    """
    One cell of a decomposition.

    Attributes:
        index:      Position of the cell.
        sample:     Exact sample point, one coordinate per level.
        signs:      Sign of each polynomial of the cell's level at the sample.
        valuations: Valuation of each of those polynomials at the sample.
    """
    index: CellIndex
    sample: Tower
    signs: Tuple[int, ...] = ()
    valuations: Tuple[Valuation, ...] = ()

    @classmethod
    def root(cls) -> "Cell":
        """The single cell of R^0 every level-1 stack is built over."""
        return cls(index=CellIndex(()), sample=Tower([]))

    @property
    def level(self) -> int:
        return self.index.level

    @property
    def is_full_dimensional(self) -> bool:
        return self.index.is_full_dimensional

    def sample_values(self) -> List[Union[Fraction, RealAlgebraicNumber]]:
        return [c.value if c.is_rational else c for c in self.sample]

    def to_dict(self) -> dict:
        return {
            "index": self.index.to_list(),
            "sample": [coordinate_to_json(c) for c in self.sample],
            "signs": list(self.signs),
            "valuations": [v.to_list() for v in self.valuations],
        }


@dataclass
class Stack:
    """
    The cells over one base cell.

    Attributes:
        base:     Cell the stack sits over.
        sections: Roots in the new variable with multiplicities, increasing.
        cells:    2 * len(sections) + 1 cells alternating sector and section.
    """
    base: Cell
    sections: Tuple[Tuple[RealAlgebraicNumber, int], ...]
    cells: Tuple[Cell, ...]

    def __post_init__(self):
        if len(self.cells) != 2 * len(self.sections) + 1:
            raise ValueError(
                f"stack over {self.base.index} has {len(self.cells)} cells for {len(self.sections)} sections"
            )

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(m for _, m in self.sections)


@dataclass
class Decomposition:
    """
    Valuation-invariant cylindrical decomposition, lifted level by level.

    Attributes:
        dimension:          Number of variables of the inputs.
        inputs:             Nonconstant input polynomials (signature order at the top level).
        level_polynomials:  Polynomials each level's cells are adapted to; entry k - 1
                            holds the k-variable ones, the last entry is `inputs`.
        bases:              Squarefree basis lifted at each level.
        projections:        projections[k - 1] projects level k + 1 to level k.
        levels:             Cells of each lifted level, sorted by index.
        stacks:             Stacks of each lifted level.
    """
    dimension: int
    inputs: Tuple[Polynomial, ...]
    level_polynomials: List[Tuple[Polynomial, ...]]
    bases: List[BasisSet]
    projections: List[ProjectionSet]
    levels: List[List[Cell]] = field(default_factory=list)
    stacks: List[List[Stack]] = field(default_factory=list)

    @property
    def lifted(self) -> int:
        return len(self.levels)

    @property
    def cells(self) -> List[Cell]:
        return self.levels[-1] if self.levels else [Cell.root()]

    @property
    def base(self) -> Optional["Decomposition"]:
        """The same decomposition with its top lifted level removed."""
        if not self.levels:
            return None
        return Decomposition(
            dimension=self.dimension,
            inputs=self.inputs,
            level_polynomials=self.level_polynomials,
            bases=self.bases,
            projections=self.projections,
            levels=self.levels[:-1],
            stacks=self.stacks[:-1],
        )

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def cell(self, index: Union[CellIndex, Tuple[int, ...]]) -> Cell:
        index = index if isinstance(index, CellIndex) else CellIndex(tuple(index))
        if index.level == 0:
            return Cell.root()
        for cell in self.levels[index.level - 1]:
            if cell.index == index:
                return cell
        raise KeyError(f"no cell {index} in the decomposition")

    def stack_over(self, index: Union[CellIndex, Tuple[int, ...]]) -> Stack:
        index = index if isinstance(index, CellIndex) else CellIndex(tuple(index))
        for stack in self.stacks[index.level]:
            if stack.base.index == index:
                return stack
        raise KeyError(f"no stack over {index}")

    def stack_sizes(self, level: Optional[int] = None) -> List[int]:
        level = self.lifted if level is None else level
        return [len(s) for s in self.stacks[level - 1]]

    def counts(self) -> Dict[str, int]:
        return {f"level_{k + 1}": len(cells) for k, cells in enumerate(self.levels)}
