"""Finite n-globular sets and their maps."""

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Mapping

Cell = Hashable


@dataclass(frozen=True)
class GlobularSet:
    """A finite n-truncated globular set.

    ``cells[k]`` lists the k-cells in their fixed order. ``src[k]`` and ``tgt[k]``
    map k-cells to (k-1)-cells for k >= 1; index 0 holds empty tables. Instances
    are treated as immutable once validated.
    """

    dimension: int
    cells: tuple[tuple[Cell, ...], ...]
    src: tuple[Mapping[Cell, Cell], ...]
    tgt: tuple[Mapping[Cell, Cell], ...]

    def __repr__(self) -> str:
        sizes = ",".join(str(len(c)) for c in self.cells)
        return f"<GlobularSet(n={self.dimension}, sizes=[{sizes}])>"

    @cached_property
    def _positions(self) -> tuple[dict, ...]:
        return tuple({cell: i for i, cell in enumerate(level)} for level in self.cells)

    @cached_property
    def _homs(self) -> tuple[dict, ...]:
        homs = [{}]
        for k in range(1, self.dimension + 1):
            buckets: dict = {}
            for cell in self.cells[k]:
                buckets.setdefault((self.src[k][cell], self.tgt[k][cell]), []).append(cell)
            homs.append({key: tuple(value) for key, value in buckets.items()})
        return tuple(homs)

    def has_cell(self, k: int, cell: Cell) -> bool:
        return 0 <= k <= self.dimension and cell in self._positions[k]

    def position(self, k: int, cell: Cell) -> int:
        """Index of ``cell`` in the fixed order of dimension ``k``."""
        return self._positions[k][cell]

    def hom(self, k: int, x: Cell, y: Cell) -> tuple[Cell, ...]:
        """The k-cells from x to y, in cell order (no domain checks)."""
        return self._homs[k].get((x, y), ())

    def boundary(self, k: int, cell: Cell) -> tuple[Cell, Cell]:
        return self.src[k][cell], self.tgt[k][cell]

    def size(self, k: int) -> int:
        return len(self.cells[k])

    @property
    def total_cells(self) -> int:
        return sum(len(level) for level in self.cells)


@dataclass(frozen=True)
class GlobularMap:
    """Dimension-indexed cell functions between globular sets of equal dimension."""

    domain: GlobularSet
    codomain: GlobularSet
    components: tuple[Mapping[Cell, Cell], ...]

    def __repr__(self) -> str:
        return f"<GlobularMap({self.domain!r} -> {self.codomain!r})>"

    @property
    def dimension(self) -> int:
        return self.domain.dimension

    def apply(self, k: int, cell: Cell) -> Cell:
        return self.components[k][cell]

    def image(self, k: int) -> set:
        return set(self.components[k].values())
