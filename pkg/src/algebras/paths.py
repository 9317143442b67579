"""Paths in a 1-globular set: the free category monad, explored up to a length bound."""

import logging
from itertools import combinations
from typing import Hashable, Iterator, NamedTuple

from ..models.category import FinCategory
from ..models.globular import GlobularSet
from ..models.report import DEFAULT_WITNESS_LIMIT, PropertyReport
from ..utils.validators import DomainError

logger = logging.getLogger(__name__)

DEFAULT_PATH_BOUND = 4


class Path(NamedTuple):
    """A start 0-cell and consecutively composable edges; the graph is carried alongside."""

    start: Hashable
    edges: tuple


def _require_graph(G: GlobularSet) -> None:
    if G.dimension != 1:
        raise DomainError(f"paths need a 1-dimensional globular set, got n={G.dimension}")


def end(G: GlobularSet, p: Path) -> Hashable:
    return G.tgt[1][p.edges[-1]] if p.edges else p.start


def is_path(G: GlobularSet, p: Path) -> bool:
    here = p.start
    if not G.has_cell(0, here):
        return False
    for e in p.edges:
        if not G.has_cell(1, e) or G.src[1][e] != here:
            return False
        here = G.tgt[1][e]
    return True


def _outgoing(G: GlobularSet) -> dict:
    out: dict = {x: [] for x in G.cells[0]}
    for e in G.cells[1]:
        out[G.src[1][e]].append(e)
    return out


def paths_by_start(G: GlobularSet, L: int) -> dict:
    """0-cell -> paths from it of length <= L, shortest first."""
    _require_graph(G)
    out = _outgoing(G)
    table = {}
    for x in G.cells[0]:
        level = [Path(x, ())]
        found = list(level)
        for _ in range(L):
            level = [Path(x, p.edges + (e,)) for p in level for e in out[end(G, p)]]
            found.extend(level)
        table[x] = found
    return table


def iter_paths(G: GlobularSet, L: int) -> Iterator[Path]:
    """All paths of length <= L, by start 0-cell, then length, then edge order."""
    for found in paths_by_start(G, L).values():
        yield from found


def unit_path(G: GlobularSet, e: Hashable) -> Path:
    return Path(G.src[1][e], (e,))


def flatten(nested: Path) -> Path:
    """Concatenate a path of paths into one path."""
    edges: tuple = ()
    for inner in nested.edges:
        edges += inner.edges
    return Path(nested.start, edges)


def iter_nestings(G: GlobularSet, L: int) -> Iterator[Path]:
    """Paths of paths with at most L inner paths and at most L edges in total."""
    table = paths_by_start(G, L)

    def extend(start, here, prefix: tuple, remaining: int) -> Iterator[Path]:
        yield Path(start, prefix)
        if len(prefix) == L:
            return
        for inner in table[here]:
            if len(inner.edges) <= remaining:
                yield from extend(
                    start, end(G, inner), prefix + (inner,), remaining - len(inner.edges)
                )

    for x in G.cells[0]:
        yield from extend(x, x, (), L)


def _groupings(n: int) -> Iterator[tuple[int, ...]]:
    """Ways of cutting n >= 1 items into consecutive non-empty blocks (as cut points)."""
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            yield cuts


def iter_triple_nestings(G: GlobularSet, L: int) -> Iterator[Path]:
    """
    Three-level nestings: every two-level nesting with its inner paths grouped into
    consecutive non-empty blocks. The empty outer path at each 0-cell is included.
    """
    for nested in iter_nestings(G, L):
        inners = nested.edges
        if not inners:
            yield Path(nested.start, ())
            continue
        for cuts in _groupings(len(inners)):
            bounds = (0,) + cuts + (len(inners),)
            blocks = []
            for lo, hi in zip(bounds, bounds[1:]):
                blocks.append(Path(inners[lo].start, inners[lo:hi]))
            yield Path(nested.start, tuple(blocks))


def _map_edges(nested: Path, fn) -> Path:
    return Path(nested.start, tuple(fn(inner) for inner in nested.edges))


def check_monad_laws(
    G: GlobularSet, L: int = DEFAULT_PATH_BOUND, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> PropertyReport:
    """
    Unit and associativity laws of the free category monad on G, up to length L.

    left_unit: flattening the length-one path on p gives p.
    right_unit: flattening p with every edge wrapped as a unit path gives p.
    associativity: flattening the inner level first or the outer level first agree.
    """
    left, right, assoc = [], [], []
    for p in iter_paths(G, L):
        if flatten(Path(p.start, (p,))) != p:
            left.append(p)
        if flatten(Path(p.start, tuple(unit_path(G, e) for e in p.edges))) != p:
            right.append(p)
    for nested in iter_triple_nestings(G, L):
        if flatten(_map_edges(nested, flatten)) != flatten(flatten(nested)):
            assoc.append(nested)
    parts = (
        PropertyReport.from_witnesses("left_unit", left, witness_limit),
        PropertyReport.from_witnesses("right_unit", right, witness_limit),
        PropertyReport.from_witnesses("associativity", assoc, witness_limit),
    )
    return PropertyReport.aggregate("monad", parts, witness_limit)


def free_category_bounded(G: GlobularSet, L: int) -> tuple[FinCategory, bool]:
    """
    Paths of length <= L as morphisms, concatenation as composition.

    Composites longer than L are left undefined; the flag reports whether that
    happened, in which case only the bounded law checks apply.
    """
    if L < 1:
        raise DomainError(f"path bound must be >= 1, got {L}")
    table = paths_by_start(G, L)
    morphisms = [p for found in table.values() for p in found]
    composition = {}
    truncated = False
    for f in morphisms:
        for g in table[end(G, f)]:
            if len(f.edges) + len(g.edges) <= L:
                composition[(g, f)] = Path(f.start, f.edges + g.edges)
            else:
                truncated = True
    C = FinCategory(
        objects=tuple(G.cells[0]),
        morphisms=tuple(morphisms),
        src={p: p.start for p in morphisms},
        tgt={p: end(G, p) for p in morphisms},
        identity={x: Path(x, ()) for x in G.cells[0]},
        composition=composition,
    )
    if truncated:
        logger.info(f"Free category truncated at path length {L}")
    return C, truncated
