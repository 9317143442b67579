"""Validation, hom-sets, composition and cell-wise properties of globular maps."""

import logging
from itertools import product
from typing import Iterator, Mapping, Optional, Sequence

from ..models.globular import Cell, GlobularMap, GlobularSet
from ..models.report import DEFAULT_WITNESS_LIMIT, PropertyReport
from ..utils.validators import (
    DomainError,
    GlobularityError,
    MismatchError,
    StructureError,
    ValidationError,
    raise_if_errors,
)

logger = logging.getLogger(__name__)


def _freeze(
    dimension: int,
    cells: Mapping[int, Sequence[Cell]],
    src: Mapping[int, Mapping[Cell, Cell]],
    tgt: Mapping[int, Mapping[Cell, Cell]],
) -> GlobularSet:
    if dimension < 0:
        raise StructureError("dimension must be >= 0")
    errors = []
    levels = []
    for k in range(dimension + 1):
        level = tuple(cells.get(k, ()))
        if len(set(level)) != len(level):
            seen = set()
            for cell in level:
                if cell in seen:
                    errors.append(ValidationError(f"cells[{k}]", f"duplicate cell {cell!r}"))
                seen.add(cell)
        levels.append(level)
    extra = [k for k in cells if not 0 <= k <= dimension]
    for k in extra:
        errors.append(ValidationError(f"cells[{k}]", f"dimension out of range 0..{dimension}"))

    sources: list[dict] = [{}]
    targets: list[dict] = [{}]
    for k in range(1, dimension + 1):
        lower = set(levels[k - 1])
        current = set(levels[k])
        for label, table, out in (("src", src, sources), ("tgt", tgt, targets)):
            given = dict(table.get(k, {}))
            for cell in levels[k]:
                if cell not in given:
                    errors.append(ValidationError(f"{label}[{k}]", f"no entry for {cell!r}"))
                elif given[cell] not in lower:
                    errors.append(
                        ValidationError(
                            f"{label}[{k}]",
                            f"{cell!r} -> {given[cell]!r} is not a {k - 1}-cell",
                        )
                    )
            for cell in given:
                if cell not in current:
                    errors.append(ValidationError(f"{label}[{k}]", f"unknown {k}-cell {cell!r}"))
            out.append({cell: given[cell] for cell in levels[k] if cell in given})
    raise_if_errors(errors, "malformed globular set")
    return GlobularSet(dimension, tuple(levels), tuple(sources), tuple(targets))


def globularity_violations(X: GlobularSet) -> list[ValidationError]:
    """Every cell of dimension >= 2 whose boundary fails the globular identities."""
    errors = []
    for k in range(2, X.dimension + 1):
        s_prev, t_prev = X.src[k - 1], X.tgt[k - 1]
        for cell in X.cells[k]:
            s, t = X.src[k][cell], X.tgt[k][cell]
            if s_prev[s] != s_prev[t]:
                errors.append(
                    ValidationError(
                        f"k={k} {cell!r}",
                        f"src(src)={s_prev[s]!r} differs from src(tgt)={s_prev[t]!r}",
                    )
                )
            if t_prev[s] != t_prev[t]:
                errors.append(
                    ValidationError(
                        f"k={k} {cell!r}",
                        f"tgt(src)={t_prev[s]!r} differs from tgt(tgt)={t_prev[t]!r}",
                    )
                )
    return errors


def validate_globular(
    dimension: int,
    cells: Mapping[int, Sequence[Cell]],
    src: Optional[Mapping[int, Mapping[Cell, Cell]]] = None,
    tgt: Optional[Mapping[int, Mapping[Cell, Cell]]] = None,
) -> GlobularSet:
    """
    Build a globular set from raw dimension-indexed tables.

    Args:
        dimension: n >= 0
        cells: k -> ordered cell identifiers
        src, tgt: k -> {k-cell: (k-1)-cell} for 1 <= k <= n

    Returns:
        The validated GlobularSet

    Raises:
        StructureError: dangling or missing src/tgt entries, duplicate cells
        GlobularityError: globularity fails; ``violations`` lists every cell
    """
    X = _freeze(dimension, cells, src or {}, tgt or {})
    raise_if_errors(globularity_violations(X), "globularity fails", GlobularityError)
    return X


def terminal_globular(n: int, cell: Cell = "*") -> GlobularSet:
    """One cell per dimension; every boundary is forced."""
    return validate_globular(
        n,
        {k: [cell] for k in range(n + 1)},
        {k: {cell: cell} for k in range(1, n + 1)},
        {k: {cell: cell} for k in range(1, n + 1)},
    )


def empty_globular(n: int) -> GlobularSet:
    return validate_globular(n, {})


def hom_set(X: GlobularSet, k: int, x: Cell, y: Cell) -> tuple[Cell, ...]:
    """The k-cells with source x and target y, in cell order."""
    if not 1 <= k <= X.dimension:
        raise DomainError(f"k={k} outside 1..{X.dimension}")
    for cell in (x, y):
        if not X.has_cell(k - 1, cell):
            raise DomainError(f"{cell!r} is not a {k - 1}-cell")
    return X.hom(k, x, y)


def map_violations(f: GlobularMap) -> list[ValidationError]:
    """Cells at which a map fails to commute with source or target."""
    X, Y = f.domain, f.codomain
    errors = []
    for k in range(1, X.dimension + 1):
        for cell in X.cells[k]:
            image = f.components[k][cell]
            if Y.src[k][image] != f.components[k - 1][X.src[k][cell]]:
                errors.append(
                    ValidationError(f"k={k} {cell!r}", "source square does not commute")
                )
            if Y.tgt[k][image] != f.components[k - 1][X.tgt[k][cell]]:
                errors.append(
                    ValidationError(f"k={k} {cell!r}", "target square does not commute")
                )
    return errors


def validate_map(
    domain: GlobularSet,
    codomain: GlobularSet,
    components: Mapping[int, Mapping[Cell, Cell]],
) -> GlobularMap:
    """
    Build a globular map and check the commutation squares.

    Raises:
        MismatchError: dimensions differ
        StructureError: a component is not total or hits a non-cell
        GlobularityError: some square fails; every offending cell is listed
    """
    if domain.dimension != codomain.dimension:
        raise MismatchError(
            f"dimension mismatch: {domain.dimension} vs {codomain.dimension}"
        )
    errors = []
    frozen = []
    for k in range(domain.dimension + 1):
        table = dict(components.get(k, {}))
        for cell in domain.cells[k]:
            if cell not in table:
                errors.append(ValidationError(f"component {k}", f"no image for {cell!r}"))
            elif not codomain.has_cell(k, table[cell]):
                errors.append(
                    ValidationError(
                        f"component {k}", f"{cell!r} -> {table[cell]!r} is not a {k}-cell"
                    )
                )
        frozen.append({cell: table[cell] for cell in domain.cells[k] if cell in table})
    raise_if_errors(errors, "component not total")
    f = GlobularMap(domain, codomain, tuple(frozen))
    raise_if_errors(map_violations(f), "map does not commute", GlobularityError)
    return f


def identity_map(X: GlobularSet) -> GlobularMap:
    return GlobularMap(X, X, tuple({c: c for c in level} for level in X.cells))


def compose_maps(g: GlobularMap, f: GlobularMap) -> GlobularMap:
    """g after f, componentwise."""
    if f.codomain != g.domain:
        raise MismatchError("codomain of f is not the domain of g")
    components = tuple(
        {cell: g.components[k][f.components[k][cell]] for cell in f.domain.cells[k]}
        for k in range(f.dimension + 1)
    )
    return GlobularMap(f.domain, g.codomain, components)


def unique_map_to_terminal(X: GlobularSet, cell: Cell = "*") -> GlobularMap:
    terminal = terminal_globular(X.dimension, cell)
    return GlobularMap(X, terminal, tuple({c: cell for c in level} for level in X.cells))


def empty_map(Y: GlobularSet) -> GlobularMap:
    return GlobularMap(empty_globular(Y.dimension), Y, tuple({} for _ in Y.cells))


def _check_k(f: GlobularMap, k: int, lowest: int) -> None:
    if not lowest <= k <= f.dimension:
        raise DomainError(f"k={k} outside {lowest}..{f.dimension}")


def is_surjective_on(
    f: GlobularMap, k: int, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> PropertyReport:
    """Witnesses are the codomain k-cells nothing maps to."""
    _check_k(f, k, 0)
    hit = f.image(k)
    missed = (cell for cell in f.codomain.cells[k] if cell not in hit)
    return PropertyReport.from_witnesses(f"surjective_{k}", missed, witness_limit)


def is_injective_on(
    f: GlobularMap, k: int, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> PropertyReport:
    """Witnesses are pairs of distinct k-cells with equal image."""
    _check_k(f, k, 0)

    def collisions() -> Iterator[tuple]:
        first_seen: dict = {}
        for cell in f.domain.cells[k]:
            image = f.components[k][cell]
            if image in first_seen:
                yield (first_seen[image], cell)
            else:
                first_seen[image] = cell

    return PropertyReport.from_witnesses(f"injective_{k}", collisions(), witness_limit)


def is_full_on(
    f: GlobularMap, k: int, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> PropertyReport:
    """Witnesses are triples (x, x', beta) where beta has no preimage in Hom(x, x')."""
    _check_k(f, k, 1)
    X, Y = f.domain, f.codomain
    lower = f.components[k - 1]

    def missing() -> Iterator[tuple]:
        for x, x2 in product(X.cells[k - 1], repeat=2):
            images = {f.components[k][a] for a in X.hom(k, x, x2)}
            for beta in Y.hom(k, lower[x], lower[x2]):
                if beta not in images:
                    yield (x, x2, beta)

    return PropertyReport.from_witnesses(f"full_{k}", missing(), witness_limit)


def is_faithful_on(
    f: GlobularMap, k: int, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> PropertyReport:
    """Witnesses are pairs of distinct parallel k-cells with equal image.

    Parallel means both lie in Hom_X(x, x') for the same (x, x'); the restriction
    of f_k to each such hom-set must be injective.
    """
    _check_k(f, k, 1)
    X = f.domain

    def collisions() -> Iterator[tuple]:
        for x, x2 in product(X.cells[k - 1], repeat=2):
            first_seen: dict = {}
            for a in X.hom(k, x, x2):
                image = f.components[k][a]
                if image in first_seen:
                    yield (first_seen[image], a)
                else:
                    first_seen[image] = a

    return PropertyReport.from_witnesses(f"faithful_{k}", collisions(), witness_limit)


def equivalence_profile(
    f: GlobularMap, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> PropertyReport:
    """Surjective on 0-cells, full on m-cells for 1 <= m <= n, faithful on n-cells."""
    n = f.dimension
    parts = [is_surjective_on(f, 0, witness_limit)]
    parts.extend(is_full_on(f, m, witness_limit) for m in range(1, n + 1))
    if n >= 1:
        parts.append(is_faithful_on(f, n, witness_limit))
    return PropertyReport.aggregate("equivalence", parts, witness_limit)


def is_isomorphism(f: GlobularMap) -> bool:
    """Componentwise bijective (the inverse then commutes automatically)."""
    return all(
        is_injective_on(f, k, 1).verdict and is_surjective_on(f, k, 1).verdict
        for k in range(f.dimension + 1)
    )


def inverse_map(f: GlobularMap) -> GlobularMap:
    if not is_isomorphism(f):
        raise DomainError("map is not componentwise bijective")
    components = tuple(
        {image: cell for cell, image in f.components[k].items()} for k in range(f.dimension + 1)
    )
    ordered = tuple(
        {cell: components[k][cell] for cell in f.codomain.cells[k]}
        for k in range(f.dimension + 1)
    )
    return GlobularMap(f.codomain, f.domain, ordered)


def iter_globular_maps(Z: GlobularSet, P: GlobularSet) -> Iterator[GlobularMap]:
    """Every globular map Z -> P, in lexicographic order of cell choices."""
    if Z.dimension != P.dimension:
        raise MismatchError("dimension mismatch")
    n = Z.dimension

    def extend(k: int, chosen: list[dict]) -> Iterator[list[dict]]:
        if k > n:
            yield chosen
            return
        if k == 0:
            options = [P.cells[0]] * len(Z.cells[0])
        else:
            lower = chosen[k - 1]
            options = [
                P.hom(k, lower[Z.src[k][z]], lower[Z.tgt[k][z]]) for z in Z.cells[k]
            ]
        for picks in product(*options):
            yield from extend(k + 1, chosen + [dict(zip(Z.cells[k], picks))])

    count = 0
    for components in extend(0, []):
        count += 1
        yield GlobularMap(Z, P, tuple(components))
    logger.debug(f"Enumerated {count} globular maps")
