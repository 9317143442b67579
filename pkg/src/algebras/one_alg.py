"""Algebras of the free category monad (categories seen as path evaluators) and their maps."""

import logging
from dataclasses import dataclass, field
from typing import Callable, Hashable, Mapping, Optional

from ..globular.core import equivalence_profile, validate_globular
from ..models.category import FinCategory, FinFunctor
from ..models.globular import GlobularMap, GlobularSet
from ..models.report import DEFAULT_WITNESS_LIMIT, PropertyReport
from ..models.span import Span
from ..utils.validators import MismatchError
from .paths import DEFAULT_PATH_BOUND, Path, end, iter_nestings, iter_paths, unit_path

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OneAlgebra:
    """
    A 1-globular carrier with a path evaluator.

    ``units`` sends each 0-cell to the value of its empty path and ``products``
    sends a composable pair (g, f) to the value of the path f then g. Longer paths
    are folded from the left. ``evaluator`` replaces all of this when given.
    """

    carrier: GlobularSet
    units: Mapping[Hashable, Hashable]
    products: Mapping[tuple, Hashable]
    evaluator: Optional[Callable[[Path], Hashable]] = field(default=None, compare=False)

    def __repr__(self) -> str:
        return f"<OneAlgebra({self.carrier!r})>"

    def evaluate(self, p: Path) -> Optional[Hashable]:
        """The 1-cell a path evaluates to, or None where the tables are undefined."""
        if self.evaluator is not None:
            return self.evaluator(p)
        if not p.edges:
            return self.units.get(p.start)
        value = p.edges[0]
        for e in p.edges[1:]:
            value = self.products.get((e, value))
            if value is None:
                return None
        return value


def nerve(A: FinCategory) -> OneAlgebra:
    """Objects as 0-cells, every morphism (identities included) as a 1-cell."""
    carrier = validate_globular(
        1,
        {0: A.objects, 1: A.morphisms},
        {1: dict(A.src)},
        {1: dict(A.tgt)},
    )
    return OneAlgebra(carrier, dict(A.identity), dict(A.composition))


def underlying_map(
    F: FinFunctor, source: Optional[OneAlgebra] = None, target: Optional[OneAlgebra] = None
):
    """The carrier map of F between nerves."""
    source = source or nerve(F.domain)
    target = target or nerve(F.codomain)
    return GlobularMap(
        source.carrier,
        target.carrier,
        (dict(F.on_objects), dict(F.on_morphisms)),
    )


def check_algebra_laws(
    alg: OneAlgebra, L: int = DEFAULT_PATH_BOUND, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> PropertyReport:
    """
    Typing, unit and multiplication laws of the structure map up to length L.

    typing: every path evaluates to a 1-cell between its endpoints.
    unit: a length-one path evaluates to its edge.
    multiplication: evaluating a flattened path of paths equals evaluating the
    path of inner values.
    """
    G = alg.carrier
    typing = []
    for p in iter_paths(G, L):
        value = alg.evaluate(p)
        if value is None or value not in G.hom(1, p.start, end(G, p)):
            typing.append(p)
    unit = [e for e in G.cells[1] if alg.evaluate(unit_path(G, e)) != e]

    multiplication = []
    if not typing:
        for nested in iter_nestings(G, L):
            flat = Path(nested.start, sum((inner.edges for inner in nested.edges), ()))
            values = Path(nested.start, tuple(alg.evaluate(inner) for inner in nested.edges))
            if alg.evaluate(flat) != alg.evaluate(values):
                multiplication.append(nested)
    parts = (
        PropertyReport.from_witnesses("typing", typing, witness_limit),
        PropertyReport.from_witnesses("unit", unit, witness_limit),
        PropertyReport.from_witnesses("multiplication", multiplication, witness_limit),
    )
    return PropertyReport.aggregate("algebra", parts, witness_limit)


def is_algebra_map(
    f: GlobularMap,
    source: OneAlgebra,
    target: OneAlgebra,
    L: int = DEFAULT_PATH_BOUND,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
) -> PropertyReport:
    """f(eval p) = eval(f p) for every path of length <= L, empty paths included."""
    if f.domain != source.carrier or f.codomain != target.carrier:
        raise MismatchError("map does not run between the algebra carriers")
    objects, arrows = f.components[0], f.components[1]
    failures = []
    for p in iter_paths(source.carrier, L):
        image = Path(objects[p.start], tuple(arrows[e] for e in p.edges))
        value = source.evaluate(p)
        if value is None or arrows.get(value) != target.evaluate(image):
            failures.append(p)
    return PropertyReport.from_witnesses("algebra_map", failures, witness_limit)


def span_equivalence_wk1(
    span: Span,
    source: OneAlgebra,
    target: OneAlgebra,
    apex: OneAlgebra,
    L: int = DEFAULT_PATH_BOUND,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
) -> PropertyReport:
    """Both legs are algebra maps and pass the 1-dimensional equivalence profile."""
    parts = (
        PropertyReport.aggregate(
            "left_algebra_map",
            (is_algebra_map(span.left, apex, source, L, witness_limit),),
            witness_limit,
        ),
        PropertyReport.aggregate(
            "right_algebra_map",
            (is_algebra_map(span.right, apex, target, L, witness_limit),),
            witness_limit,
        ),
        PropertyReport.aggregate(
            "left_profile", equivalence_profile(span.left, witness_limit).parts, witness_limit
        ),
        PropertyReport.aggregate(
            "right_profile", equivalence_profile(span.right, witness_limit).parts, witness_limit
        ),
    )
    return PropertyReport.aggregate("span_equivalence_wk1", parts, witness_limit)


def nerve_span(span) -> tuple[Span, OneAlgebra, OneAlgebra, OneAlgebra]:
    """N applied to a span of categories: the carrier span and the three nerves."""
    apex, source, target = nerve(span.apex), nerve(span.left.codomain), nerve(span.right.codomain)
    carrier_span = Span(
        apex.carrier,
        underlying_map(span.left, apex, source),
        underlying_map(span.right, apex, target),
    )
    return carrier_span, source, target, apex


def denerve(alg: OneAlgebra) -> FinCategory:
    """Read a category back off an algebra: identities from empty paths, composites from pairs."""
    G = alg.carrier
    composition = {}
    for f in G.cells[1]:
        for g in G.cells[1]:
            if G.src[1][g] == G.tgt[1][f]:
                composition[(g, f)] = alg.evaluate(Path(G.src[1][f], (f, g)))
    return FinCategory(
        objects=G.cells[0],
        morphisms=G.cells[1],
        src=dict(G.src[1]),
        tgt=dict(G.tgt[1]),
        identity={x: alg.evaluate(Path(x, ())) for x in G.cells[0]},
        composition=composition,
    )


def algebra_map_to_functor(f: GlobularMap, source: OneAlgebra, target: OneAlgebra) -> FinFunctor:
    return FinFunctor(
        denerve(source), denerve(target), dict(f.components[0]), dict(f.components[1])
    )
