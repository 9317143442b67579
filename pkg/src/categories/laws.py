"""Exhaustive law checkers for finite categories, functors and natural transformations."""

import logging
from collections import Counter
from itertools import product
from typing import Callable, Hashable, Optional

from ..models.category import AdjointEquivalence, FinCategory, FinFunctor, NatTrans
from ..models.report import DEFAULT_WITNESS_LIMIT, PropertyReport
from ..utils.validators import MismatchError, StructureError, ValidationError
from .constructions import (
    compose_functors,
    identity_functor,
    identity_nat,
    vertical_compose,
    whisker_left,
    whisker_right,
)

logger = logging.getLogger(__name__)

Pattern = Optional[Callable[[Hashable], Hashable]]


def structure_errors(C: FinCategory, allow_partial: bool = False) -> list[ValidationError]:
    """Typing and totality problems of the raw tables."""
    errors = []
    objects = set(C.objects)
    morphisms = set(C.morphisms)
    if len(objects) != len(C.objects):
        errors.append(ValidationError("objects", "duplicate object"))
    if len(morphisms) != len(C.morphisms):
        errors.append(ValidationError("morphisms", "duplicate morphism"))
    for m in C.morphisms:
        if C.src.get(m) not in objects or C.tgt.get(m) not in objects:
            errors.append(ValidationError(f"morphism {m!r}", "source or target is not an object"))
    if errors:
        return errors
    for x in C.objects:
        i = C.identity.get(x)
        if i not in morphisms or C.src[i] != x or C.tgt[i] != x:
            errors.append(ValidationError(f"identity {x!r}", f"{i!r} is not an endomorphism"))
    for (g, f), h in C.composition.items():
        if f not in morphisms or g not in morphisms:
            errors.append(ValidationError(f"compose {g!r}.{f!r}", "undeclared morphism"))
        elif C.tgt[f] != C.src[g]:
            errors.append(ValidationError(f"compose {g!r}.{f!r}", "pair is not composable"))
        elif h not in morphisms:
            errors.append(ValidationError(f"compose {g!r}.{f!r}", f"{h!r} is undeclared"))
        elif C.src[h] != C.src[f] or C.tgt[h] != C.tgt[g]:
            errors.append(ValidationError(f"compose {g!r}.{f!r}", f"{h!r} is mis-typed"))
    if not allow_partial:
        for f in C.morphisms:
            for g in C.outgoing(C.tgt[f]):
                if (g, f) not in C.composition:
                    errors.append(ValidationError(f"compose {g!r}.{f!r}", "missing composite"))
    return errors


def check_structure(C: FinCategory, allow_partial: bool = False) -> None:
    errors = structure_errors(C, allow_partial)
    if errors:
        raise StructureError("malformed category", errors)


def _capped(
    name: str, witnesses: list, limit: int, coverage: Optional[Counter] = None
) -> PropertyReport:
    return PropertyReport.from_witnesses(name, witnesses, limit, coverage)


def check_category_laws(
    C: FinCategory,
    pattern: Pattern = None,
    allow_partial: bool = False,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
) -> PropertyReport:
    """
    Verify identity and associativity laws on every composable triple.

    Args:
        C: the category
        pattern: optional classifier of objects; associativity cases are tallied in
            the report's ``coverage`` under (pattern(x), pattern(y), pattern(z), pattern(w))
        allow_partial: check only defined composites (bounded categories)

    Raises:
        StructureError: the tables are mis-typed or, unless partial, not total
    """
    check_structure(C, allow_partial)
    comp = C.composition

    identity_failures = []
    for f in C.morphisms:
        right = comp.get((f, C.id(C.src[f])))
        left = comp.get((C.id(C.tgt[f]), f))
        if right is not None and right != f:
            identity_failures.append(("right_identity", f))
        if left is not None and left != f:
            identity_failures.append(("left_identity", f))

    assoc_failures = []
    coverage: Counter = Counter()
    for f in C.morphisms:
        for g in C.outgoing(C.tgt[f]):
            gf = comp.get((g, f))
            for h in C.outgoing(C.tgt[g]):
                hg = comp.get((h, g))
                if gf is None or hg is None:
                    continue
                lhs, rhs = comp.get((h, gf)), comp.get((hg, f))
                if lhs is None or rhs is None:
                    continue
                if pattern is not None:
                    coverage[
                        (pattern(C.src[f]), pattern(C.tgt[f]), pattern(C.tgt[g]), pattern(C.tgt[h]))
                    ] += 1
                if lhs != rhs:
                    assoc_failures.append((h, g, f))

    parts = (
        _capped("identity", identity_failures, witness_limit),
        _capped("associativity", assoc_failures, witness_limit, coverage),
    )
    report = PropertyReport.aggregate("category", parts, witness_limit)
    logger.debug(f"Category laws on {C!r}: {report.verdict}")
    return report


def _require_total(F: FinFunctor) -> None:
    errors = []
    for x in F.domain.objects:
        if not F.codomain.has_object(F.on_objects.get(x, object())):
            errors.append(ValidationError(f"object {x!r}", "no image object"))
    for m in F.domain.morphisms:
        if not F.codomain.has_morphism(F.on_morphisms.get(m, object())):
            errors.append(ValidationError(f"morphism {m!r}", "no image morphism"))
    if errors:
        raise StructureError("functor is not total", errors)


def check_functor_laws(
    F: FinFunctor, pattern: Pattern = None, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> PropertyReport:
    """Typing, identity preservation and composition preservation.

    With ``pattern``, composition cases are tallied under
    (pattern(x), pattern(y), pattern(z)) for g . f with f: x -> y, g: y -> z.
    """
    _require_total(F)
    A, B = F.domain, F.codomain
    typing = [
        m
        for m in A.morphisms
        if B.src[F.mor(m)] != F.obj(A.src[m]) or B.tgt[F.mor(m)] != F.obj(A.tgt[m])
    ]
    identities = [x for x in A.objects if F.mor(A.id(x)) != B.id(F.obj(x))]
    composition = []
    coverage: Counter = Counter()
    if not typing:
        for (g, f), h in A.composition.items():
            if pattern is not None:
                coverage[(pattern(A.src[f]), pattern(A.tgt[f]), pattern(A.tgt[g]))] += 1
            if F.mor(h) != B.composition.get((F.mor(g), F.mor(f))):
                composition.append((g, f))
    parts = (
        _capped("typing", typing, witness_limit),
        _capped("identities", identities, witness_limit),
        _capped("composition", composition, witness_limit, coverage),
    )
    return PropertyReport.aggregate("functor", parts, witness_limit)


def _require_parallel(t: NatTrans) -> None:
    if t.source.domain != t.target.domain or t.source.codomain != t.target.codomain:
        raise MismatchError("natural transformation between non-parallel functors")


def check_naturality(t: NatTrans, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> PropertyReport:
    """Component typing and the square G(f) . t_x = t_y . F(f) for every f: x -> y."""
    _require_parallel(t)
    A, B = t.domain, t.codomain
    F, G = t.source, t.target
    typing = []
    for x in A.objects:
        c = t.components.get(x)
        if c is None or c not in B.hom(F.obj(x), G.obj(x)):
            typing.append(x)
    squares = []
    if not typing:
        for f in A.morphisms:
            x, y = A.src[f], A.tgt[f]
            if B.composition.get((G.mor(f), t.at(x))) != B.composition.get((t.at(y), F.mor(f))):
                squares.append(f)
    parts = (
        _capped("components", typing, witness_limit),
        _capped("naturality", squares, witness_limit),
    )
    return PropertyReport.aggregate("natural", parts, witness_limit)


def is_natural_iso(t: NatTrans, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> PropertyReport:
    natural = check_naturality(t, witness_limit)
    invertible = []
    if natural.part("components").verdict:
        invertible = [x for x in t.domain.objects if not t.codomain.is_iso(t.at(x))]
    parts = natural.parts + (_capped("invertible", invertible, witness_limit),)
    return PropertyReport.aggregate("natural_iso", parts, witness_limit)


def functor_props(F: FinFunctor, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> PropertyReport:
    """Surjective on objects, full and faithful, reported separately and together."""
    A, B = F.domain, F.codomain
    hit = {F.obj(x) for x in A.objects}
    missed = [b for b in B.objects if b not in hit]
    unfilled = []
    collisions = []
    for x, y in product(A.objects, repeat=2):
        seen: dict = {}
        for m in A.hom(x, y):
            image = F.mor(m)
            if image in seen:
                collisions.append((seen[image], m))
            else:
                seen[image] = m
        for beta in B.hom(F.obj(x), F.obj(y)):
            if beta not in seen:
                unfilled.append((x, y, beta))
    parts = (
        _capped("surjective_on_objects", missed, witness_limit),
        _capped("full", unfilled, witness_limit),
        _capped("faithful", collisions, witness_limit),
    )
    return PropertyReport.aggregate("functor_props", parts, witness_limit)


def is_essentially_surjective(F: FinFunctor) -> bool:
    B = F.codomain
    images = {F.obj(x) for x in F.domain.objects}
    return all(any(B.is_iso(m) for a in images for m in B.hom(a, b)) for b in B.objects)


def _nat_shape(t: NatTrans, source: FinFunctor, target: FinFunctor) -> list:
    issues = []
    if t.source.on_objects != source.on_objects or t.source.on_morphisms != source.on_morphisms:
        issues.append("source functor")
    if t.target.on_objects != target.on_objects or t.target.on_morphisms != target.on_morphisms:
        issues.append("target functor")
    return issues


def check_adjoint_equivalence(
    e: AdjointEquivalence, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> PropertyReport:
    """Functor laws, naturality, invertibility and both triangle identities."""
    S, T, eta, eps = e.S, e.T, e.eta, e.eps
    A, B = e.A, e.B
    if T.domain != B or T.codomain != A:
        raise MismatchError("T does not run from B back to A")

    parts = [
        PropertyReport.aggregate("functor_S", check_functor_laws(S, None, witness_limit).parts),
        PropertyReport.aggregate("functor_T", check_functor_laws(T, None, witness_limit).parts),
    ]
    if not all(parts):
        return PropertyReport.aggregate("adjoint_equivalence", parts, witness_limit)

    shapes = _nat_shape(eta, identity_functor(A), compose_functors(T, S)) + _nat_shape(
        eps, compose_functors(S, T), identity_functor(B)
    )
    parts.append(_capped("shape", shapes, witness_limit))
    eta_report = is_natural_iso(eta, witness_limit)
    eps_report = is_natural_iso(eps, witness_limit)
    parts.extend(
        [
            PropertyReport.aggregate("naturality_eta", eta_report.parts[:2], witness_limit),
            PropertyReport.aggregate("naturality_eps", eps_report.parts[:2], witness_limit),
            PropertyReport.aggregate("invertible_eta", eta_report.parts[2:], witness_limit),
            PropertyReport.aggregate("invertible_eps", eps_report.parts[2:], witness_limit),
        ]
    )
    if not all(parts):
        return PropertyReport.aggregate("adjoint_equivalence", parts, witness_limit)

    # eps S . S eta = 1_S and T eps . eta T = 1_T
    left = vertical_compose(whisker_right(eps, S), whisker_left(S, eta))
    right = vertical_compose(whisker_left(T, eps), whisker_right(eta, T))
    unit_S, unit_T = identity_nat(S), identity_nat(T)
    triangle_S = [a for a in A.objects if left.at(a) != unit_S.at(a)]
    triangle_T = [b for b in B.objects if right.at(b) != unit_T.at(b)]
    parts.append(_capped("triangle_S", triangle_S, witness_limit))
    parts.append(_capped("triangle_T", triangle_T, witness_limit))
    return PropertyReport.aggregate("adjoint_equivalence", parts, witness_limit)
