"""Building categories, functors and natural transformations from smaller pieces."""

import logging
from typing import Hashable, Mapping, Optional, Sequence

from ..models.category import FinCategory, FinFunctor, NatTrans
from ..utils.names import default_identity
from ..utils.validators import EquivalenceError, MismatchError, StructureError, ValidationError

logger = logging.getLogger(__name__)


def build_category(
    objects: Sequence[Hashable],
    morphisms: Mapping[Hashable, tuple[Hashable, Hashable]],
    composition: Mapping[tuple[Hashable, Hashable], Hashable],
    identities: Optional[Mapping[Hashable, Hashable]] = None,
) -> FinCategory:
    """
    Assemble a category, generating identities and their composites.

    Identities not supplied are named by ``default_identity`` and placed ahead of the
    declared morphisms; composites with identities are filled in. An explicit
    entry contradicting an identity law raises StructureError.
    """
    objects = tuple(objects)
    identities = dict(identities or {})
    for x in objects:
        identities.setdefault(x, default_identity(x))

    entries = [(identities[x], (x, x)) for x in objects if identities[x] not in morphisms]
    entries.extend(morphisms.items())
    src = {m: s for m, (s, _) in entries}
    tgt = {m: t for m, (_, t) in entries}

    table: dict = {}
    for m, (s, t) in entries:
        if s in identities:
            table[(m, identities[s])] = m
        if t in identities:
            table[(identities[t], m)] = m
    errors = []
    for key, h in composition.items():
        if key in table and table[key] != h:
            errors.append(
                ValidationError(f"compose {key[0]!r}.{key[1]!r}", "contradicts an identity law")
            )
        table[key] = h
    if errors:
        raise StructureError("contradictory composition table", errors)
    return FinCategory(
        objects=objects,
        morphisms=tuple(m for m, _ in entries),
        src=src,
        tgt=tgt,
        identity=identities,
        composition=table,
    )


def identity_functor(C: FinCategory) -> FinFunctor:
    return FinFunctor(C, C, {x: x for x in C.objects}, {m: m for m in C.morphisms})


def compose_functors(G: FinFunctor, F: FinFunctor) -> FinFunctor:
    """G after F."""
    if F.codomain != G.domain:
        raise MismatchError("functors are not composable")
    return FinFunctor(
        F.domain,
        G.codomain,
        {x: G.obj(F.obj(x)) for x in F.domain.objects},
        {m: G.mor(F.mor(m)) for m in F.domain.morphisms},
    )


def identity_nat(F: FinFunctor) -> NatTrans:
    return NatTrans(F, F, {x: F.codomain.id(F.obj(x)) for x in F.domain.objects})


def vertical_compose(s: NatTrans, t: NatTrans) -> NatTrans:
    """s after t, for t: F -> G and s: G -> H.

    Raises:
        MismatchError: if s and t are not parallel
        StructureError: if some composite s_x . t_x is missing from the table
    """
    if t.codomain != s.codomain or t.domain != s.domain:
        raise MismatchError("transformations are not parallel")
    C = t.codomain
    missing = [x for x in t.domain.objects if (s.at(x), t.at(x)) not in C.composition]
    if missing:
        raise StructureError(f"components are not composable at {missing!r}")
    return NatTrans(
        t.source, s.target, {x: C.compose(s.at(x), t.at(x)) for x in t.domain.objects}
    )


def inverse_nat(t: NatTrans) -> NatTrans:
    C = t.codomain
    components = {}
    for x in t.domain.objects:
        inv = C.inverse(t.at(x))
        if inv is None:
            raise EquivalenceError("invertible", f"component at {x!r} has no inverse")
        components[x] = inv
    return NatTrans(t.target, t.source, components)


def whisker_left(H: FinFunctor, t: NatTrans) -> NatTrans:
    """H t, with components H(t_x)."""
    return NatTrans(
        compose_functors(H, t.source),
        compose_functors(H, t.target),
        {x: H.mor(t.at(x)) for x in t.domain.objects},
    )


def whisker_right(t: NatTrans, K: FinFunctor) -> NatTrans:
    """t K, with components t_{K(x)}."""
    return NatTrans(
        compose_functors(t.source, K),
        compose_functors(t.target, K),
        {x: t.at(K.obj(x)) for x in K.domain.objects},
    )


def pullback_category(
    F: FinFunctor, G: FinFunctor
) -> tuple[FinCategory, FinFunctor, FinFunctor]:
    """
    Pull back F: A -> S and G: B -> S in Cat.

    Objects and morphisms are matching pairs ordered by A-order then B-order;
    composition and identities act coordinatewise.
    """
    if F.codomain != G.codomain:
        raise MismatchError("cospan functors have different codomains")
    A, B = F.domain, G.domain

    def matching(xs, ys, f_map, g_map):
        by_image: dict = {}
        for y in ys:
            by_image.setdefault(g_map(y), []).append(y)
        return tuple((x, y) for x in xs for y in by_image.get(f_map(x), ()))

    objects = matching(A.objects, B.objects, F.obj, G.obj)
    morphisms = matching(A.morphisms, B.morphisms, F.mor, G.mor)
    src = {(f, g): (A.src[f], B.src[g]) for f, g in morphisms}
    tgt = {(f, g): (A.tgt[f], B.tgt[g]) for f, g in morphisms}
    identity = {(a, b): (A.id(a), B.id(b)) for a, b in objects}
    composition = {}
    for f1, g1 in morphisms:
        for f2 in A.outgoing(A.tgt[f1]):
            for g2 in B.outgoing(B.tgt[g1]):
                if F.mor(f2) == G.mor(g2):
                    composition[((f2, g2), (f1, g1))] = (
                        A.composition[(f2, f1)],
                        B.composition[(g2, g1)],
                    )
    P = FinCategory(objects, morphisms, src, tgt, identity, composition)
    left = FinFunctor(P, A, {o: o[0] for o in objects}, {m: m[0] for m in morphisms})
    right = FinFunctor(P, B, {o: o[1] for o in objects}, {m: m[1] for m in morphisms})
    logger.debug(f"Category pullback with {len(objects)} objects, {len(morphisms)} morphisms")
    return P, left, right
