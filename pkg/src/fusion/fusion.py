"""
Equivalence fusion of an adjoint equivalence and its two projections.

The fusion has the objects of A and of B side by side and four kinds of hom-set:
A(x, y), B(x, y), B(Sx, y) from an A-object to a B-object and B(x, Sy) from a
B-object to an A-object. Its projections onto A and B form a span whose legs are
surjective on objects, full and faithful; pseudo-inverting both legs recovers an
equivalence between the feet.
"""

import logging
from itertools import product
from typing import Hashable, Iterable, NamedTuple, Optional

from ..categories.equivalence import compose_equivalences, pseudo_inverse, swap_equivalence
from ..categories.laws import check_adjoint_equivalence, functor_props
from ..categories.search import iter_functors
from ..models.category import AdjointEquivalence, FinCategory, FinFunctor
from ..models.report import DEFAULT_WITNESS_LIMIT, PropertyReport
from ..models.span import CategorySpan
from ..utils.validators import EquivalenceError

logger = logging.getLogger(__name__)

SIDE_A = "A"
SIDE_B = "B"


class FusionObject(NamedTuple):
    side: str
    payload: Hashable


class FusionMorphism(NamedTuple):
    """<f, x, y>: payload f read in the hom-set that the sides of x and y select."""

    payload: Hashable
    src: FusionObject
    tgt: FusionObject


def fusion_pattern(x: FusionObject) -> str:
    return x.side


def _require_adjoint(e: AdjointEquivalence) -> None:
    report = check_adjoint_equivalence(e, 1)
    if not report:
        failing = next(p.name for p in report.parts if not p.verdict)
        raise EquivalenceError(failing, "not an adjoint equivalence")


def _payloads(e: AdjointEquivalence, x: FusionObject, y: FusionObject) -> tuple:
    A, B, S = e.A, e.B, e.S
    if x.side == SIDE_A and y.side == SIDE_A:
        return A.hom(x.payload, y.payload)
    if x.side == SIDE_B and y.side == SIDE_B:
        return B.hom(x.payload, y.payload)
    if x.side == SIDE_A:
        return B.hom(S.obj(x.payload), y.payload)
    return B.hom(x.payload, S.obj(y.payload))


def _compose(e: AdjointEquivalence, g: FusionMorphism, f: FusionMorphism) -> Hashable:
    """Payload of g . f following the eight side cases."""
    A, B, S, T = e.A, e.B, e.S, e.T
    x, y, z = f.src, f.tgt, g.tgt
    pattern = (x.side, y.side, z.side)
    if pattern == (SIDE_A, SIDE_A, SIDE_A):
        return A.compose(g.payload, f.payload)
    if pattern == (SIDE_A, SIDE_A, SIDE_B):
        return B.compose(g.payload, S.mor(f.payload))
    if pattern == (SIDE_B, SIDE_A, SIDE_A):
        return B.compose(S.mor(g.payload), f.payload)
    if pattern == (SIDE_A, SIDE_B, SIDE_A):
        eta_x = e.eta.at(x.payload)
        eta_z_inv = A.inverse(e.eta.at(z.payload))
        return A.compose(eta_z_inv, T.mor(g.payload), T.mor(f.payload), eta_x)
    # BBB, ABB, BBA and BAB all compose in B
    return B.compose(g.payload, f.payload)


def equivalence_fusion(e: AdjointEquivalence) -> FinCategory:
    """
    The fusion category of ``e``.

    Objects are the A-objects followed by the B-objects; morphisms are listed by
    source, then target, then payload order. Identities are <id_x, x, x>.

    Raises:
        EquivalenceError: ``e`` fails the adjoint-equivalence suite
    """
    _require_adjoint(e)
    objects = tuple(FusionObject(SIDE_A, a) for a in e.A.objects) + tuple(
        FusionObject(SIDE_B, b) for b in e.B.objects
    )
    morphisms = []
    homs: dict = {}
    for x, y in product(objects, repeat=2):
        hom = tuple(FusionMorphism(p, x, y) for p in _payloads(e, x, y))
        homs[(x, y)] = hom
        morphisms.extend(hom)

    identity = {}
    for x in objects:
        side = e.A if x.side == SIDE_A else e.B
        identity[x] = FusionMorphism(side.id(x.payload), x, x)

    composition = {}
    for f in morphisms:
        for z in objects:
            for g in homs[(f.tgt, z)]:
                composition[(g, f)] = FusionMorphism(_compose(e, g, f), f.src, z)

    fusion = FinCategory(
        objects=objects,
        morphisms=tuple(morphisms),
        src={m: m.src for m in morphisms},
        tgt={m: m.tgt for m in morphisms},
        identity=identity,
        composition=composition,
    )
    logger.debug(f"Fusion with {len(objects)} objects, {len(morphisms)} morphisms")
    return fusion


def projection_u(e: AdjointEquivalence, fusion: Optional[FinCategory] = None) -> FinFunctor:
    """Projection onto A: T on the B side, unit-corrected on mixed morphisms."""
    fusion = fusion or equivalence_fusion(e)
    A, T = e.A, e.T
    on_objects = {
        x: x.payload if x.side == SIDE_A else T.obj(x.payload) for x in fusion.objects
    }
    on_morphisms = {}
    for m in fusion.morphisms:
        sides = (m.src.side, m.tgt.side)
        if sides == (SIDE_A, SIDE_A):
            image = m.payload
        elif sides == (SIDE_B, SIDE_B):
            image = T.mor(m.payload)
        elif sides == (SIDE_A, SIDE_B):
            image = A.compose(T.mor(m.payload), e.eta.at(m.src.payload))
        else:
            image = A.compose(A.inverse(e.eta.at(m.tgt.payload)), T.mor(m.payload))
        on_morphisms[m] = image
    return FinFunctor(fusion, A, on_objects, on_morphisms)


def projection_v(e: AdjointEquivalence, fusion: Optional[FinCategory] = None) -> FinFunctor:
    """Projection onto B: S on the A side, the payload everywhere else."""
    fusion = fusion or equivalence_fusion(e)
    S = e.S
    on_objects = {
        x: S.obj(x.payload) if x.side == SIDE_A else x.payload for x in fusion.objects
    }
    on_morphisms = {
        m: S.mor(m.payload) if (m.src.side, m.tgt.side) == (SIDE_A, SIDE_A) else m.payload
        for m in fusion.morphisms
    }
    return FinFunctor(fusion, e.B, on_objects, on_morphisms)


def fuse_to_span(e: AdjointEquivalence) -> CategorySpan:
    fusion = equivalence_fusion(e)
    return CategorySpan(fusion, projection_u(e, fusion), projection_v(e, fusion))


def span_profile(span: CategorySpan, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> PropertyReport:
    """Both legs surjective on objects, full and faithful."""
    parts = (
        PropertyReport.aggregate("left", functor_props(span.left, witness_limit).parts),
        PropertyReport.aggregate("right", functor_props(span.right, witness_limit).parts),
    )
    return PropertyReport.aggregate("span_equivalence", parts, witness_limit)


def span_to_equivalence(
    span: CategorySpan, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> AdjointEquivalence:
    """
    A ~ C ~ B from a span A <- C -> B whose legs are surjective, full and faithful.

    Raises:
        EquivalenceError: a leg misses one of the three properties
    """
    for label, leg in (("left", span.left), ("right", span.right)):
        props = functor_props(leg, witness_limit)
        if not props:
            failing = next(p.name for p in props.parts if not p.verdict)
            raise EquivalenceError(f"{label}_{failing}", f"witnesses {props.witnesses}")
    to_a = pseudo_inverse(span.left, witness_limit)
    to_b = pseudo_inverse(span.right, witness_limit)
    return compose_equivalences(swap_equivalence(to_a), to_b, witness_limit)


def hom_bijection_report(
    e: AdjointEquivalence, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> PropertyReport:
    """Pairs of fusion objects on which u fails to be a bijection of hom-sets."""
    span = fuse_to_span(e)
    fusion, u = span.apex, span.left
    failures = []
    for x, y in product(fusion.objects, repeat=2):
        images = [u.mor(m) for m in fusion.hom(x, y)]
        target = e.A.hom(u.obj(x), u.obj(y))
        if len(set(images)) != len(images) or set(images) != set(target):
            failures.append((x, y))
    return PropertyReport.from_witnesses("hom_bijection", failures, witness_limit)


def find_span_bruteforce(
    A: FinCategory, B: FinCategory, candidates: Iterable[FinCategory]
) -> Optional[CategorySpan]:
    """First span A <- C -> B with a profile-passing pair of legs, C from ``candidates``."""
    for C in candidates:
        lefts = [u for u in iter_functors(C, A) if functor_props(u, 1)]
        if not lefts:
            continue
        for v in iter_functors(C, B):
            if functor_props(v, 1):
                return CategorySpan(C, lefts[0], v)
    return None
