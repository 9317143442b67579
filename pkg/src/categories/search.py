"""Exhaustive enumeration of functors and the brute-force equivalence oracle."""

import logging
from itertools import product
from typing import Iterator, Optional

from ..models.category import AdjointEquivalence, FinCategory, FinFunctor, NatTrans
from ..utils.validators import SearchLimitError
from .constructions import compose_functors, identity_functor
from .equivalence import promote_to_adjoint_equivalence
from .laws import check_naturality, functor_props, is_essentially_surjective

logger = logging.getLogger(__name__)

MAX_OBJECTS = 4
MAX_MORPHISMS = 12


def iter_functors(A: FinCategory, B: FinCategory) -> Iterator[FinFunctor]:
    """Every functor A -> B, ordered by object images then morphism images."""
    pending = [m for m in A.morphisms if not A.is_identity(m)]
    involving: dict = {m: [] for m in A.morphisms}
    for (g, f), h in A.composition.items():
        for m in {g, f, h}:
            involving[m].append((g, f, h))

    def consistent(on_mor: dict, m) -> bool:
        for g, f, h in involving[m]:
            if g in on_mor and f in on_mor and h in on_mor:
                if B.composition.get((on_mor[g], on_mor[f])) != on_mor[h]:
                    return False
        return True

    def assign(on_obj: dict, on_mor: dict, i: int) -> Iterator[FinFunctor]:
        if i == len(pending):
            yield FinFunctor(A, B, dict(on_obj), dict(on_mor))
            return
        m = pending[i]
        for candidate in B.hom(on_obj[A.src[m]], on_obj[A.tgt[m]]):
            on_mor[m] = candidate
            if consistent(on_mor, m):
                yield from assign(on_obj, on_mor, i + 1)
            del on_mor[m]

    for images in product(B.objects, repeat=len(A.objects)):
        on_obj = dict(zip(A.objects, images))
        on_mor = {A.id(x): B.id(on_obj[x]) for x in A.objects}
        if all(consistent(on_mor, A.id(x)) for x in A.objects):
            yield from assign(on_obj, on_mor, 0)


def _natural_isos(source: FinFunctor, target: FinFunctor) -> Iterator[NatTrans]:
    C = source.codomain
    objects = source.domain.objects
    options = [
        [m for m in C.hom(source.obj(x), target.obj(x)) if C.is_iso(m)] for x in objects
    ]
    for picks in product(*options):
        t = NatTrans(source, target, dict(zip(objects, picks)))
        if check_naturality(t, 1):
            yield t


def _is_equivalence_candidate(F: FinFunctor) -> bool:
    props = functor_props(F, 1)
    return props.part("full").verdict and props.part("faithful").verdict and (
        is_essentially_surjective(F)
    )


def guard_size(C: FinCategory, max_objects: int = MAX_OBJECTS, max_morphisms: int = MAX_MORPHISMS):
    if len(C.objects) > max_objects or len(C.morphisms) > max_morphisms:
        raise SearchLimitError(
            f"{C!r} exceeds the search guard ({max_objects} objects, {max_morphisms} morphisms)"
        )


def are_equivalent_bruteforce(
    A: FinCategory,
    B: FinCategory,
    max_objects: int = MAX_OBJECTS,
    max_morphisms: int = MAX_MORPHISMS,
) -> Optional[AdjointEquivalence]:
    """
    Search all functor pairs and natural isomorphisms for an equivalence A ~ B.

    Returns the lexicographically first witness, promoted to an adjoint
    equivalence, or None when none exists.

    Raises:
        SearchLimitError: either category exceeds the size guard
    """
    guard_size(A, max_objects, max_morphisms)
    guard_size(B, max_objects, max_morphisms)
    backward = [T for T in iter_functors(B, A) if _is_equivalence_candidate(T)]
    tried = 0
    for S in iter_functors(A, B):
        if not _is_equivalence_candidate(S):
            continue
        for T in backward:
            tried += 1
            eta = next(_natural_isos(identity_functor(A), compose_functors(T, S)), None)
            if eta is None:
                continue
            eps = next(_natural_isos(compose_functors(S, T), identity_functor(B)), None)
            if eps is None:
                continue
            logger.info(f"Equivalence found after {tried} functor pairs")
            return promote_to_adjoint_equivalence(S, T, eta, eps)
    logger.info(f"No equivalence after {tried} functor pairs")
    return None
