"""Adjoint equivalences: promotion, inversion, composition and pseudo-inverses."""

import logging

from ..models.category import AdjointEquivalence, FinFunctor, NatTrans
from ..models.report import DEFAULT_WITNESS_LIMIT
from ..utils.validators import EquivalenceError, MismatchError
from .constructions import (
    compose_functors,
    identity_functor,
    identity_nat,
    inverse_nat,
)
from .laws import check_adjoint_equivalence, check_functor_laws, functor_props, is_natural_iso

logger = logging.getLogger(__name__)


def _first_failure(report) -> str:
    for part in report.parts:
        if not part.verdict:
            return part.name
    return report.name


def promote_to_adjoint_equivalence(
    S: FinFunctor,
    T: FinFunctor,
    eta: NatTrans,
    eps0: NatTrans,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
) -> AdjointEquivalence:
    """
    Rebuild the counit so that both triangle identities hold.

    eta is kept. For each b in B the new counit component is the unique morphism
    e: STb -> b with T(e) = eta_{Tb}^{-1}; T is full (existence) and faithful
    (uniqueness) because the inputs form an equivalence. eps0 only certifies that.

    Raises:
        EquivalenceError: inputs are not functors or not natural isomorphisms,
            or the rebuilt data fails the adjoint-equivalence suite
    """
    for name, F in (("S", S), ("T", T)):
        laws = check_functor_laws(F, witness_limit=witness_limit)
        if not laws:
            raise EquivalenceError(f"functor_{name}", f"fails {_first_failure(laws)}")
    for name, t in (("eta", eta), ("eps", eps0)):
        iso = is_natural_iso(t, witness_limit)
        if not iso:
            raise EquivalenceError(f"natural_iso_{name}", f"fails {_first_failure(iso)}")

    A, B = S.domain, S.codomain
    components = {}
    for b in B.objects:
        Tb = T.obj(b)
        wanted = A.inverse(eta.at(Tb))
        matches = [m for m in B.hom(S.obj(Tb), b) if T.mor(m) == wanted]
        if len(matches) != 1:
            raise EquivalenceError(
                "full_and_faithful", f"{len(matches)} candidates for the counit at {b!r}"
            )
        components[b] = matches[0]
    eps = NatTrans(compose_functors(S, T), identity_functor(B), components)
    e = AdjointEquivalence(S, T, eta, eps)
    report = check_adjoint_equivalence(e, witness_limit)
    if not report:
        raise EquivalenceError(_first_failure(report), f"witnesses {report.witnesses}")
    if eps0.components != components:
        logger.debug("Counit replaced to satisfy the triangle identities")
    return e


def identity_equivalence(C) -> AdjointEquivalence:
    I = identity_functor(C)
    return AdjointEquivalence(I, I, identity_nat(I), identity_nat(I))


def swap_equivalence(e: AdjointEquivalence) -> AdjointEquivalence:
    """(T, S, eps^{-1}, eta^{-1}): the same equivalence read from B to A."""
    return AdjointEquivalence(e.T, e.S, inverse_nat(e.eps), inverse_nat(e.eta))


def pseudo_inverse(
    F: FinFunctor, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> AdjointEquivalence:
    """
    Complete a surjective-on-objects, full and faithful F: C -> A to an equivalence.

    G sends each object a of A to the first object of C (in C's order) over a and
    each morphism to its unique preimage between the chosen objects, so F(G(a)) = a
    on the nose. The unit at c is the preimage of id_{F(c)}; the counit is the
    identity.

    Raises:
        EquivalenceError: F is missing one of the three properties
    """
    props = functor_props(F, witness_limit)
    if not props:
        raise EquivalenceError(_first_failure(props), f"witnesses {props.witnesses}")
    C, A = F.domain, F.codomain

    on_objects = {}
    for a in A.objects:
        on_objects[a] = next(c for c in C.objects if F.obj(c) == a)

    def lift(source, target, f):
        return next(m for m in C.hom(source, target) if F.mor(m) == f)

    on_morphisms = {
        f: lift(on_objects[A.src[f]], on_objects[A.tgt[f]], f) for f in A.morphisms
    }
    G = FinFunctor(A, C, on_objects, on_morphisms)
    eta = NatTrans(
        identity_functor(C),
        compose_functors(G, F),
        {c: lift(c, G.obj(F.obj(c)), A.id(F.obj(c))) for c in C.objects},
    )
    eps = NatTrans(compose_functors(F, G), identity_functor(A), {a: A.id(a) for a in A.objects})
    return promote_to_adjoint_equivalence(F, G, eta, eps, witness_limit)


def compose_equivalences(
    e1: AdjointEquivalence, e2: AdjointEquivalence, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> AdjointEquivalence:
    """
    Paste A ~ B and B ~ C into A ~ C.

    Unit: T1(eta2_{S1 a}) . eta1_a. Counit: eps2_c . S2(eps1_{T2 c}). The result is
    re-promoted, which re-verifies every law.
    """
    if e1.B != e2.A:
        raise MismatchError("middle categories differ")
    A, C = e1.A, e2.B
    S = compose_functors(e2.S, e1.S)
    T = compose_functors(e1.T, e2.T)
    eta = NatTrans(
        identity_functor(A),
        compose_functors(T, S),
        {a: A.compose(e1.T.mor(e2.eta.at(e1.S.obj(a))), e1.eta.at(a)) for a in A.objects},
    )
    eps = NatTrans(
        compose_functors(S, T),
        identity_functor(C),
        {c: C.compose(e2.eps.at(c), e2.S.mor(e1.eps.at(e2.T.obj(c)))) for c in C.objects},
    )
    return promote_to_adjoint_equivalence(S, T, eta, eps, witness_limit)
