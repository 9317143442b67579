"""
Random instances for the randomized suites.

Every generator draws from an ``rng`` with the ``random.Random`` interface, so the
same seed reproduces the same instance whether it comes from the CLI or from a
Hypothesis ``randoms()`` strategy.
"""

from typing import Optional

from ..categories.catalog import inflate, skeleta
from ..categories.constructions import compose_functors, identity_functor
from ..categories.equivalence import promote_to_adjoint_equivalence
from ..globular.core import (
    compose_maps,
    empty_map,
    terminal_globular,
    validate_globular,
    validate_map,
)
from ..globular.limits import PullbackResult
from ..models.category import AdjointEquivalence, FinFunctor, NatTrans
from ..models.globular import GlobularMap, GlobularSet
from ..models.span import Span


def _slots(base: GlobularSet, lower: tuple, over: dict, k: int) -> list:
    """(base k-cell, source, target) triples a new k-cell can fill."""
    if k == 0:
        return [(b, None, None) for b in base.cells[0]]
    slots = []
    for b in base.cells[k]:
        s, t = base.src[k][b], base.tgt[k][b]
        for a in (c for c in lower if over[c] == s):
            for c in (c for c in lower if over[c] == t):
                slots.append((b, a, c))
    return slots


def _lift(
    base: GlobularSet, multiplicity, prefix: str, parallel
) -> tuple[GlobularSet, GlobularMap]:
    cells: dict = {}
    src: dict = {}
    tgt: dict = {}
    over: dict = {}
    components = []
    for k in range(base.dimension + 1):
        level = []
        src[k], tgt[k] = {}, {}
        for b, a, c in _slots(base, tuple(cells.get(k - 1, ())), over, k):
            if k >= 2 and not parallel(k, a, c, src, tgt):
                continue
            for _ in range(multiplicity(k, b)):
                cell = f"{prefix}{k}_{len(level)}"
                level.append(cell)
                over[cell] = b
                if k:
                    src[k][cell], tgt[k][cell] = a, c
        cells[k] = level
        components.append({cell: over[cell] for cell in level})
    X = validate_globular(base.dimension, cells, src, tgt)
    return X, validate_map(X, base, dict(enumerate(components)))


def _parallel(k, a, c, src, tgt) -> bool:
    return src[k - 1][a] == src[k - 1][c] and tgt[k - 1][a] == tgt[k - 1][c]


def random_lift(
    base: GlobularSet,
    rng,
    min_mult: int = 0,
    max_mult: int = 2,
    max_cells: int = 5,
    prefix: str = "c",
) -> tuple[GlobularSet, GlobularMap]:
    """
    A globular set over ``base`` with its projection.

    Each base k-cell b gets between ``min_mult`` and ``max_mult`` cells for every
    parallel pair of lifted boundary cells; at most ``max_cells`` per dimension.
    """
    used = {}

    def multiplicity(k, _b):
        m = rng.randint(min_mult, max_mult)
        m = min(m, max_cells - used.get(k, 0))
        used[k] = used.get(k, 0) + max(m, 0)
        return max(m, 0)

    return _lift(base, multiplicity, prefix, _parallel)


def random_equivalence_leg(
    base: GlobularSet, rng, prefix: str = "e"
) -> tuple[GlobularSet, GlobularMap]:
    """
    A lift whose projection passes the equivalence profile.

    One cell per slot everywhere, except one or two per slot at the level just
    below the top (level 0 when n <= 1). Lower levels are then bijective, so every
    top-level slot pairs parallel cells.
    """
    n = base.dimension
    doubled = max(n - 1, 0)

    def multiplicity(k, _b):
        return rng.randint(1, 2) if k == doubled else 1

    return _lift(base, multiplicity, prefix, _parallel)


def random_globular(n: int, rng, max_cells: int = 5, prefix: str = "x") -> GlobularSet:
    base = terminal_globular(n)
    used = {}

    def multiplicity(k, _b):
        cap = max_cells - used.get(k, 0)
        m = min(rng.randint(0, max_cells if k == 0 else 2), cap)
        used[k] = used.get(k, 0) + m
        return m

    X, _ = _lift(base, multiplicity, prefix, _parallel)
    return X


def random_cospan(rng, max_dim: int = 3, max_cells: int = 5) -> tuple[GlobularMap, GlobularMap]:
    """f: X -> S and g: Y -> S over a random S."""
    n = rng.randint(0, max_dim)
    S = random_globular(n, rng, max_cells, prefix="s")
    _, f = random_lift(S, rng, max_cells=max_cells, prefix="x")
    _, g = random_lift(S, rng, max_cells=max_cells, prefix="y")
    return f, g


def random_cone(pb: PullbackResult, rng, max_cells: int = 3) -> tuple:
    """(Z, p, q) commuting over the cospan, factored through a random Z -> P.

    One draw in eight is the empty cone out of the initial globular set.
    """
    if rng.randint(0, 7) == 0:
        p, q = empty_map(pb.left_leg.codomain), empty_map(pb.right_leg.codomain)
        return p.domain, p, q
    Z, h = random_lift(pb.apex, rng, min_mult=0, max_mult=1, max_cells=max_cells, prefix="z")
    return Z, compose_maps(pb.left_leg, h), compose_maps(pb.right_leg, h)


def random_span_equivalence(
    rng, middle: Optional[GlobularSet] = None, max_dim: int = 2, max_cells: int = 2
) -> tuple[Span, Span]:
    """
    Two composable span equivalences X <- Z1 -> Y and Y <- Z2 -> W.

    X and W are equivalence lifts of Y; each apex is an equivalence lift of its
    left (resp. right) foot.
    """
    Y = middle or random_globular(rng.randint(0, max_dim), rng, max_cells, prefix="y")
    _, pX = random_equivalence_leg(Y, rng, prefix="a")
    Z1, u1 = random_equivalence_leg(pX.domain, rng, prefix="p")
    _, pW = random_equivalence_leg(Y, rng, prefix="b")
    Z2, u2 = random_equivalence_leg(pW.domain, rng, prefix="q")
    return (
        Span(Z1, u1, compose_maps(pX, u1)),
        Span(Z2, compose_maps(pW, u2), u2),
    )


def random_adjoint_equivalence(rng, max_objects: int = 4) -> AdjointEquivalence:
    """
    Inflate a skeleton K twice and connect the copies.

    S picks a copy sigma_k and conjugates by an automorphism phi_k; T picks a copy
    tau_k. The unit at (k, i) is (phi_k, i, tau_k); the counit handed to promotion
    is (phi_k^-1, sigma_k, j).
    """
    catalog = skeleta()
    K = catalog[rng.choice(sorted(catalog))]

    def copies():
        counts = {k: 1 for k in K.objects}
        for k in K.objects:
            if sum(counts.values()) < max_objects and rng.randint(0, 1):
                counts[k] = 2
        return counts

    A, B = inflate(K, copies()), inflate(K, copies())
    phi = {}
    for k in K.objects:
        autos = [m for m in K.hom(k, k) if K.is_iso(m)]
        phi[k] = rng.choice(autos)
    sigma = {k: rng.choice([i for (k2, i) in B.objects if k2 == k]) for k in K.objects}
    tau = {k: rng.choice([i for (k2, i) in A.objects if k2 == k]) for k in K.objects}

    S = FinFunctor(
        A,
        B,
        {(k, i): (k, sigma[k]) for k, i in A.objects},
        {
            (f, i, j): (
                K.compose(phi[K.tgt[f]], f, K.inverse(phi[K.src[f]])),
                sigma[K.src[f]],
                sigma[K.tgt[f]],
            )
            for f, i, j in A.morphisms
        },
    )
    T = FinFunctor(
        B,
        A,
        {(k, j): (k, tau[k]) for k, j in B.objects},
        {(g, i, j): (g, tau[K.src[g]], tau[K.tgt[g]]) for g, i, j in B.morphisms},
    )
    eta = NatTrans(
        identity_functor(A),
        compose_functors(T, S),
        {(k, i): (phi[k], i, tau[k]) for k, i in A.objects},
    )
    eps = NatTrans(
        compose_functors(S, T),
        identity_functor(B),
        {(k, j): (K.inverse(phi[k]), sigma[k], j) for k, j in B.objects},
    )
    return promote_to_adjoint_equivalence(S, T, eta, eps)
