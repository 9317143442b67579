"""Pullbacks of globular sets and the transfer of cell-wise properties along them."""

import logging
from dataclasses import dataclass

from ..models.globular import GlobularMap, GlobularSet
from ..utils.validators import ConeError, DomainError, MismatchError
from .core import (
    compose_maps,
    is_faithful_on,
    is_full_on,
    is_isomorphism,
    is_surjective_on,
    iter_globular_maps,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PullbackResult:
    """Apex P with projections i: P -> X and j: P -> Y over the cospan (f, g)."""

    apex: GlobularSet
    left_leg: GlobularMap
    right_leg: GlobularMap
    along: tuple[GlobularMap, GlobularMap]


def pullback_globular(f: GlobularMap, g: GlobularMap) -> PullbackResult:
    """
    Pull back f: X -> S and g: Y -> S.

    Apex k-cells are the pairs (x, y) with f_k(x) = g_k(y), ordered by X-order then
    Y-order; source and target act coordinatewise and the legs are projections.
    """
    if f.codomain != g.codomain:
        raise MismatchError("cospan legs have different codomains")
    X, Y = f.domain, g.domain
    n = X.dimension

    cells = []
    for k in range(n + 1):
        by_image: dict = {}
        for y in Y.cells[k]:
            by_image.setdefault(g.components[k][y], []).append(y)
        cells.append(
            tuple((x, y) for x in X.cells[k] for y in by_image.get(f.components[k][x], ()))
        )
    src = [{}] + [
        {(x, y): (X.src[k][x], Y.src[k][y]) for x, y in cells[k]} for k in range(1, n + 1)
    ]
    tgt = [{}] + [
        {(x, y): (X.tgt[k][x], Y.tgt[k][y]) for x, y in cells[k]} for k in range(1, n + 1)
    ]
    apex = GlobularSet(n, tuple(cells), tuple(src), tuple(tgt))
    left = GlobularMap(apex, X, tuple({p: p[0] for p in level} for level in cells))
    right = GlobularMap(apex, Y, tuple({p: p[1] for p in level} for level in cells))
    logger.debug(f"Pullback apex sizes {[len(c) for c in cells]}")
    return PullbackResult(apex, left, right, (f, g))


def _first_disagreement(a: GlobularMap, b: GlobularMap):
    for k in range(a.dimension + 1):
        for cell in a.domain.cells[k]:
            if a.components[k][cell] != b.components[k][cell]:
                return k, cell
    return None


def mediating_map(
    pb: PullbackResult, Z: GlobularSet, p: GlobularMap, q: GlobularMap
) -> GlobularMap:
    """The unique h: Z -> P with i h = p and j h = q, given by z -> (p(z), q(z))."""
    f, g = pb.along
    if p.domain != Z or q.domain != Z:
        raise MismatchError("cone legs must start at Z")
    if p.codomain != f.domain or q.codomain != g.domain:
        raise MismatchError("cone legs do not land on the cospan feet")
    failure = _first_disagreement(compose_maps(f, p), compose_maps(g, q))
    if failure is not None:
        raise ConeError(*failure, "f.p and g.q disagree")
    components = tuple(
        {z: (p.components[k][z], q.components[k][z]) for z in Z.cells[k]}
        for k in range(Z.dimension + 1)
    )
    return GlobularMap(Z, pb.apex, components)


def universal_property_oracle(
    pb: PullbackResult, Z: GlobularSet, p: GlobularMap, q: GlobularMap
) -> list[GlobularMap]:
    """Every map Z -> P making both triangles commute, by exhaustive enumeration."""
    return [
        h
        for h in iter_globular_maps(Z, pb.apex)
        if compose_maps(pb.left_leg, h) == p and compose_maps(pb.right_leg, h) == q
    ]


def swap_isomorphism(pb_fg: PullbackResult, pb_gf: PullbackResult) -> GlobularMap:
    """The pair swap (x, y) -> (y, x) from the apex of (f, g) to that of (g, f)."""
    f, g = pb_fg.along
    if pb_gf.along != (g, f):
        raise MismatchError("second pullback is not along the swapped cospan")
    P = pb_fg.apex
    components = tuple({(x, y): (y, x) for x, y in level} for level in P.cells)
    swap = GlobularMap(P, pb_gf.apex, components)
    if not is_isomorphism(swap):
        raise DomainError("pair swap is not a bijection")
    return swap


@dataclass(frozen=True)
class TransferClaim:
    """One implication: a property of f should carry over to the projection j."""

    prop: str
    k: int
    hypothesis: bool
    conclusion: bool

    @property
    def violated(self) -> bool:
        return self.hypothesis and not self.conclusion


@dataclass(frozen=True)
class TransferReport:
    pullback: PullbackResult
    claims: tuple[TransferClaim, ...]

    @property
    def violations(self) -> list[TransferClaim]:
        return [c for c in self.claims if c.violated]

    @property
    def verdict(self) -> bool:
        return not self.violations

    def to_lines(self) -> list[str]:
        lines = []
        for c in self.claims:
            status = "VIOLATED" if c.violated else "ok"
            lines.append(
                f"{c.prop}_{c.k}: f={str(c.hypothesis).lower()} "
                f"j={str(c.conclusion).lower()} {status}"
            )
        lines.append(f"transfer: {str(self.verdict).lower()}")
        return lines


def check_transfer(f: GlobularMap, g: GlobularMap) -> TransferReport:
    """Pull back and check that surjectivity, fullness and faithfulness pass from f to j."""
    pb = pullback_globular(f, g)
    j = pb.right_leg
    checks = [("surjective", 0, is_surjective_on)]
    for k in range(1, f.dimension + 1):
        checks.append(("full", k, is_full_on))
        checks.append(("faithful", k, is_faithful_on))
    claims = []
    for prop, k, check in checks:
        hypothesis = check(f, k, 1).verdict
        conclusion = check(j, k, 1).verdict
        claims.append(TransferClaim(prop, k, hypothesis, conclusion))
    report = TransferReport(pb, tuple(claims))
    if not report.verdict:
        logger.warning(f"Transfer violated: {report.violations}")
    return report

