"""Span equivalences of globular sets: profile check, composition, identity and swap."""

import logging

from ..globular.core import compose_maps, equivalence_profile, identity_map, is_isomorphism
from ..globular.limits import pullback_globular
from ..models.globular import GlobularMap, GlobularSet
from ..models.report import DEFAULT_WITNESS_LIMIT, PropertyReport
from ..models.span import Span
from ..utils.validators import MismatchError

logger = logging.getLogger(__name__)


def leg_reports(s: Span, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> tuple:
    left = equivalence_profile(s.left, witness_limit)
    right = equivalence_profile(s.right, witness_limit)
    return (
        PropertyReport.aggregate("left", left.parts, witness_limit),
        PropertyReport.aggregate("right", right.parts, witness_limit),
    )


def is_span_equivalence(s: Span, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> PropertyReport:
    """Both legs surjective on 0-cells, full on 1..n and faithful on n-cells."""
    legs = leg_reports(s, witness_limit)
    return PropertyReport.aggregate("span_equivalence", legs, witness_limit)


def identity_span(X: GlobularSet) -> Span:
    leg = identity_map(X)
    return Span(X, leg, leg)


def swap_span(s: Span) -> Span:
    return Span(s.apex, s.right, s.left)


def compose_spans(s1: Span, s2: Span) -> Span:
    """
    Compose X <- Z1 -> Y with Y <- Z2 -> W through the pullback of the inner legs.

    The apex R is the pullback of s1.right and s2.left over Y; the legs are
    s1.left . p and s2.right . q for the pullback projections p, q.
    """
    if s1.right.codomain != s2.left.codomain:
        raise MismatchError("spans do not share the middle object")
    pb = pullback_globular(s1.right, s2.left)
    left = compose_maps(s1.left, pb.left_leg)
    right = compose_maps(s2.right, pb.right_leg)
    logger.debug(f"Composed spans; apex has {pb.apex.total_cells} cells")
    return Span(pb.apex, left, right)


def span_isomorphism(s: Span, t: Span, apex_map: GlobularMap) -> bool:
    """True when apex_map: s.apex -> t.apex is bijective and commutes with both legs."""
    if apex_map.domain != s.apex or apex_map.codomain != t.apex:
        return False
    if s.feet != t.feet:
        return False
    return (
        is_isomorphism(apex_map)
        and compose_maps(t.left, apex_map) == s.left
        and compose_maps(t.right, apex_map) == s.right
    )
