"""Spans: an apex with two legs, over globular sets or over categories."""

from dataclasses import dataclass

from ..utils.validators import MismatchError
from .category import FinCategory, FinFunctor
from .globular import GlobularMap, GlobularSet


@dataclass(frozen=True)
class Span:
    """Z with legs u: Z -> X and v: Z -> Y."""

    apex: GlobularSet
    left: GlobularMap
    right: GlobularMap

    def __post_init__(self):
        if self.left.domain != self.apex or self.right.domain != self.apex:
            raise MismatchError("span legs must start at the apex")
        if self.left.dimension != self.right.dimension:
            raise MismatchError("span legs differ in dimension")

    @property
    def feet(self) -> tuple[GlobularSet, GlobularSet]:
        return self.left.codomain, self.right.codomain


@dataclass(frozen=True)
class CategorySpan:
    """C with functors u: C -> A and v: C -> B."""

    apex: FinCategory
    left: FinFunctor
    right: FinFunctor

    def __post_init__(self):
        if self.left.domain != self.apex or self.right.domain != self.apex:
            raise MismatchError("span legs must start at the apex")

    @property
    def feet(self) -> tuple[FinCategory, FinCategory]:
        return self.left.codomain, self.right.codomain
