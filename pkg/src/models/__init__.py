"""Data models."""

from .category import AdjointEquivalence, FinCategory, FinFunctor, NatTrans
from .globular import GlobularMap, GlobularSet
from .report import PropertyReport
from .span import CategorySpan, Span

__all__ = [
    "AdjointEquivalence",
    "CategorySpan",
    "FinCategory",
    "FinFunctor",
    "GlobularMap",
    "GlobularSet",
    "NatTrans",
    "PropertyReport",
    "Span",
]
