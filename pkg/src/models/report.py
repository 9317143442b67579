"""Verdict-plus-witnesses reports returned by every checker."""

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

DEFAULT_WITNESS_LIMIT = 16


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of a property check.

    The verdict is true exactly when no witness was found. Witnesses are capped
    at the limit the report was built with; ``truncated`` records whether more
    existed.
    """

    name: str
    witnesses: tuple = ()
    parts: tuple["PropertyReport", ...] = ()
    truncated: bool = False
    coverage: Counter = field(default_factory=Counter, compare=False)

    @property
    def verdict(self) -> bool:
        return not self.witnesses

    def __bool__(self) -> bool:
        return self.verdict

    @classmethod
    def from_witnesses(
        cls,
        name: str,
        witnesses: Iterable[Any],
        limit: int = DEFAULT_WITNESS_LIMIT,
        coverage: Optional[Counter] = None,
    ) -> "PropertyReport":
        """Collect at most ``limit`` witnesses from an iterable (consumed lazily)."""
        limit = max(1, limit)
        found = []
        truncated = False
        for witness in witnesses:
            if len(found) >= limit:
                truncated = True
                break
            found.append(witness)
        return cls(
            name=name,
            witnesses=tuple(found),
            truncated=truncated,
            coverage=coverage if coverage is not None else Counter(),
        )

    @classmethod
    def aggregate(
        cls,
        name: str,
        parts: Iterable["PropertyReport"],
        limit: int = DEFAULT_WITNESS_LIMIT,
    ) -> "PropertyReport":
        """Combine sub-reports; witnesses are (part name, witness) pairs."""
        parts = tuple(parts)
        limit = max(1, limit)
        witnesses = [(p.name, w) for p in parts for w in p.witnesses]
        coverage = Counter()
        for part in parts:
            coverage.update(part.coverage)
        return cls(
            name=name,
            witnesses=tuple(witnesses[:limit]),
            parts=parts,
            truncated=len(witnesses) > limit or any(p.truncated for p in parts),
            coverage=coverage,
        )

    def part(self, name: str) -> "PropertyReport":
        for p in self.parts:
            if p.name == name:
                return p
        raise KeyError(name)

    def to_lines(self) -> list[str]:
        """Render as ``name: true|false`` lines, one per part, witnesses indented."""
        lines = []
        for report in self.parts or (self,):
            lines.append(f"{report.name}: {str(report.verdict).lower()}")
            for witness in report.witnesses:
                lines.append(f"  witness: {witness!r}")
            if report.truncated:
                lines.append("  (more witnesses omitted)")
        if self.parts:
            lines.append(f"{self.name}: {str(self.verdict).lower()}")
        return lines
