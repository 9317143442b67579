"""Error types shared by the validators and law checkers."""

from dataclasses import dataclass
from typing import Any, Optional


class ValidationError(Exception):
    """A single located violation of a structural or algebraic law."""

    def __init__(self, field: str, message: str):
        self.field = field
        self.message = message
        super().__init__(f"{field}: {message}")


class StructureError(ValueError):
    """Raised when input tables are malformed (dangling references, partial tables)."""

    def __init__(self, message: str, errors: Optional[list[ValidationError]] = None):
        self.errors = list(errors or [])
        detail = "; ".join(str(e) for e in self.errors[:8])
        super().__init__(f"{message}: {detail}" if detail else message)


class GlobularityError(StructureError):
    """Raised when globularity or map commutation fails; carries every violation."""

    @property
    def violations(self) -> list[ValidationError]:
        return self.errors


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


class MismatchError(ValueError):
    """Raised when two structures that must share an object do not."""


class ConeError(ValueError):
    """Raised when a cone over a cospan does not commute."""

    def __init__(self, dimension: int, cell: Any, message: str):
        self.dimension = dimension
        self.cell = cell
        super().__init__(f"k={dimension} {cell!r}: {message}")


class EquivalenceError(ValueError):
    """Raised when equivalence data is invalid or a precondition fails."""

    def __init__(self, prop: str, message: str):
        self.prop = prop
        super().__init__(f"{prop}: {message}")


class SearchLimitError(ValueError):
    """Raised when a brute-force search input exceeds the size guard."""


def raise_if_errors(errors: list[ValidationError], message: str, cls=StructureError) -> None:
    """Raise ``cls`` carrying ``errors`` when the list is non-empty."""
    if errors:
        raise cls(message, errors)


@dataclass(frozen=True)
class Diagnostic:
    """A parse problem at a 1-based line and column."""

    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


class ParseError(ValueError):
    """Raised when a presentation does not parse; carries every diagnostic."""

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics[:8]))
