"""Canonical text form of cell, object and morphism identifiers."""

import re
from typing import Hashable

ATOM_CHARS = "_'+*^~!?"
_BARE = re.compile(rf"[A-Za-z0-9{re.escape(ATOM_CHARS)}]+")


def format_name(x: Hashable) -> str:
    """Atoms print as themselves; tuples (pairs, fusion cells, paths) as ``(a,b)``.

    Strings that would read back as something else (all digits, or characters
    outside the atom alphabet) are double-quoted.
    """
    if isinstance(x, tuple):
        return "(" + ",".join(format_name(e) for e in x) + ")"
    if isinstance(x, str) and (x.isdigit() or not _BARE.fullmatch(x)):
        escaped = x.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    return str(x)


def default_identity(x: Hashable) -> Hashable:
    """Name of the automatic identity on x: ``id_x`` for atoms, ``(id,x)`` for tuples."""
    if isinstance(x, tuple):
        return ("id", x)
    return f"id_{x}"
