"""Canonical text form of presentations; the parser reads it back to equal structures."""

from typing import Hashable

from ..algebras.one_alg import OneAlgebra
from ..models.category import AdjointEquivalence, FinCategory, FinFunctor, NatTrans
from ..models.globular import GlobularMap, GlobularSet
from ..models.span import CategorySpan, Span
from ..utils.names import default_identity, format_name
from .parser import Presentation

_KIND_OF = (
    (GlobularSet, "globular"),
    (GlobularMap, "map"),
    (FinCategory, "category"),
    (FinFunctor, "functor"),
    (NatTrans, "nat"),
    (AdjointEquivalence, "adjequiv"),
    (Span, "span"),
    (CategorySpan, "span"),
    (OneAlgebra, "algebra"),
)


def kind_of(structure) -> str:
    for cls, kind in _KIND_OF:
        if isinstance(structure, cls):
            return kind
    raise TypeError(f"no presentation for {type(structure).__name__}")


def _line(key: str, entries) -> str:
    entries = list(entries)
    return f"{key}: " + " ".join(entries) if entries else f"{key}:"


def _is_total(C: FinCategory) -> bool:
    return all((g, f) in C.composition for f in C.morphisms for g in C.outgoing(C.tgt[f]))


class _Emitter:
    """Emits each structure once, dependencies first, under role names kept unique."""

    def __init__(self, reserved: Hashable):
        self.blocks: list[str] = []
        self.named: list[tuple] = []
        self.used = {format_name(reserved)}

    def name_for(self, kind: str, structure, role: str) -> str:
        for known_kind, known, name in self.named:
            if known_kind == kind and known == structure:
                return name
        name = role
        while name in self.used:
            name += "'"
        self.used.add(name)
        self.emit(kind, structure, name)
        return name

    def emit(self, kind: str, structure, name: str) -> None:
        lines = getattr(self, f"_{kind}")(structure, format_name(name))
        self.named.append((kind, structure, format_name(name)))
        self.blocks.append("\n".join(lines))

    def _globular(self, X: GlobularSet, name: str) -> list[str]:
        lines = [f"globular {name} n={X.dimension}"]
        for k in range(X.dimension + 1):
            lines.append(_line(f"cells {k}", (format_name(c) for c in X.cells[k])))
        for label, tables in (("src", X.src), ("tgt", X.tgt)):
            for k in range(1, X.dimension + 1):
                lines.append(
                    _line(
                        f"{label} {k}",
                        (f"{format_name(c)}->{format_name(tables[k][c])}" for c in X.cells[k]),
                    )
                )
        return lines

    def _map(self, f: GlobularMap, name: str) -> list[str]:
        X = self.name_for("globular", f.domain, "X")
        Y = self.name_for("globular", f.codomain, "Y")
        lines = [f"map {name}: {X} -> {Y}"]
        for k in range(f.dimension + 1):
            lines.append(
                _line(
                    f"comp {k}",
                    (
                        f"{format_name(c)}=>{format_name(f.components[k][c])}"
                        for c in f.domain.cells[k]
                    ),
                )
            )
        return lines

    def _category(self, C: FinCategory, name: str) -> list[str]:
        header = f"category {name}" if _is_total(C) else f"category {name} partial"
        order = {m: i for i, m in enumerate(C.morphisms)}
        composites = sorted(
            (
                (g, f, h)
                for (g, f), h in C.composition.items()
                if not C.is_identity(g) and not C.is_identity(f)
            ),
            key=lambda entry: (order[entry[1]], order[entry[0]]),
        )
        lines = [
            header,
            _line("objects", (format_name(x) for x in C.objects)),
            _line(
                "morphisms",
                (
                    f"{format_name(m)}: {format_name(C.src[m])}->{format_name(C.tgt[m])}"
                    for m in C.morphisms
                ),
            ),
            _line(
                "compose",
                (f"{format_name(g)}.{format_name(f)} = {format_name(h)}" for g, f, h in composites),
            ),
        ]
        renamed = [x for x in C.objects if C.id(x) != default_identity(x)]
        if renamed:
            lines.append(
                _line("identities", (f"{format_name(x)}={format_name(C.id(x))}" for x in renamed))
            )
        return lines

    def _functor(self, F: FinFunctor, name: str) -> list[str]:
        A = self.name_for("category", F.domain, "A")
        B = self.name_for("category", F.codomain, "B")
        dom, cod = F.domain, F.codomain
        explicit = [
            m
            for m in dom.morphisms
            if not (dom.is_identity(m) and F.mor(m) == cod.id(F.obj(dom.src[m])))
        ]
        return [
            f"functor {name}: {A} -> {B}",
            _line("obj", (f"{format_name(x)}=>{format_name(F.obj(x))}" for x in dom.objects)),
            _line("mor", (f"{format_name(m)}=>{format_name(F.mor(m))}" for m in explicit)),
        ]

    def _components(self, key: str, t: NatTrans) -> str:
        return _line(key, (f"{format_name(x)}=>{format_name(t.at(x))}" for x in t.domain.objects))

    def _nat(self, t: NatTrans, name: str) -> list[str]:
        F = self.name_for("functor", t.source, "F")
        G = self.name_for("functor", t.target, "G")
        return [f"nat {name}: {F} -> {G}", self._components("comp", t)]

    def _adjequiv(self, e: AdjointEquivalence, name: str) -> list[str]:
        S = self.name_for("functor", e.S, "S")
        T = self.name_for("functor", e.T, "T")
        return [
            f"adjequiv {name}: {S} {T}",
            self._components("eta", e.eta),
            self._components("eps", e.eps),
        ]

    def _span(self, s, name: str) -> list[str]:
        leg_kind = "map" if isinstance(s, Span) else "functor"
        u = self.name_for(leg_kind, s.left, "u")
        v = self.name_for(leg_kind, s.right, "v")
        return [f"span {name}: {u} {v}"]

    def _algebra(self, alg: OneAlgebra, name: str) -> list[str]:
        G = alg.carrier
        carrier = self.name_for("globular", G, "G")
        order = {e: i for i, e in enumerate(G.cells[1])}
        products = sorted(
            alg.products.items(), key=lambda item: (order[item[0][1]], order[item[0][0]])
        )
        return [
            f"algebra {name}: {carrier}",
            _line(
                "unit",
                (
                    f"{format_name(x)}=>{format_name(alg.units[x])}"
                    for x in G.cells[0]
                    if x in alg.units
                ),
            ),
            _line(
                "eval",
                (f"{format_name(g)}.{format_name(f)} = {format_name(h)}" for (g, f), h in products),
            ),
        ]


def print_presentation(p: Presentation) -> str:
    """Dependencies first, each once, then the principal section; newline-terminated."""
    emitter = _Emitter(p.name)
    emitter.emit(p.kind, p.body, p.name)
    return "\n\n".join(emitter.blocks) + "\n"


def dumps(structure, name: Hashable = "main") -> str:
    return print_presentation(Presentation(kind_of(structure), name, structure))
