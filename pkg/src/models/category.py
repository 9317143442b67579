"""Finite categories, functors, natural transformations and adjoint equivalences."""

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Mapping, Optional

Obj = Hashable
Mor = Hashable


@dataclass(frozen=True)
class FinCategory:
    """A finite category given by dense tables.

    ``composition`` maps a composable pair (g, f) with tgt(f) = src(g) to g . f.
    Object and morphism orders are fixed at construction and drive every
    deterministic choice downstream.
    """

    objects: tuple[Obj, ...]
    morphisms: tuple[Mor, ...]
    src: Mapping[Mor, Obj]
    tgt: Mapping[Mor, Obj]
    identity: Mapping[Obj, Mor]
    composition: Mapping[tuple[Mor, Mor], Mor]

    def __repr__(self) -> str:
        return f"<FinCategory(objects={len(self.objects)}, morphisms={len(self.morphisms)})>"

    @cached_property
    def _homs(self) -> dict:
        homs: dict = {}
        for m in self.morphisms:
            homs.setdefault((self.src[m], self.tgt[m]), []).append(m)
        return {key: tuple(value) for key, value in homs.items()}

    @cached_property
    def _outgoing(self) -> dict:
        out: dict = {x: [] for x in self.objects}
        for m in self.morphisms:
            out.setdefault(self.src[m], []).append(m)
        return {key: tuple(value) for key, value in out.items()}

    @cached_property
    def _identities(self) -> frozenset:
        return frozenset(self.identity.values())

    @cached_property
    def _object_positions(self) -> dict:
        return {x: i for i, x in enumerate(self.objects)}

    @cached_property
    def _morphism_positions(self) -> dict:
        return {m: i for i, m in enumerate(self.morphisms)}

    def hom(self, x: Obj, y: Obj) -> tuple[Mor, ...]:
        return self._homs.get((x, y), ())

    def outgoing(self, x: Obj) -> tuple[Mor, ...]:
        return self._outgoing.get(x, ())

    def id(self, x: Obj) -> Mor:
        return self.identity[x]

    def is_identity(self, m: Mor) -> bool:
        return m in self._identities

    def compose(self, *chain: Mor) -> Mor:
        """Compose right to left: compose(h, g, f) = h . g . f."""
        result = chain[-1]
        for m in reversed(chain[:-1]):
            result = self.composition[(m, result)]
        return result

    def inverse(self, f: Mor) -> Optional[Mor]:
        x, y = self.src[f], self.tgt[f]
        for g in self.hom(y, x):
            if (
                self.composition.get((g, f)) == self.identity[x]
                and self.composition.get((f, g)) == self.identity[y]
            ):
                return g
        return None

    def is_iso(self, f: Mor) -> bool:
        return self.inverse(f) is not None

    def object_position(self, x: Obj) -> int:
        return self._object_positions[x]

    def morphism_position(self, m: Mor) -> int:
        return self._morphism_positions[m]

    def has_object(self, x: Obj) -> bool:
        return x in self._object_positions

    def has_morphism(self, m: Mor) -> bool:
        return m in self._morphism_positions


@dataclass(frozen=True)
class FinFunctor:
    """Object and morphism maps between finite categories."""

    domain: FinCategory
    codomain: FinCategory
    on_objects: Mapping[Obj, Obj]
    on_morphisms: Mapping[Mor, Mor]

    def __repr__(self) -> str:
        return f"<FinFunctor({self.domain!r} -> {self.codomain!r})>"

    def obj(self, x: Obj) -> Obj:
        return self.on_objects[x]

    def mor(self, f: Mor) -> Mor:
        return self.on_morphisms[f]


@dataclass(frozen=True)
class NatTrans:
    """Components t_x: F(x) -> G(x) for parallel functors F, G."""

    source: FinFunctor
    target: FinFunctor
    components: Mapping[Obj, Mor]

    def __repr__(self) -> str:
        return f"<NatTrans(objects={len(self.components)})>"

    @property
    def domain(self) -> FinCategory:
        return self.source.domain

    @property
    def codomain(self) -> FinCategory:
        return self.source.codomain

    def at(self, x: Obj) -> Mor:
        return self.components[x]


@dataclass(frozen=True)
class AdjointEquivalence:
    """S: A -> B, T: B -> A with unit eta: I_A -> TS and counit eps: ST -> I_B."""

    S: FinFunctor
    T: FinFunctor
    eta: NatTrans
    eps: NatTrans

    def __repr__(self) -> str:
        return f"<AdjointEquivalence({self.A!r} ~ {self.B!r})>"

    @property
    def A(self) -> FinCategory:
        return self.S.domain

    @property
    def B(self) -> FinCategory:
        return self.S.codomain
