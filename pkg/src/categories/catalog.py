"""Small named categories used by fixtures, generators and the search oracle."""

from typing import Hashable, Iterable, Mapping

from ..models.category import FinCategory
from .constructions import build_category


def terminal() -> FinCategory:
    return build_category(["*"], {}, {})


def discrete(n: int) -> FinCategory:
    return build_category([f"x{i}" for i in range(n)], {}, {})


def arrow() -> FinCategory:
    """a --f--> b"""
    return build_category(["a", "b"], {"f": ("a", "b")}, {})


def walking_iso() -> FinCategory:
    """Two objects a0, a1 and mutually inverse i: a0 -> a1, i_inv: a1 -> a0."""
    return build_category(
        ["a0", "a1"],
        {"i": ("a0", "a1"), "i_inv": ("a1", "a0")},
        {("i_inv", "i"): "id_a0", ("i", "i_inv"): "id_a1"},
    )


def cyclic_group(n: int) -> FinCategory:
    """Z/n as a one-object category; g<k> stands for the k-th power of the generator."""
    names = ["id_*"] + [f"g{k}" for k in range(1, n)]
    composition = {
        (names[j], names[i]): names[(i + j) % n] for i in range(1, n) for j in range(1, n)
    }
    return build_category(["*"], {m: ("*", "*") for m in names[1:]}, composition)


def idempotent_monoid() -> FinCategory:
    return build_category(["*"], {"e": ("*", "*")}, {("e", "e"): "e"})


def preorder(objects: Iterable[Hashable], relation: Iterable[tuple]) -> FinCategory:
    """
    The thin category of the reflexive-transitive closure of ``relation``.

    Morphisms are named by the pair (x, y) they witness; (x, x) is the identity.
    """
    objects = list(objects)
    below = {x: {x} for x in objects}
    for x, y in relation:
        below[y].add(x)
    changed = True
    while changed:
        changed = False
        for y in objects:
            closure = set().union(*(below[x] for x in below[y]))
            if closure != below[y]:
                below[y] = closure
                changed = True
    pairs = [(x, y) for x in objects for y in objects if x in below[y]]
    composition = {
        ((y, z), (x, y)): (x, z) for x, y in pairs for y2, z in pairs if y2 == y
    }
    return build_category(
        objects,
        {p: p for p in pairs},
        composition,
        identities={x: (x, x) for x in objects},
    )


def chain(n: int) -> FinCategory:
    """The ordinal 0 < 1 < ... < n-1."""
    return preorder(range(n), [(i, i + 1) for i in range(n - 1)])


def inflate(K: FinCategory, copies: Mapping[Hashable, int]) -> FinCategory:
    """
    Replace each object k of K by ``copies[k]`` isomorphic copies (k, i).

    Morphisms (f, i, j): (k, i) -> (k', j) for every f: k -> k' of K; composition
    acts on the K-component. The result is equivalent to K.
    """
    objects = [(k, i) for k in K.objects for i in range(copies.get(k, 1))]
    count = {k: copies.get(k, 1) for k in K.objects}
    morphisms = {}
    for f in K.morphisms:
        s, t = K.src[f], K.tgt[f]
        for i in range(count[s]):
            for j in range(count[t]):
                morphisms[(f, i, j)] = ((s, i), (t, j))
    composition = {}
    for (f, i, j), _ in morphisms.items():
        for g in K.outgoing(K.tgt[f]):
            for r in range(count[K.tgt[g]]):
                composition[((g, j, r), (f, i, j))] = (K.composition[(g, f)], i, r)
    return FinCategory(
        objects=tuple(objects),
        morphisms=tuple(morphisms),
        src={m: s for m, (s, _) in morphisms.items()},
        tgt={m: t for m, (_, t) in morphisms.items()},
        identity={(k, i): (K.id(k), i, i) for k, i in objects},
        composition=composition,
    )


def disjoint_union(C: FinCategory, D: FinCategory) -> FinCategory:
    """C + D with objects and morphisms tagged (0, -) and (1, -)."""
    objects = [(0, x) for x in C.objects] + [(1, y) for y in D.objects]
    morphisms = [(0, m) for m in C.morphisms] + [(1, m) for m in D.morphisms]
    tables = {0: C, 1: D}
    return FinCategory(
        objects=tuple(objects),
        morphisms=tuple(morphisms),
        src={(tag, m): (tag, tables[tag].src[m]) for tag, m in morphisms},
        tgt={(tag, m): (tag, tables[tag].tgt[m]) for tag, m in morphisms},
        identity={(tag, x): (tag, tables[tag].id(x)) for tag, x in objects},
        composition={
            ((tag, g), (tag, f)): (tag, h)
            for tag, table in tables.items()
            for (g, f), h in table.composition.items()
        },
    )


def skeleta() -> dict[str, FinCategory]:
    """Skeletal categories the random equivalence generator inflates."""
    return {
        "terminal": terminal(),
        "z2": cyclic_group(2),
        "z3": cyclic_group(3),
        "idempotent": idempotent_monoid(),
        "arrow": arrow(),
        "chain3": chain(3),
        "terminal+z2": disjoint_union(terminal(), cyclic_group(2)),
    }
