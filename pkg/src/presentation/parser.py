"""
Parser for the line-oriented presentation format.

A document is a sequence of sections, each opened by a header line::

    globular X n=1          map f: X -> Y          category C [partial]
    functor F: A -> B       nat t: F -> G          adjequiv e: S T
    span s: u v             algebra N: G

followed by ``key: entries`` lines (``cells 0: a b``, ``src 1: f->a``,
``comp 1: f=>g``, ``objects: x y``, ``morphisms: f: x->y``, ``compose: g.f = h``,
``identities: x=i``, ``obj: x=>y``, ``mor: f=>g``, ``comp: x=>f``, ``eta: x=>f``,
``eps: y=>g``, ``unit: x=>f``, ``eval: g.f = h``). ``#`` starts a comment.
Sections refer to earlier sections by name; the last section is the principal one.

Headers and entry lines are pyparsing grammars, one line at a time. Problems are
collected as diagnostics with line and column. After the first problem inside a
section the rest of that section is skipped and parsing resumes at the next header.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Hashable, Optional

import pyparsing as pp

from ..algebras.one_alg import OneAlgebra
from ..categories.constructions import build_category, compose_functors, identity_functor
from ..categories.laws import structure_errors
from ..globular.core import validate_globular, validate_map
from ..models.category import AdjointEquivalence, FinFunctor, NatTrans
from ..models.span import CategorySpan, Span
from ..utils.names import ATOM_CHARS, default_identity
from ..utils.validators import Diagnostic, MismatchError, ParseError, StructureError

logger = logging.getLogger(__name__)

KINDS = ("globular", "map", "category", "functor", "nat", "adjequiv", "span", "algebra")

# Names
_atom = pp.Word(pp.alphanums + ATOM_CHARS).set_parse_action(
    lambda t: int(t[0]) if t[0].isdigit() else t[0]
)
_quoted = pp.QuotedString('"', esc_char="\\")
_value = pp.Forward()
_tuple = pp.Suppress("(") + pp.Optional(pp.delimited_list(_value)) + pp.Suppress(")")
_tuple.set_parse_action(lambda t: [tuple(t)])
_value <<= _tuple | _quoted | _atom
_here = pp.Empty().set_parse_action(lambda s, loc, t: loc)
# [offset, value]
_name = pp.Group(_here + _value)
_integer = pp.pyparsing_common.integer

_COLON = pp.Suppress(":")
_ARROW = pp.Suppress("->")


def _top(expr: pp.ParserElement) -> pp.ParserElement:
    return expr.ignore(pp.python_style_comment).parse_with_tabs()


def _section_header(kind: str, *rest: pp.ParserElement) -> pp.ParserElement:
    expr = pp.Keyword(kind) + _name
    for part in rest:
        expr = expr + part
    return _top(expr)


_HEADERS = {
    "globular": _section_header("globular", pp.Suppress("n="), _integer),
    "map": _section_header("map", _COLON, _name, _ARROW, _name),
    "category": _section_header("category", pp.Optional(pp.Keyword("partial"))),
    "functor": _section_header("functor", _COLON, _name, _ARROW, _name),
    "nat": _section_header("nat", _COLON, _name, _ARROW, _name),
    "adjequiv": _section_header("adjequiv", _COLON, _name, _name),
    "span": _section_header("span", _COLON, _name, _name),
    "algebra": _section_header("algebra", _COLON, _name),
}

_key = (
    pp.Word(pp.alphas + "_")("key")
    + pp.Optional(pp.Group(_here + _integer)("index"))
    + _COLON
)
_KEY = _top(_key.copy())

_NAMES = _name
_ARROWS = _name + _ARROW + _name
_TYPED = _name + _COLON + _name + _ARROW + _name
_MAPSTO = _name + pp.Suppress("=>") + _name
_EQUATION = _name + pp.Suppress(".") + _name + pp.Suppress("=") + _name
_ASSIGN = _name + pp.Suppress("=") + _name


def _entry_line(entry: pp.ParserElement) -> pp.ParserElement:
    return _top(_key + pp.Group(pp.ZeroOrMore(pp.Group(entry)))("entries"))


# kind -> key -> (indexed, line grammar)
_KEYS = {
    "globular": {
        "cells": (True, _entry_line(_NAMES)),
        "src": (True, _entry_line(_ARROWS)),
        "tgt": (True, _entry_line(_ARROWS)),
    },
    "map": {"comp": (True, _entry_line(_MAPSTO))},
    "category": {
        "objects": (False, _entry_line(_NAMES)),
        "morphisms": (False, _entry_line(_TYPED)),
        "compose": (False, _entry_line(_EQUATION)),
        "identities": (False, _entry_line(_ASSIGN)),
    },
    "functor": {"obj": (False, _entry_line(_MAPSTO)), "mor": (False, _entry_line(_MAPSTO))},
    "nat": {"comp": (False, _entry_line(_MAPSTO))},
    "adjequiv": {"eta": (False, _entry_line(_MAPSTO)), "eps": (False, _entry_line(_MAPSTO))},
    "span": {},
    "algebra": {"unit": (False, _entry_line(_MAPSTO)), "eval": (False, _entry_line(_EQUATION))},
}
_REFERENCES = {
    "map": ("globular", "globular"),
    "functor": ("category", "category"),
    "nat": ("functor", "functor"),
    "adjequiv": ("functor", "functor"),
    "span": (("map", "functor"), ("map", "functor")),
    "algebra": ("globular",),
}


@dataclass(frozen=True)
class Presentation:
    """A named structure of one kind, with the position of its header."""

    kind: str
    name: Hashable
    body: Any
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


def parse_name(text: str) -> Hashable:
    """An atom, an all-digit atom as int, a quoted string, or a parenthesized tuple of names.

    Raises:
        ParseError: if text is not exactly one name
    """
    try:
        return _value.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise ParseError([Diagnostic(1, e.loc + 1, f"cannot read name {text!r}")]) from e


def _column(text: str, loc: int) -> int:
    """1-based column of the first non-blank character at or after loc."""
    rest = text[loc:].lstrip()
    return len(text) - len(rest) + 1


def _found(text: str, loc: int) -> str:
    rest = text[loc:].split()
    return repr(rest[0]) if rest else "end of line"


class _SectionFailed(Exception):
    pass


@dataclass
class _Section:
    kind: str
    name: Hashable
    line: int
    column: int
    refs: tuple = ()
    dimension: int = 0
    partial: bool = False
    entries: dict = field(default_factory=dict)


class _Parser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.diagnostics: list[Diagnostic] = []
        self.sections: dict = {}
        self.broken: set = set()
        self.current: Optional[_Section] = None
        self.skipping = False
        self.line = 0

    def fail(self, column: int, message: str):
        self.diagnostics.append(Diagnostic(self.line, column, message))
        raise _SectionFailed()

    def run(self) -> dict:
        for number, raw in enumerate(self.lines, start=1):
            self.line = number
            text = raw.rstrip()
            stripped = text.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                if stripped.split()[0] in KINDS:
                    self.close()
                    self.line = number
                    self.open(text)
                elif self.skipping:
                    continue
                elif self.current is None:
                    self.skipping = True
                    self.fail(_column(text, 0), "entry outside of any section")
                else:
                    self.body(text)
            except _SectionFailed:
                self.skipping = True
                if self.current is not None:
                    self.broken.add(self.current.name)
                    self.current = None
        self.close()
        if not self.sections and not self.diagnostics:
            self.diagnostics.append(Diagnostic(1, 1, "no sections"))
        if self.diagnostics:
            raise ParseError(self.diagnostics)
        return self.sections

    def close(self):
        try:
            self.finish()
        except _SectionFailed:
            pass
        self.skipping = False

    def open(self, text: str):
        self.skipping = False
        kind = text.split()[0]
        try:
            tokens = _HEADERS[kind].parse_string(text, parse_all=True)
        except pp.ParseBaseException as e:
            self.current = None
            self.fail(_column(text, e.loc), f"malformed {kind} header")
        _, (loc, name), *rest = tokens
        if name in self.sections or name in self.broken:
            self.current = None
            self.fail(loc + 1, f"section {name!r} declared twice")
        column = _column(text, 0)
        section = _Section(kind, name, self.line, column)
        self.current = section
        if kind == "globular":
            section.dimension = rest[0]
        elif kind == "category":
            section.partial = bool(rest)
        else:
            section.refs = tuple(
                self.resolve(ref, ref_loc + 1, expected)
                for (ref_loc, ref), expected in zip(rest, _REFERENCES[kind])
            )
            self.check_references(section, column)

    def resolve(self, name: Hashable, column: int, expected) -> Presentation:
        expected = expected if isinstance(expected, tuple) else (expected,)
        if name in self.broken:
            raise _SectionFailed()
        if name not in self.sections:
            self.fail(column, f"undeclared {'/'.join(expected)} {name!r}")
        found = self.sections[name]
        if found.kind not in expected:
            self.fail(column, f"{name!r} is a {found.kind}, expected {'/'.join(expected)}")
        return found

    def check_references(self, section: _Section, column: int):
        bodies = [r.body for r in section.refs]
        if section.kind == "map" and bodies[0].dimension != bodies[1].dimension:
            self.fail(column, "map between globular sets of different dimension")
        if section.kind == "nat" and (
            bodies[0].domain != bodies[1].domain or bodies[0].codomain != bodies[1].codomain
        ):
            self.fail(column, "natural transformation between non-parallel functors")
        if section.kind == "adjequiv" and (
            bodies[1].domain != bodies[0].codomain or bodies[1].codomain != bodies[0].domain
        ):
            self.fail(column, "T must run back from the codomain of S")
        if section.kind == "span" and section.refs[0].kind != section.refs[1].kind:
            self.fail(column, "span legs must both be maps or both be functors")
        if section.kind == "algebra" and bodies[0].dimension != 1:
            self.fail(column, "algebra carrier must be 1-dimensional")

    def body(self, text: str):
        section = self.current
        key_column = _column(text, 0)
        try:
            head = _KEY.parse_string(text)
        except pp.ParseBaseException:
            self.fail(key_column, "expected 'key: entries'")
        key, index = head["key"], head.get("index")
        known_key = _KEYS[section.kind].get(key)
        if known_key is None:
            self.fail(key_column, f"unknown key {key!r} in {section.kind} section")
        indexed, grammar = known_key
        if indexed and index is None:
            self.fail(key_column, f"{key!r} needs a dimension")
        if not indexed and index is not None:
            self.fail(index[0] + 1, f"{key!r} takes no dimension")
        k = None
        if index is not None:
            index_loc, k = index
            low = 1 if key in ("src", "tgt") else 0
            if not low <= k <= self.dimension_of(section):
                self.fail(index_loc + 1, f"dimension {k} out of range")

        try:
            parsed = grammar.parse_string(text, parse_all=True)
        except pp.ParseBaseException as e:
            self.fail(_column(text, e.loc), f"cannot read {_found(text, e.loc)}")
        handler = getattr(self, f"_{section.kind}_entry")
        for entry in parsed["entries"]:
            names = [value for _, value in entry]
            columns = [loc + 1 for loc, _ in entry]
            handler(section, key, k, names, columns)

    def dimension_of(self, section: _Section) -> int:
        if section.kind == "globular":
            return section.dimension
        return section.refs[0].body.dimension

    def require(self, condition: bool, column: int, message: str):
        if not condition:
            self.fail(column, message)

    # entry handlers

    def _globular_entry(self, section, key, k, names, columns):
        levels = section.entries.setdefault("cells", {})
        if key == "cells":
            levels.setdefault(k, []).extend(names)
            return
        cell, boundary = names
        self.require(cell in levels.get(k, ()), columns[0], f"undeclared {k}-cell {cell!r}")
        self.require(
            boundary in levels.get(k - 1, ()), columns[1], f"undeclared {k - 1}-cell {boundary!r}"
        )
        section.entries.setdefault(key, {}).setdefault(k, {})[cell] = boundary

    def _map_entry(self, section, key, k, names, columns):
        X, Y = (r.body for r in section.refs)
        a, b = names
        self.require(X.has_cell(k, a), columns[0], f"undeclared {k}-cell {a!r}")
        self.require(Y.has_cell(k, b), columns[1], f"undeclared {k}-cell {b!r}")
        section.entries.setdefault("comp", {}).setdefault(k, {})[a] = b

    def _category_entry(self, section, key, _k, names, columns):
        objects = section.entries.setdefault("objects", [])
        morphisms = section.entries.setdefault("morphisms", {})
        identities = section.entries.setdefault("identities", {})
        if key == "objects":
            objects.extend(names)
            return
        if key == "morphisms":
            f, x, y = names
            self.require(f not in morphisms, columns[0], f"morphism {f!r} declared twice")
            self.require(x in objects, columns[1], f"undeclared object {x!r}")
            self.require(y in objects, columns[2], f"undeclared object {y!r}")
            morphisms[f] = (x, y)
            return
        if key == "identities":
            x, i = names
            self.require(x in objects, columns[0], f"undeclared object {x!r}")
            self.require(i in morphisms, columns[1], f"undeclared morphism {i!r}")
            identities[x] = i
            return
        known = set(morphisms) | {
            identities.get(x, default_identity(x)) for x in objects
        }
        for name, column in zip(names, columns):
            self.require(name in known, column, f"undeclared morphism {name!r}")
        g, f, h = names
        section.entries.setdefault("compose", {})[(g, f)] = h

    def _functor_entry(self, section, key, _k, names, columns):
        A, B = (r.body for r in section.refs)
        a, b = names
        if key == "obj":
            self.require(A.has_object(a), columns[0], f"undeclared object {a!r}")
            self.require(B.has_object(b), columns[1], f"undeclared object {b!r}")
        else:
            self.require(A.has_morphism(a), columns[0], f"undeclared morphism {a!r}")
            self.require(B.has_morphism(b), columns[1], f"undeclared morphism {b!r}")
        section.entries.setdefault(key, {})[a] = b

    def _nat_entry(self, section, key, _k, names, columns):
        F = section.refs[0].body
        self._component(section, key, F.domain, F.codomain, names, columns)

    def _adjequiv_entry(self, section, key, _k, names, columns):
        S = section.refs[0].body
        C = S.domain if key == "eta" else S.codomain
        self._component(section, key, C, C, names, columns)

    def _component(self, section, key, domain, codomain, names, columns):
        x, f = names
        self.require(domain.has_object(x), columns[0], f"undeclared object {x!r}")
        self.require(codomain.has_morphism(f), columns[1], f"undeclared morphism {f!r}")
        section.entries.setdefault(key, {})[x] = f

    def _span_entry(self, section, key, _k, names, columns):
        self.fail(columns[0], "span sections take no entries")

    def _algebra_entry(self, section, key, _k, names, columns):
        G = section.refs[0].body
        if key == "unit":
            x, f = names
            self.require(G.has_cell(0, x), columns[0], f"undeclared 0-cell {x!r}")
            self.require(G.has_cell(1, f), columns[1], f"undeclared 1-cell {f!r}")
            section.entries.setdefault("unit", {})[x] = f
            return
        for name, column in zip(names, columns):
            self.require(G.has_cell(1, name), column, f"undeclared 1-cell {name!r}")
        g, f, h = names
        section.entries.setdefault("eval", {})[(g, f)] = h

    # section builders

    def finish(self):
        section, self.current = self.current, None
        if section is None:
            return
        self.line = section.line
        try:
            body = getattr(self, f"_build_{section.kind}")(section)
        except (StructureError, MismatchError) as e:
            self.broken.add(section.name)
            errors = getattr(e, "errors", None) or [e]
            for error in errors:
                self.diagnostics.append(Diagnostic(section.line, section.column, str(error)))
            raise _SectionFailed() from e
        self.sections[section.name] = Presentation(
            section.kind, section.name, body, section.line, section.column
        )

    def _build_globular(self, s: _Section):
        e = s.entries
        return validate_globular(
            s.dimension, e.get("cells", {}), e.get("src", {}), e.get("tgt", {})
        )

    def _build_map(self, s: _Section):
        X, Y = (r.body for r in s.refs)
        return validate_map(X, Y, s.entries.get("comp", {}))

    def _build_category(self, s: _Section):
        e = s.entries
        C = build_category(
            e.get("objects", []), e.get("morphisms", {}), e.get("compose", {}), e.get("identities")
        )
        errors = structure_errors(C, allow_partial=s.partial)
        if errors:
            raise StructureError("malformed category", errors)
        return C

    def _build_functor(self, s: _Section):
        A, B = (r.body for r in s.refs)
        on_objects = dict(s.entries.get("obj", {}))
        missing = [x for x in A.objects if x not in on_objects]
        if missing:
            raise StructureError(f"functor has no image for objects {missing!r}")
        on_morphisms = dict(s.entries.get("mor", {}))
        for x in A.objects:
            on_morphisms.setdefault(A.id(x), B.id(on_objects[x]))
        missing = [m for m in A.morphisms if m not in on_morphisms]
        if missing:
            raise StructureError(f"functor has no image for morphisms {missing!r}")
        return FinFunctor(
            A, B, on_objects, {m: on_morphisms[m] for m in A.morphisms}
        )

    def _components(self, entries: dict, objects) -> dict:
        missing = [x for x in objects if x not in entries]
        if missing:
            raise StructureError(f"no component at {missing!r}")
        return {x: entries[x] for x in objects}

    def _build_nat(self, s: _Section):
        F, G = (r.body for r in s.refs)
        return NatTrans(F, G, self._components(s.entries.get("comp", {}), F.domain.objects))

    def _build_adjequiv(self, s: _Section):
        S, T = (r.body for r in s.refs)
        A, B = S.domain, S.codomain
        eta = NatTrans(
            identity_functor(A),
            compose_functors(T, S),
            self._components(s.entries.get("eta", {}), A.objects),
        )
        eps = NatTrans(
            compose_functors(S, T),
            identity_functor(B),
            self._components(s.entries.get("eps", {}), B.objects),
        )
        return AdjointEquivalence(S, T, eta, eps)

    def _build_span(self, s: _Section):
        u, v = (r.body for r in s.refs)
        if s.refs[0].kind == "map":
            return Span(u.domain, u, v)
        return CategorySpan(u.domain, u, v)

    def _build_algebra(self, s: _Section):
        G = s.refs[0].body
        return OneAlgebra(G, dict(s.entries.get("unit", {})), dict(s.entries.get("eval", {})))


def parse_sections(text: str) -> dict:
    """Every section of a document by name, in document order.

    Raises:
        ParseError: with all diagnostics, in document order
    """
    return _Parser(text).run()


def parse(text: str) -> Presentation:
    """The principal (last) section of a document."""
    sections = parse_sections(text)
    return list(sections.values())[-1]


def parse_file(path: str) -> Presentation:
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    logger.debug(f"Parsing {path}")
    return parse(text)
