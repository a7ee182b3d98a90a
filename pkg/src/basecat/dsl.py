"""Text front-end: parse ``.bcat`` declarations, print them back canonically.

The printer preserves declaration and item order and normalises only the
layout, so parsing what was printed gives back the same document, and
printing is idempotent. Identity morphisms are never written down: they
are synthesised during elaboration under the reserved ``id_<object>``
names, and composition entries may refer to them.

Ids are either simple tokens over ``[A-Za-z0-9_*']`` or balanced
parenthesised pair labels as emitted by the constructions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .constructions import GroupAction, validate_group_action
from .core import FinCat, FinFunctor, identity_id, validate_category, validate_functor
from .errors import ParseError, SourceSpan, UnknownObject, UnresolvedReference
from .family import IndexedFamily, validate_family
from .sets import ConcreteStructure, FinFn, FinSetObj, validate_concrete

KEYWORDS = {
    "category", "functor", "concrete", "action", "indexed",
    "over", "objects", "arrows", "compose", "group", "set", "phi",
    "fibre", "pull",
}

_SIMPLE_ID = re.compile(r"[A-Za-z0-9_*']+")
_PAIR_BODY = re.compile(r"[A-Za-z0-9_*'|,@()]+")


@dataclass(frozen=True)
class Token:
    kind: str  # 'id', 'kw', or a literal punctuation string
    text: str
    span: SourceSpan


def _tokenize(text: str, filename: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)

    def span(length: int) -> SourceSpan:
        return SourceSpan(filename, line, col, max(1, length))

    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
                col += 1
            continue
        # Identity ids of pair-named objects look like id_(X,x): a reserved
        # prefix glued to a balanced pair token.
        prefix = "id_(" if text.startswith("id_(", i) else "(" if ch == "(" else None
        if prefix is not None:
            depth = 0
            j = i + len(prefix) - 1
            while j < n:
                if text[j] == "(":
                    depth += 1
                elif text[j] == ")":
                    depth -= 1
                    if depth == 0:
                        break
                elif text[j] in " \t\r\n":
                    raise ParseError(span(j - i), "a balanced pair id", "whitespace inside '('")
                j += 1
            if depth != 0:
                raise ParseError(span(n - i), "a closing ')'", "end of input")
            body = text[i : j + 1]
            inner = body[len(prefix) : -1]
            if inner and not _PAIR_BODY.fullmatch(inner):
                raise ParseError(span(len(body)), "a pair id", repr(body))
            tokens.append(Token("id", body, span(len(body))))
            col += len(body)
            i = j + 1
            continue
        m = _SIMPLE_ID.match(text, i)
        if m:
            word = m.group(0)
            kind = "kw" if word in KEYWORDS else "id"
            tokens.append(Token(kind, word, span(len(word))))
            i = m.end()
            col += len(word)
            continue
        for punct in ("|->", "->", "{", "}", ":", ",", ".", "="):
            if text.startswith(punct, i):
                tokens.append(Token(punct, punct, span(len(punct))))
                i += len(punct)
                col += len(punct)
                break
        else:
            raise ParseError(span(1), "a token", repr(ch))
    return tokens


# Declarations. Spans do not take part in structural equality.


@dataclass(frozen=True)
class CategoryDecl:
    name: str
    objects: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]
    compose: tuple[tuple[str, str, str], ...]  # (g, f, h) meaning g . f = h
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class FunctorDecl:
    name: str
    source: str
    target: str
    objects: tuple[tuple[str, str], ...]
    arrows: tuple[tuple[str, str], ...]
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class ConcreteDecl:
    name: str
    over: str
    carriers: tuple[tuple[str, tuple[str, ...]], ...]
    actions: tuple[tuple[str, tuple[tuple[str, str], ...]], ...]
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class ActionDecl:
    name: str
    group: str
    elements: tuple[str, ...]
    phi: tuple[tuple[str, tuple[tuple[str, str], ...]], ...]
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class IndexedDecl:
    name: str
    base: str
    fibres: tuple[tuple[str, str], ...]
    pulls: tuple[tuple[str, str], ...]
    span: SourceSpan = field(compare=False)


Declaration = CategoryDecl | FunctorDecl | ConcreteDecl | ActionDecl | IndexedDecl


@dataclass(frozen=True)
class Document:
    declarations: tuple[Declaration, ...]

    def of_kind(self, cls) -> list:
        return [d for d in self.declarations if isinstance(d, cls)]


class _Parser:
    def __init__(self, tokens: list[Token], filename: str, text: str):
        self.tokens = tokens
        self.pos = 0
        self.filename = filename
        lines = text.splitlines() or [""]
        self.eof_span = SourceSpan(filename, len(lines), max(1, len(lines[-1])), 1)

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def error(self, expected: str) -> ParseError:
        tok = self.peek()
        if tok is None:
            return ParseError(self.eof_span, expected, "end of input")
        return ParseError(tok.span, expected, repr(tok.text))

    def take(self, kind: str, expected: str | None = None) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            raise self.error(expected or repr(kind))
        self.pos += 1
        return tok

    def take_kw(self, word: str) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != "kw" or tok.text != word:
            raise self.error(repr(word))
        self.pos += 1
        return tok

    def at_kw(self, *words: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind == "kw" and tok.text in words

    def at(self, kind: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind == kind

    def skip_commas(self) -> None:
        while self.at(","):
            self.pos += 1

    def ident(self, expected: str = "an identifier") -> str:
        return self.take("id", expected).text

    # Declarations

    def document(self) -> Document:
        decls: list[Declaration] = []
        names: dict[str, set[str]] = {}
        known: dict[str, set[str]] = {
            "category": set(), "functor": set(), "concrete": set(),
            "action": set(), "indexed": set(),
        }
        while self.peek() is not None:
            tok = self.peek()
            if not self.at_kw("category", "functor", "concrete", "action", "indexed"):
                raise self.error("a declaration keyword")
            kind = tok.text
            decl = getattr(self, "decl_" + kind)(known)
            if decl.name in known[kind]:
                raise ParseError(decl.span, f"a fresh {kind} name", repr(decl.name))
            known[kind].add(decl.name)
            decls.append(decl)
        return Document(tuple(decls))

    def _ref(self, kind: str, known: dict[str, set[str]]) -> str:
        tok = self.take("id", f"the name of a {kind}")
        if tok.text not in known[kind]:
            raise UnresolvedReference(tok.text, tok.span)
        return tok.text

    def decl_category(self, known) -> CategoryDecl:
        self.take_kw("category")
        name_tok = self.take("id", "a category name")
        self.take("{")
        self.take_kw("objects")
        self.take(":")
        objects = self.id_list()
        arrows: list[tuple[str, str, str]] = []
        if self.at_kw("arrows"):
            self.pos += 1
            self.take(":")
            while self.at("id"):
                nm = self.ident()
                self.take(":")
                dom = self.ident("a domain object")
                self.take("->")
                cod = self.ident("a codomain object")
                arrows.append((nm, dom, cod))
                self.skip_commas()
        compose: list[tuple[str, str, str]] = []
        if self.at_kw("compose"):
            self.pos += 1
            self.take(":")
            while self.at("id"):
                g = self.ident()
                self.take(".")
                f = self.ident("the earlier morphism")
                self.take("=")
                h = self.ident("the composite morphism")
                compose.append((g, f, h))
                self.skip_commas()
        self.take("}")
        return CategoryDecl(
            name_tok.text, tuple(objects), tuple(arrows), tuple(compose), name_tok.span
        )

    def decl_functor(self, known) -> FunctorDecl:
        self.take_kw("functor")
        name_tok = self.take("id", "a functor name")
        self.take(":")
        source = self._ref("category", known)
        self.take("->")
        target = self._ref("category", known)
        self.take("{")
        self.take_kw("objects")
        self.take(":")
        objects = self.maplet_list()
        arrows: tuple[tuple[str, str], ...] = ()
        if self.at_kw("arrows"):
            self.pos += 1
            self.take(":")
            arrows = self.maplet_list()
        self.take("}")
        return FunctorDecl(
            name_tok.text, source, target, tuple(objects), tuple(arrows), name_tok.span
        )

    def decl_concrete(self, known) -> ConcreteDecl:
        self.take_kw("concrete")
        name_tok = self.take("id", "a concrete structure name")
        self.take_kw("over")
        over = self._ref("category", known)
        self.take("{")
        carriers: list[tuple[str, tuple[str, ...]]] = []
        actions: list[tuple[str, tuple[tuple[str, str], ...]]] = []
        while self.at("id"):
            nm = self.ident()
            self.take(":")
            if self.at("{"):
                self.pos += 1
                elems = self.id_list()
                self.take("}")
                carriers.append((nm, tuple(elems)))
            else:
                actions.append((nm, tuple(self.maplet_list())))
        self.take("}")
        return ConcreteDecl(
            name_tok.text, over, tuple(carriers), tuple(actions), name_tok.span
        )

    def decl_action(self, known) -> ActionDecl:
        self.take_kw("action")
        name_tok = self.take("id", "an action name")
        self.take("{")
        self.take_kw("group")
        self.take(":")
        group = self._ref("category", known)
        self.take_kw("set")
        self.take(":")
        self.take("{")
        elements = self.id_list()
        self.take("}")
        phi: list[tuple[str, tuple[tuple[str, str], ...]]] = []
        while self.at_kw("phi"):
            self.pos += 1
            self.take(":")
            nm = self.ident("a group morphism")
            self.take(":")
            phi.append((nm, tuple(self.maplet_list())))
        self.take("}")
        return ActionDecl(
            name_tok.text, group, tuple(elements), tuple(phi), name_tok.span
        )

    def decl_indexed(self, known) -> IndexedDecl:
        self.take_kw("indexed")
        name_tok = self.take("id", "an indexed family name")
        self.take_kw("over")
        base = self._ref("category", known)
        self.take("{")
        fibres: list[tuple[str, str]] = []
        pulls: list[tuple[str, str]] = []
        while self.at_kw("fibre", "pull"):
            which = self.peek().text
            self.pos += 1
            nm = self.ident()
            self.take("=")
            if which == "fibre":
                fibres.append((nm, self._ref("category", known)))
            else:
                pulls.append((nm, self._ref("functor", known)))
        self.take("}")
        return IndexedDecl(
            name_tok.text, base, tuple(fibres), tuple(pulls), name_tok.span
        )

    def id_list(self) -> list[str]:
        out = []
        while self.at("id"):
            out.append(self.ident())
            self.skip_commas()
        return out

    def maplet_list(self) -> list[tuple[str, str]]:
        # An id opens a maplet only when "|->" follows; otherwise it is the
        # head of the next block (e.g. another carrier or action entry).
        out = []
        while self.at("id"):
            after = self.tokens[self.pos + 1] if self.pos + 1 < len(self.tokens) else None
            if after is None or after.kind != "|->":
                break
            lhs = self.ident()
            self.take("|->")
            rhs = self.ident("the image")
            out.append((lhs, rhs))
            self.skip_commas()
        return out


def parse(text: str, filename: str = "<string>") -> Document:
    """Parse a `.bcat` document; errors carry a span inside the input."""
    return _Parser(_tokenize(text, filename), filename, text).document()


# Printing.


def _fmt_maplets(maplets) -> str:
    return ", ".join(f"{a} |-> {b}" for a, b in maplets)


def format_declaration(decl: Declaration) -> str:
    if isinstance(decl, CategoryDecl):
        lines = [f"category {decl.name} {{"]
        lines.append("  objects: " + ", ".join(decl.objects))
        if decl.arrows:
            lines.append("  arrows:")
            lines.extend(f"    {n}: {d} -> {c}" for n, d, c in decl.arrows)
        if decl.compose:
            lines.append("  compose:")
            lines.extend(f"    {g} . {f} = {h}" for g, f, h in decl.compose)
        lines.append("}")
        return "\n".join(lines)
    if isinstance(decl, FunctorDecl):
        lines = [f"functor {decl.name} : {decl.source} -> {decl.target} {{"]
        lines.append("  objects: " + _fmt_maplets(decl.objects))
        if decl.arrows:
            lines.append("  arrows:")
            lines.extend(f"    {a} |-> {b}" for a, b in decl.arrows)
        lines.append("}")
        return "\n".join(lines)
    if isinstance(decl, ConcreteDecl):
        lines = [f"concrete {decl.name} over {decl.over} {{"]
        for obj, elems in decl.carriers:
            lines.append(f"  {obj}: {{ " + ", ".join(elems) + " }"
                         if elems else f"  {obj}: {{ }}")
        for mor, maplets in decl.actions:
            lines.append(f"  {mor}: " + _fmt_maplets(maplets))
        lines.append("}")
        return "\n".join(lines)
    if isinstance(decl, ActionDecl):
        lines = [f"action {decl.name} {{"]
        lines.append(f"  group: {decl.group}")
        lines.append("  set: { " + ", ".join(decl.elements) + " }")
        for mor, maplets in decl.phi:
            lines.append(f"  phi: {mor}: " + _fmt_maplets(maplets))
        lines.append("}")
        return "\n".join(lines)
    if isinstance(decl, IndexedDecl):
        lines = [f"indexed {decl.name} over {decl.base} {{"]
        lines.extend(f"  fibre {o} = {c}" for o, c in decl.fibres)
        lines.extend(f"  pull {m} = {f}" for m, f in decl.pulls)
        lines.append("}")
        return "\n".join(lines)
    raise TypeError(f"not a declaration: {decl!r}")


def format_document(doc: Document) -> str:
    """Canonical text; layout is normalised, order is preserved."""
    return "\n\n".join(format_declaration(d) for d in doc.declarations) + "\n"


_NOWHERE = SourceSpan("<built>", 1, 1, 1)


def decl_of_category(cat: FinCat, name: str | None = None) -> CategoryDecl:
    """Presentation as a declaration: identities and unit-forced composites
    are dropped, since elaboration synthesises them back."""
    arrows = tuple(
        (a.name, a.dom, a.cod) for a in cat.arrows if not cat.is_identity(a.name)
    )
    order = {a.name: i for i, a in enumerate(cat.arrows)}
    entries = sorted(
        (
            (g, f, h)
            for (g, f), h in cat.compose.items()
            if not cat.is_identity(g) and not cat.is_identity(f)
        ),
        key=lambda e: (order[e[0]], order[e[1]]),
    )
    for obj, ident in cat.identity.items():
        if ident != identity_id(obj):
            raise ValueError(
                f"cannot print category {cat.name!r}: identity of {obj!r} is named {ident!r}"
            )
    return CategoryDecl(name or cat.name, cat.objects, arrows, tuple(entries), _NOWHERE)


# Elaboration: declarations to validated values.


@dataclass
class Env:
    categories: dict[str, FinCat] = field(default_factory=dict)
    functors: dict[str, FinFunctor] = field(default_factory=dict)
    concretes: dict[str, ConcreteStructure] = field(default_factory=dict)
    actions: dict[str, GroupAction] = field(default_factory=dict)
    families: dict[str, IndexedFamily] = field(default_factory=dict)


def elaborate_declaration(decl: Declaration, env: Env, allow_unfaithful: bool = False):
    """Validate one declaration against the environment built so far."""
    if isinstance(decl, CategoryDecl):
        value = validate_category(
            decl.name,
            decl.objects,
            decl.arrows,
            {(g, f): h for g, f, h in decl.compose},
        )
        env.categories[decl.name] = value
        return value
    if isinstance(decl, FunctorDecl):
        value = validate_functor(
            decl.name,
            env.categories[decl.source],
            env.categories[decl.target],
            dict(decl.objects),
            dict(decl.arrows),
        )
        env.functors[decl.name] = value
        return value
    if isinstance(decl, ConcreteDecl):
        over = env.categories[decl.over]
        carrier = {
            obj: FinSetObj(f"{decl.name}_{obj}", elems) for obj, elems in decl.carriers
        }
        action = {}
        for mor, maplets in decl.actions:
            endpoints = (over.dom(mor), over.cod(mor))
            for obj in endpoints:
                if obj not in carrier:
                    raise UnknownObject(obj)
            action[mor] = FinFn(carrier[endpoints[0]], carrier[endpoints[1]], dict(maplets))
        value = validate_concrete(over, carrier, action, allow_unfaithful)
        env.concretes[decl.name] = value
        return value
    if isinstance(decl, ActionDecl):
        group = env.categories[decl.group]
        carrier = FinSetObj(f"{decl.name}_set", decl.elements)
        phi = {
            mor: FinFn(carrier, carrier, dict(maplets)) for mor, maplets in decl.phi
        }
        value = validate_group_action(group, carrier, phi)
        env.actions[decl.name] = value
        return value
    if isinstance(decl, IndexedDecl):
        base = env.categories[decl.base]
        fibres = {obj: env.categories[cat] for obj, cat in decl.fibres}
        pulls = {mor: env.functors[fun] for mor, fun in decl.pulls}
        value = validate_family(base, fibres, pulls)
        env.families[decl.name] = value
        return value
    raise TypeError(f"not a declaration: {decl!r}")


def elaborate(doc: Document, allow_unfaithful: bool = False) -> Env:
    env = Env()
    for decl in doc.declarations:
        elaborate_declaration(decl, env, allow_unfaithful)
    return env
