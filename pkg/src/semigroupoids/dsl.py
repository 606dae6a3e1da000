"""Reader and canonical printer for ``.sgpd`` documents.

A document is a list of named blocks::

    semigroupoid S { elements: a b c; products: a*b=c, b*b=b; }
    graph G on S { vertices: u v; s: a->u b->v; r: a->v b->v; }
    map f : S -> S { a->a, b->b }
    action A : S on X { kind: partial; anchor: x->u; theta a { x->x } }
    congruence R on S { a~b }
    order P on S { a<=b }

``#`` starts a comment. Every name must be declared before it is used.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union

from .errors import DSLSyntaxError, DuplicateDefinition, UnresolvedName

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<sym>->|<=|[{}:;,*=~])|(?P<ident>[A-Za-z0-9_'.]+)"
)
KEYWORDS = ("semigroupoid", "graph", "map", "action", "congruence", "order")


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "sym" or "eof"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    line, start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DSLSyntaxError(line, pos - start + 1, "a token", repr(text[pos]))
        kind = m.lastgroup
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind in ("sym", "ident"):
            out.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


# ---------------------------------------------------------------- declarations

Pair = tuple[str, str]


@dataclass(frozen=True)
class SemigroupoidDecl:
    name: str
    elements: tuple[str, ...]
    products: tuple[tuple[str, str, str], ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class GraphDecl:
    name: str
    on: str
    vertices: tuple[str, ...]
    s: tuple[Pair, ...]
    r: tuple[Pair, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class MapDecl:
    name: str
    source: str
    target: str
    pairs: tuple[Pair, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ActionDecl:
    name: str
    actor: str
    space: str
    kind: str | None
    anchor: tuple[Pair, ...]
    theta: tuple[tuple[str, tuple[Pair, ...]], ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class CongruenceDecl:
    name: str
    on: str
    pairs: tuple[Pair, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class OrderDecl:
    name: str
    on: str
    pairs: tuple[Pair, ...]
    line: int = field(default=0, compare=False)


Decl = Union[SemigroupoidDecl, GraphDecl, MapDecl, ActionDecl, CongruenceDecl, OrderDecl]


@dataclass(frozen=True)
class Document:
    decls: tuple[Decl, ...] = ()

    def __getitem__(self, name: str) -> Decl:
        for d in self.decls:
            if d.name == name:
                return d
        raise UnresolvedName(name, "document")

    def __contains__(self, name: str) -> bool:
        return any(d.name == name for d in self.decls)

    def of_type(self, cls) -> list:
        return [d for d in self.decls if isinstance(d, cls)]

    def elements(self, name: str) -> tuple[str, ...]:
        """Element names of a semigroupoid or of the table behind a graph."""
        d = self[name]
        if isinstance(d, GraphDecl):
            d = self[d.on]
        if not isinstance(d, SemigroupoidDecl):
            raise UnresolvedName(name, "semigroupoid or graph")
        return d.elements


# ---------------------------------------------------------------- parser


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected: str):
        t = self.tok
        raise DSLSyntaxError(t.line, t.col, expected, t.text or "end of input")

    def at(self, text: str) -> bool:
        return self.tok.kind == "sym" and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(repr(text))
        self.i += 1
        return self.toks[self.i - 1]

    def ident(self, what: str = "a name") -> str:
        if self.tok.kind != "ident":
            self.fail(what)
        self.i += 1
        return self.toks[self.i - 1].text

    def keyword(self, word: str):
        if self.tok.kind != "ident" or self.tok.text != word:
            self.fail(repr(word))
        self.i += 1

    def names_until(self, stop: str) -> list[str]:
        out = []
        while self.tok.kind == "ident":
            out.append(self.ident())
        self.expect(stop)
        return out

    def arrows(self, sep: str | None, stop: tuple[str, ...], op: str = "->") -> list[Pair]:
        """``x op y`` items, optionally separated by ``sep``, up to one of ``stop``."""
        out = []
        while not any(self.at(s) for s in stop):
            x = self.ident()
            self.expect(op)
            out.append((x, self.ident()))
            if sep is not None and not self.at(sep):
                break
            if sep is not None:
                self.expect(sep)
        return out

    def field_label(self, label: str):
        self.keyword(label)
        self.expect(":")

    # blocks

    def document(self) -> list[tuple[Decl, Token]]:
        out = []
        while self.tok.kind != "eof":
            t = self.tok
            if t.kind != "ident" or t.text not in KEYWORDS:
                self.fail("a block keyword")
            self.i += 1
            out.append((getattr(self, "block_" + t.text)(t.line), t))
        return out

    def block_semigroupoid(self, line: int) -> SemigroupoidDecl:
        name = self.ident()
        self.expect("{")
        self.field_label("elements")
        elements = self.names_until(";")
        self.field_label("products")
        products = []
        while not self.at(";"):
            a = self.ident()
            self.expect("*")
            b = self.ident()
            self.expect("=")
            products.append((a, b, self.ident()))
            if not self.at(","):
                break
            self.expect(",")
        self.expect(";")
        self.expect("}")
        return SemigroupoidDecl(name, tuple(elements), tuple(products), line)

    def block_graph(self, line: int) -> GraphDecl:
        name = self.ident()
        self.keyword("on")
        on = self.ident()
        self.expect("{")
        self.field_label("vertices")
        vertices = self.names_until(";")
        self.field_label("s")
        s = self.arrows(None, (";",))
        self.expect(";")
        self.field_label("r")
        r = self.arrows(None, (";",))
        self.expect(";")
        self.expect("}")
        return GraphDecl(name, on, tuple(vertices), tuple(s), tuple(r), line)

    def block_map(self, line: int) -> MapDecl:
        name = self.ident()
        self.expect(":")
        src = self.ident()
        self.expect("->")
        dst = self.ident()
        self.expect("{")
        pairs = self.arrows(",", ("}",))
        self.expect("}")
        return MapDecl(name, src, dst, tuple(pairs), line)

    def block_action(self, line: int) -> ActionDecl:
        name = self.ident()
        self.expect(":")
        actor = self.ident()
        self.keyword("on")
        space = self.ident()
        self.expect("{")
        kind = None
        if self.tok.kind == "ident" and self.tok.text == "kind":
            self.field_label("kind")
            kind = self.ident("wedge, partial or global")
            if kind not in ("wedge", "partial", "global"):
                self.i -= 1
                self.fail("wedge, partial or global")
            self.expect(";")
        anchor: list[Pair] = []
        if self.tok.kind == "ident" and self.tok.text == "anchor":
            self.field_label("anchor")
            anchor = self.arrows(None, (";",))
            self.expect(";")
        theta = []
        while not self.at("}"):
            self.keyword("theta")
            a = self.ident()
            self.expect("{")
            theta.append((a, tuple(self.arrows(",", ("}",)))))
            self.expect("}")
        self.expect("}")
        return ActionDecl(name, actor, space, kind, tuple(anchor), tuple(theta), line)

    def _relation(self, cls, op: str, line: int):
        name = self.ident()
        self.keyword("on")
        on = self.ident()
        self.expect("{")
        pairs = self.arrows(",", ("}",), op)
        self.expect("}")
        return cls(name, on, tuple(pairs), line)

    def block_congruence(self, line: int) -> CongruenceDecl:
        return self._relation(CongruenceDecl, "~", line)

    def block_order(self, line: int) -> OrderDecl:
        return self._relation(OrderDecl, "<=", line)


def _check_names(names, known, where: str):
    for nm in names:
        if nm not in known:
            raise UnresolvedName(nm, where)


def _resolve(decls: list[tuple[Decl, Token]]) -> Document:
    seen: dict[str, Decl] = {}

    def lookup(name: str, kinds, where: str) -> Decl:
        d = seen.get(name)
        if d is None or not isinstance(d, kinds):
            raise UnresolvedName(name, where)
        return d

    def elements(d: Decl) -> tuple[str, ...]:
        return seen[d.on].elements if isinstance(d, GraphDecl) else d.elements

    tables = (SemigroupoidDecl, GraphDecl)
    for d, tok in decls:
        if d.name in seen:
            raise DuplicateDefinition(d.name)
        where = f"{type(d).__name__[:-4].lower()} {d.name} (line {tok.line})"
        if isinstance(d, SemigroupoidDecl):
            if len(set(d.elements)) != len(d.elements):
                dup = next(x for x in d.elements if d.elements.count(x) > 1)
                raise DuplicateDefinition(dup)
            keys = set()
            for a, b, c in d.products:
                _check_names((a, b, c), d.elements, where)
                if (a, b) in keys:
                    raise DuplicateDefinition(f"{a}*{b}")
                keys.add((a, b))
        elif isinstance(d, GraphDecl):
            els = lookup(d.on, SemigroupoidDecl, where).elements
            for a, v in d.s + d.r:
                _check_names((a,), els, where)
                _check_names((v,), d.vertices, where)
        elif isinstance(d, MapDecl):
            src = elements(lookup(d.source, tables, where))
            dst = elements(lookup(d.target, tables, where))
            for a, x in d.pairs:
                _check_names((a,), src, where)
                _check_names((x,), dst, where)
        elif isinstance(d, ActionDecl):
            actor = lookup(d.actor, tables, where)
            space = elements(lookup(d.space, tables, where))
            targets = set(elements(actor))
            if isinstance(actor, GraphDecl):
                targets |= set(actor.vertices)
            for x, u in d.anchor:
                _check_names((x,), space, where)
                _check_names((u,), targets, where)
            for a, pairs in d.theta:
                _check_names((a,), elements(actor), where)
                for x, y in pairs:
                    _check_names((x, y), space, where)
        else:
            els = elements(lookup(d.on, tables, where))
            for a, b in d.pairs:
                _check_names((a, b), els, where)
        seen[d.name] = d
    return Document(tuple(d for d, _ in decls))


def parse(text: str) -> Document:
    return _resolve(_Parser(text).document())


def load(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# ---------------------------------------------------------------- printer


def _order_pairs(pairs, left: tuple[str, ...], right: tuple[str, ...] | None = None):
    li = {x: i for i, x in enumerate(left)}
    ri = {x: i for i, x in enumerate(right or left)}
    return sorted(pairs, key=lambda p: (li.get(p[0], len(li)), ri.get(p[1], len(ri))))


def _lines(doc: Document, d: Decl) -> Iterator[str]:
    if isinstance(d, SemigroupoidDecl):
        idx = {x: i for i, x in enumerate(d.elements)}
        prods = sorted(d.products, key=lambda p: (idx[p[0]], idx[p[1]]))
        yield f"semigroupoid {d.name} {{"
        yield "  elements: " + " ".join(d.elements) + ";"
        yield "  products: " + ", ".join(f"{a}*{b}={c}" for a, b, c in prods) + ";"
        yield "}"
    elif isinstance(d, GraphDecl):
        els = doc.elements(d.on)
        yield f"graph {d.name} on {d.on} {{"
        yield "  vertices: " + " ".join(d.vertices) + ";"
        for label, pairs in (("s", d.s), ("r", d.r)):
            body = " ".join(f"{a}->{v}" for a, v in _order_pairs(pairs, els, d.vertices))
            yield f"  {label}: {body};"
        yield "}"
    elif isinstance(d, MapDecl):
        pairs = _order_pairs(d.pairs, doc.elements(d.source), doc.elements(d.target))
        yield f"map {d.name} : {d.source} -> {d.target} {{ " + ", ".join(f"{a}->{x}" for a, x in pairs) + " }"
    elif isinstance(d, ActionDecl):
        space = doc.elements(d.space)
        actor = doc.elements(d.actor)
        yield f"action {d.name} : {d.actor} on {d.space} {{"
        if d.kind:
            yield f"  kind: {d.kind};"
        if d.anchor:
            yield "  anchor: " + " ".join(f"{x}->{u}" for x, u in _order_pairs(d.anchor, space, None)) + ";"
        ai = {a: i for i, a in enumerate(actor)}
        for a, pairs in sorted(d.theta, key=lambda t: ai[t[0]]):
            body = ", ".join(f"{x}->{y}" for x, y in _order_pairs(pairs, space))
            yield f"  theta {a} {{ {body} }}"
        yield "}"
    else:
        op = "~" if isinstance(d, CongruenceDecl) else "<="
        kw = "congruence" if isinstance(d, CongruenceDecl) else "order"
        pairs = _order_pairs(d.pairs, doc.elements(d.on))
        yield f"{kw} {d.name} on {d.on} {{ " + ", ".join(f"{a}{op}{b}" for a, b in pairs) + " }"


def format_document(doc: Document) -> str:
    """Blocks in declaration order; entries ordered by the declaration
    order of the names they start with."""
    blocks = ["\n".join(_lines(doc, d)) for d in doc.decls]
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def canonical(doc: Document) -> Document:
    return parse(format_document(doc))


# ---------------------------------------------------------------- from objects


def declare(S, name: str, graph_name: str | None = None) -> list[Decl]:
    """Blocks describing a table, plus its graphing when it has one."""
    prods = tuple((S.names[a], S.names[b], S.names[c]) for a, b, c in S.defined_pairs)
    out: list[Decl] = [SemigroupoidDecl(name, tuple(S.names), prods)]
    if graph_name is not None and hasattr(S, "src"):
        vn = S.vertex_names
        out.append(
            GraphDecl(
                graph_name,
                name,
                tuple(vn),
                tuple((S.names[a], vn[S.src[a]]) for a in range(S.n)),
                tuple((S.names[a], vn[S.rng[a]]) for a in range(S.n)),
            )
        )
    return out
