"""Exel semigroupoids stored as partial Cayley tables, and their graphings.

Elements are dense integer indices ``0..n-1`` with a parallel name table.
A product table entry is ``None`` when the pair is not composable.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    AxiomViolation,
    CapExceeded,
    EqualityViolation,
    GraphViolation,
    HasSourceOrSink,
    InvalidChoice,
    MalformedTable,
    NotCategorical,
    NotExelSemigroupoid,
    NotHomomorphism,
    UnresolvedName,
)

Table = tuple[tuple["int | None", ...], ...]


@dataclass(frozen=True)
class PartialMagma:
    """A finite set with a partially defined binary operation."""

    names: tuple[str, ...]
    table: Table

    def __post_init__(self):
        n = len(self.names)
        if len(set(self.names)) != n:
            raise MalformedTable("element names must be distinct")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise MalformedTable(f"table must be {n}x{n}")
        for row in self.table:
            for v in row:
                if v is not None and not (0 <= v < n):
                    raise MalformedTable(f"product index {v} out of range")

    @property
    def n(self) -> int:
        return len(self.names)

    def mul(self, a: int, b: int) -> int | None:
        return self.table[a][b]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnresolvedName(name) from None

    @cached_property
    def _index(self) -> dict[str, int]:
        return {nm: i for i, nm in enumerate(self.names)}

    @cached_property
    def defined_pairs(self) -> tuple[tuple[int, int, int], ...]:
        """All ``(a, b, ab)`` with ab defined, in row-major order."""
        return tuple(
            (a, b, c)
            for a, row in enumerate(self.table)
            for b, c in enumerate(row)
            if c is not None
        )

    @cached_property
    def left_sets(self) -> tuple[frozenset[int], ...]:
        # Λ^a: everything that can stand to the right of a
        return tuple(
            frozenset(b for b, c in enumerate(row) if c is not None) for row in self.table
        )

    @cached_property
    def right_sets(self) -> tuple[frozenset[int], ...]:
        # Λ_a: everything that can stand to the left of a
        cols = [set() for _ in range(self.n)]
        for a, b, _ in self.defined_pairs:
            cols[b].add(a)
        return tuple(frozenset(c) for c in cols)

    def mul_names(self, a: str, b: str) -> str | None:
        c = self.mul(self.index(a), self.index(b))
        return None if c is None else self.names[c]


@dataclass(frozen=True)
class Semigroupoid(PartialMagma):
    """A partial magma that has passed :func:`validate_exel`."""


@dataclass(frozen=True)
class GraphedSemigroupoid(Semigroupoid):
    """A semigroupoid with source and range maps into a vertex set.

    Satisfies: ab defined iff s(a) = r(b); s(ab) = s(b); r(ab) = r(a);
    and every vertex is a source or range of something.
    """

    vertex_names: tuple[str, ...]
    src: tuple[int, ...]
    rng: tuple[int, ...]

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_names)

    def s(self, a: int) -> int:
        return self.src[a]

    def r(self, a: int) -> int:
        return self.rng[a]

    def as_semigroupoid(self) -> Semigroupoid:
        return Semigroupoid(self.names, self.table)


def partial_magma(
    names: Sequence[str],
    products: Mapping[tuple[str, str], str] | Iterable[tuple[str, str, str]],
) -> PartialMagma:
    """Build a table from named products ``a*b=c``."""
    names = tuple(names)
    idx = {nm: i for i, nm in enumerate(names)}
    rows = [[None] * len(names) for _ in names]
    items = products.items() if isinstance(products, Mapping) else (((a, b), c) for a, b, c in products)
    for (a, b), c in items:
        for nm in (a, b, c):
            if nm not in idx:
                raise UnresolvedName(nm, "products")
        rows[idx[a]][idx[b]] = idx[c]
    return PartialMagma(names, tuple(tuple(r) for r in rows))


def semigroupoid(names, products) -> Semigroupoid:
    """Shorthand for ``validate_exel(partial_magma(names, products))``."""
    return validate_exel(partial_magma(names, products))


def _triple_status(m: PartialMagma, f: int, g: int, h: int):
    t = m.table
    fg, gh = t[f][g], t[g][h]
    c1 = fg is not None and gh is not None
    c2 = fg is not None and t[fg][h] is not None
    c3 = gh is not None and t[f][gh] is not None
    return c1, c2, c3, fg, gh


def exel_violations(m: PartialMagma, limit: int | None = None) -> list:
    """Every triple breaking the semigroupoid axioms, in lexicographic order."""
    out: list = []
    t = m.table
    nm = m.names
    for f in range(m.n):
        for g in range(m.n):
            for h in range(m.n):
                c1, c2, c3, fg, gh = _triple_status(m, f, g, h)
                if c1 == c2 == c3:
                    if c1 and t[fg][h] != t[f][gh]:
                        out.append(
                            EqualityViolation((nm[f], nm[g], nm[h]), nm[t[fg][h]], nm[t[f][gh]])
                        )
                    else:
                        continue
                else:
                    flags = dict(zip(("i", "ii", "iii"), (c1, c2, c3)))
                    out.append(
                        AxiomViolation(
                            (nm[f], nm[g], nm[h]),
                            tuple(k for k, v in flags.items() if v),
                            tuple(k for k, v in flags.items() if not v),
                        )
                    )
                if limit is not None and len(out) >= limit:
                    return out
    return out


def validate_exel(m: PartialMagma, max_violations: int = 32) -> Semigroupoid:
    """Return ``m`` as a :class:`Semigroupoid` or raise with the violating triples."""
    bad = exel_violations(m, limit=max_violations)
    if bad:
        raise NotExelSemigroupoid(bad)
    if isinstance(m, Semigroupoid):
        return m
    return Semigroupoid(m.names, m.table)


def left_set(S: PartialMagma, a: int) -> frozenset[int]:
    return S.left_sets[a]


def right_set(S: PartialMagma, a: int) -> frozenset[int]:
    return S.right_sets[a]


def categorical_witness(S: PartialMagma):
    """Two elements whose right sets overlap without being equal.

    Returns ``(a, b, common, a_only, b_only)`` or ``None``. Right sets are
    used because their disjoint-or-equal property is equivalent to that of
    left sets and makes the usual examples easier to read.
    """
    seen: list[tuple[int, frozenset[int]]] = []
    for a, ra in enumerate(S.right_sets):
        for b, rb in seen:
            if ra != rb and ra & rb:
                return b, a, min(ra & rb), tuple(sorted(rb - ra)), tuple(sorted(ra - rb))
        if all(ra != rb for _, rb in seen):
            seen.append((a, ra))
    return None


def is_categorical(S: PartialMagma) -> bool:
    return categorical_witness(S) is None


def require_categorical(S: PartialMagma) -> None:
    w = categorical_witness(S)
    if w is not None:
        a, b, c, only_a, only_b = w
        nm = S.names
        raise NotCategorical(
            nm[a], nm[b], nm[c], tuple(nm[x] for x in only_a), tuple(nm[x] for x in only_b)
        )


# ---------------------------------------------------------------- graphings


@dataclass(frozen=True)
class GraphingChoice:
    """Partitions of the free source symbols v0(a) and free range symbols v1(a).

    Each block is a frozenset of element indices ``a`` standing for v0(a)
    (elements with empty left set) or v1(a) (elements with empty right set).
    """

    r0: tuple[frozenset[int], ...]
    r1: tuple[frozenset[int], ...]


class _UnionFind:
    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True

    def blocks(self) -> tuple[frozenset[int], ...]:
        groups: dict[int, set[int]] = {}
        for x in self.parent:
            groups.setdefault(self.find(x), set()).add(x)
        return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


def free_symbols(S: PartialMagma) -> tuple[list[int], list[int]]:
    """Elements carrying a free source symbol and a free range symbol."""
    v0 = [a for a in range(S.n) if not S.left_sets[a]]
    v1 = [a for a in range(S.n) if not S.right_sets[a]]
    return v0, v1


def forced_pairs(S: PartialMagma) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Identifications any admissible choice must contain."""
    p0, p1 = [], []
    for a, b, ab in S.defined_pairs:
        if not S.left_sets[b]:
            p0.append((b, ab))
        if not S.right_sets[a]:
            p1.append((a, ab))
    return p0, p1


def finest_choice(S: PartialMagma) -> GraphingChoice:
    v0, v1 = free_symbols(S)
    p0, p1 = forced_pairs(S)
    u0, u1 = _UnionFind(v0), _UnionFind(v1)
    for x, y in p0:
        u0.union(x, y)
    for x, y in p1:
        u1.union(x, y)
    return GraphingChoice(u0.blocks(), u1.blocks())


def is_admissible(S: PartialMagma, choice: GraphingChoice) -> bool:
    v0, v1 = free_symbols(S)
    if sorted(x for b in choice.r0 for x in b) != v0:
        return False
    if sorted(x for b in choice.r1 for x in b) != v1:
        return False
    blk0 = {x: i for i, b in enumerate(choice.r0) for x in b}
    blk1 = {x: i for i, b in enumerate(choice.r1) for x in b}
    p0, p1 = forced_pairs(S)
    return all(blk0[x] == blk0[y] for x, y in p0) and all(blk1[x] == blk1[y] for x, y in p1)


def graph(S: PartialMagma, choice: GraphingChoice | None = None) -> GraphedSemigroupoid:
    """Canonical graphing of a categorical semigroupoid.

    Vertices are, in order: the distinct nonempty right sets (ordered by the
    least element realising them), then the blocks of ``choice.r0``, then the
    blocks of ``choice.r1``. The default choice is the finest admissible one.
    """
    S = validate_exel(S) if not isinstance(S, Semigroupoid) else S
    require_categorical(S)
    if choice is None:
        choice = finest_choice(S)
    elif not is_admissible(S, choice):
        raise InvalidChoice("choice does not cover the free symbols or misses a forced identification")
    nm = S.names
    vid: dict = {}
    vnames: list[str] = []
    for a in range(S.n):
        ra = S.right_sets[a]
        if ra and ("L", ra) not in vid:
            vid[("L", ra)] = len(vnames)
            vnames.append("{" + ",".join(nm[x] for x in sorted(ra)) + "}")
    for tag, blocks in (("v0", choice.r0), ("v1", choice.r1)):
        for b in blocks:
            for x in b:
                vid[(tag, x)] = len(vnames)
            vnames.append(f"{tag}({nm[min(b)]})")
    src, rng = [], []
    for a in range(S.n):
        la = S.left_sets[a]
        if la:
            src.append(vid[("L", S.right_sets[min(la)])])
        else:
            src.append(vid[("v0", a)])
        ra = S.right_sets[a]
        rng.append(vid[("L", ra)] if ra else vid[("v1", a)])
    return validate_graphed(S, vnames, src, rng)


def _restricted_growth(k: int) -> Iterator[list[int]]:
    if k == 0:
        yield []
        return
    word = [0] * k

    def rec(i: int, top: int):
        if i == k:
            yield list(word)
            return
        for v in range(top + 2):
            word[i] = v
            yield from rec(i + 1, max(top, v))

    word[0] = 0
    yield from rec(1, 0)


def _blocks_from_word(items: list[int], word: list[int]) -> tuple[frozenset[int], ...]:
    groups: dict[int, set[int]] = {}
    for x, w in zip(items, word):
        groups.setdefault(w, set()).add(x)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


def enumerate_graphings(S: PartialMagma, cap: int = 8) -> list[GraphingChoice]:
    """All admissible choices, via restricted-growth strings over the free symbols."""
    require_categorical(S)
    v0, v1 = free_symbols(S)
    if len(v0) + len(v1) > cap:
        raise CapExceeded(f"{len(v0) + len(v1)} free symbols exceeds cap {cap}")
    out = []
    for w0 in _restricted_growth(len(v0)):
        for w1 in _restricted_growth(len(v1)):
            ch = GraphingChoice(_blocks_from_word(v0, w0), _blocks_from_word(v1, w1))
            if is_admissible(S, ch):
                out.append(ch)
    return out


def graph_violations(S: PartialMagma, src: Sequence[int], rng: Sequence[int], n_vertices: int) -> list[str]:
    nm = S.names
    bad = []
    for a in range(S.n):
        for b in range(S.n):
            ab = S.table[a][b]
            if (ab is not None) != (src[a] == rng[b]):
                bad.append(f"{nm[a]}{nm[b]} definedness disagrees with s({nm[a]}) = r({nm[b]})")
            elif ab is not None:
                if src[ab] != src[b]:
                    bad.append(f"s({nm[a]}{nm[b]}) != s({nm[b]})")
                if rng[ab] != rng[a]:
                    bad.append(f"r({nm[a]}{nm[b]}) != r({nm[a]})")
    used = set(src) | set(rng)
    for v in range(n_vertices):
        if v not in used:
            bad.append(f"vertex {v} is neither a source nor a range")
    return bad


def validate_graphed(S: PartialMagma, vertex_names, src, rng) -> GraphedSemigroupoid:
    bad = graph_violations(S, src, rng, len(vertex_names))
    if bad:
        raise GraphViolation(bad)
    return GraphedSemigroupoid(S.names, S.table, tuple(vertex_names), tuple(src), tuple(rng))


def sources(G: GraphedSemigroupoid) -> list[int]:
    """Vertices with no incoming arrow."""
    hit = set(G.rng)
    return [v for v in range(G.n_vertices) if v not in hit]


def sinks(G: GraphedSemigroupoid) -> list[int]:
    """Vertices with no outgoing arrow."""
    hit = set(G.src)
    return [v for v in range(G.n_vertices) if v not in hit]


# ---------------------------------------------------------------- maps


@dataclass(frozen=True)
class Homomorphism:
    source: PartialMagma
    target: PartialMagma
    mapping: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def violations(self, strict: bool = False) -> list[str]:
        """Product-preservation failures; with ``strict`` also definedness reflection."""
        S, T, f = self.source, self.target, self.mapping
        bad = []
        for a in range(S.n):
            for b in range(S.n):
                ab = S.table[a][b]
                fab = T.table[f[a]][f[b]]
                if ab is not None:
                    if fab is None:
                        bad.append(f"{S.names[a]}{S.names[b]} defined but image product is not")
                    elif fab != f[ab]:
                        bad.append(f"image of {S.names[a]}{S.names[b]} is {T.names[f[ab]]}, product of images is {T.names[fab]}")
                elif strict and fab is not None:
                    bad.append(f"{S.names[a]}{S.names[b]} undefined but image product is defined")
        return bad

    def is_homomorphism(self) -> bool:
        return not self.violations()

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def is_bijective(self) -> bool:
        return self.is_injective() and len(self.mapping) == self.target.n

    def is_isomorphism(self) -> bool:
        return self.is_bijective() and not self.violations(strict=True)

    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)


def homomorphism(source, target, mapping: Mapping[str, str] | Sequence[int]) -> Homomorphism:
    if isinstance(mapping, Mapping):
        m = tuple(target.index(mapping[x]) if x in mapping else _missing(x) for x in source.names)
    else:
        m = tuple(mapping)
    h = Homomorphism(source, target, m)
    bad = h.violations()
    if bad:
        raise NotHomomorphism(bad)
    return h


def _missing(x):
    raise UnresolvedName(x, "map")


def induce_vertex_map(phi: Homomorphism) -> tuple[int, ...]:
    """The vertex map forced by a homomorphism out of a source/sink-free graph."""
    G, H = phi.source, phi.target
    srcs, snks = sources(G), sinks(G)
    if srcs:
        raise HasSourceOrSink(G.vertex_names[srcs[0]], "source")
    if snks:
        raise HasSourceOrSink(G.vertex_names[snks[0]], "sink")
    vmap: dict[int, int] = {}
    for a in range(G.n):
        for v, w in ((G.src[a], H.src[phi(a)]), (G.rng[a], H.rng[phi(a)])):
            if vmap.setdefault(v, w) != w:
                raise NotHomomorphism([f"vertex {G.vertex_names[v]} has two images"])
    return tuple(vmap[v] for v in range(G.n_vertices))


# ---------------------------------------------------------------- subsets


def subset_product(S: PartialMagma, A: Iterable[int], B: Iterable[int]) -> frozenset[int]:
    B = list(B)
    return frozenset(c for a in A for b in B if (c := S.table[a][b]) is not None)


def is_left_ideal(S: PartialMagma, I: Iterable[int]) -> bool:
    I = frozenset(I)
    return subset_product(S, range(S.n), I) <= I


def is_right_ideal(S: PartialMagma, I: Iterable[int]) -> bool:
    I = frozenset(I)
    return subset_product(S, I, range(S.n)) <= I


def is_ideal(S: PartialMagma, I: Iterable[int]) -> bool:
    return is_left_ideal(S, I) and is_right_ideal(S, I)


def is_closed(S: PartialMagma, A: Iterable[int]) -> bool:
    A = frozenset(A)
    return subset_product(S, A, A) <= A


def restrict(S: PartialMagma, subset: Iterable[int]) -> tuple[Semigroupoid, tuple[int, ...]]:
    """Sub-semigroupoid on a product-closed subset, with the inclusion indices."""
    keep = tuple(sorted(set(subset)))
    pos = {x: i for i, x in enumerate(keep)}
    rows = []
    for a in keep:
        row = []
        for b in keep:
            c = S.table[a][b]
            if c is not None and c not in pos:
                raise MalformedTable(f"{S.names[a]}{S.names[b]} leaves the subset")
            row.append(None if c is None else pos[c])
        rows.append(tuple(row))
    return Semigroupoid(tuple(S.names[x] for x in keep), tuple(rows)), keep


def is_idempotent_semigroupoid(S: PartialMagma) -> bool:
    """Every element is a product of two elements."""
    return len({c for _, _, c in S.defined_pairs}) == S.n


def is_left_s_unital(S: PartialMagma) -> bool:
    return all(any(S.table[u][t] == t for u in S.right_sets[t]) for t in range(S.n))


def is_nondegenerate(S: PartialMagma) -> bool:
    """Distinct elements induce distinct pairs of left and right translations."""
    seen = set()
    for x in range(S.n):
        left = tuple(S.table[x])
        right = tuple(S.table[a][x] for a in range(S.n))
        if (left, right) in seen:
            return False
        seen.add((left, right))
    return True


def structural_predicates(S: PartialMagma) -> dict:
    out = {
        "categorical": is_categorical(S),
        "idempotent": is_idempotent_semigroupoid(S),
        "left_s_unital": is_left_s_unital(S),
        "nondegenerate": is_nondegenerate(S),
    }
    if isinstance(S, GraphedSemigroupoid):
        out["sources"] = [S.vertex_names[v] for v in sources(S)]
        out["sinks"] = [S.vertex_names[v] for v in sinks(S)]
    return out
