"""Inverse semigroupoids: inverse detection, canonical graphing, natural order."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .core import (
    GraphedSemigroupoid,
    PartialMagma,
    Semigroupoid,
    _UnionFind,
    graph_violations,
    validate_exel,
)
from .errors import GraphViolation, NotRegular, NotUniqueInverse


@dataclass(frozen=True)
class InverseSemigroupoid(GraphedSemigroupoid):
    """A graphed semigroupoid in which every element has a unique inverse."""

    inv: tuple[int, ...]

    def star(self, a: int) -> int:
        return self.inv[a]

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        return tuple(e for e in range(self.n) if self.table[e][e] == e)

    def is_idempotent(self, a: int) -> bool:
        return self.table[a][a] == a

    def dom(self, a: int) -> int:
        """The idempotent a*a."""
        return self.table[self.inv[a]][a]

    def ran(self, a: int) -> int:
        """The idempotent aa*."""
        return self.table[a][self.inv[a]]

    @cached_property
    def leq_matrix(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(
            tuple(self.table[b][self.dom(a)] == a for b in range(self.n)) for a in range(self.n)
        )

    def leq(self, a: int, b: int) -> bool:
        """Natural order: a = b a* a."""
        return self.leq_matrix[a][b]

    @cached_property
    def zero(self) -> int | None:
        """The absorbing element, if the table is total and has one."""
        for z in range(self.n):
            if all(self.table[z][x] == z and self.table[x][z] == z for x in range(self.n)):
                return z
        return None


def inverse_candidates(S: PartialMagma, a: int) -> list[int]:
    t = S.table
    out = []
    for b in range(S.n):
        ab, ba = t[a][b], t[b][a]
        if ab is None or ba is None:
            continue
        if t[ab][a] == a and t[ba][b] == b:
            out.append(b)
    return out


def _find_inverses(S: PartialMagma) -> tuple[int, ...]:
    t = S.table
    inv = []
    for a in range(S.n):
        # cheap pre-pass: a regular element has some b with aba = a
        if not any(
            (ab := t[a][b]) is not None and t[ab][a] == a for b in S.left_sets[a]
        ):
            raise NotRegular(S.names[a])
        cands = inverse_candidates(S, a)
        if not cands:
            raise NotRegular(S.names[a])
        if len(cands) > 1:
            raise NotUniqueInverse(S.names[a], [S.names[b] for b in cands])
        inv.append(cands[0])
    return tuple(inv)


def detect_inverse(S: PartialMagma, max_violations: int = 32) -> InverseSemigroupoid:
    """Check unique inverses and attach the canonical graphing.

    Vertices are classes of idempotents under "ef is defined"; each class is
    named after its least idempotent. s(a) is the class of a*a and r(a) that
    of aa*.
    """
    S = validate_exel(S, max_violations)
    inv = _find_inverses(S)
    t = S.table
    E = [e for e in range(S.n) if t[e][e] == e]
    uf = _UnionFind(E)
    for e, f in product(E, E):
        if t[e][f] is not None:
            uf.union(e, f)
    blocks = uf.blocks()
    vid = {x: i for i, b in enumerate(blocks) for x in b}
    vnames = tuple(S.names[min(b)] for b in blocks)
    src = tuple(vid[t[inv[a]][a]] for a in range(S.n))
    rng = tuple(vid[t[a][inv[a]]] for a in range(S.n))
    return make_inverse(S, vnames, src, rng, inv)


def make_inverse(S: PartialMagma, vertex_names, src, rng, inv=None) -> InverseSemigroupoid:
    """Wrap a table with a given graph; inverses are detected when omitted."""
    S = validate_exel(S)
    if inv is None:
        inv = _find_inverses(S)
    bad = graph_violations(S, src, rng, len(vertex_names))
    if bad:
        raise GraphViolation(bad)
    return InverseSemigroupoid(S.names, S.table, tuple(vertex_names), tuple(src), tuple(rng), tuple(inv))


def canonical_order(S: InverseSemigroupoid, a: int, b: int) -> bool:
    return S.leq(a, b)


def idempotents_commute(S: InverseSemigroupoid):
    """Witness pair of non-commuting composable idempotents, or ``None``."""
    t = S.table
    for e, f in product(S.idempotents, S.idempotents):
        if t[e][f] is not None and t[e][f] != t[f][e]:
            return e, f
    return None


def order_axioms_check(S: InverseSemigroupoid) -> dict[str, object]:
    """Check the basic order facts; each entry is ``None`` or a witness.

    a: (ab)* = b*a*;  b: beb* idempotent;  c: the four descriptions of a <= b
    agree;  d: <= is a partial order;  e: <= is compatible with products.
    """
    t, inv, n = S.table, S.inv, S.n
    E = set(S.idempotents)
    nm = S.names
    report: dict[str, object] = {k: None for k in "abcde"}

    for a, b, ab in S.defined_pairs:
        if inv[ab] != t[inv[b]][inv[a]]:
            report["a"] = (nm[a], nm[b])
            break

    for b in range(n):
        for e in E:
            be = t[b][e]
            if be is None:
                continue
            beb = t[be][inv[b]]
            if beb not in E:
                report["b"] = (nm[b], nm[e])
                break
        if report["b"]:
            break

    for a, b in product(range(n), repeat=2):
        c1 = S.leq(a, b)
        c2 = any(t[b][e] == a for e in E)
        c3 = any(t[f][b] == a for f in E)
        c4 = S.leq(inv[a], inv[b])
        if not (c1 == c2 == c3 == c4):
            report["c"] = (nm[a], nm[b], (c1, c2, c3, c4))
            break

    for a in range(n):
        if not S.leq(a, a):
            report["d"] = ("reflexive", nm[a])
            break
    if report["d"] is None:
        for a, b in product(range(n), repeat=2):
            if a != b and S.leq(a, b) and S.leq(b, a):
                report["d"] = ("antisymmetric", nm[a], nm[b])
                break
    if report["d"] is None:
        for a, b, c in product(range(n), repeat=3):
            if S.leq(a, b) and S.leq(b, c) and not S.leq(a, c):
                report["d"] = ("transitive", nm[a], nm[b], nm[c])
                break

    below = [(a, b) for a, b in product(range(n), repeat=2) if S.leq(a, b)]
    for (a, b), (c, d) in product(below, below):
        ac, bd = t[a][c], t[b][d]
        if ac is not None and (bd is None or not S.leq(ac, bd)):
            report["e"] = (nm[a], nm[b], nm[c], nm[d])
            break
    return report


def classify(S: InverseSemigroupoid) -> str:
    """One of ``group``, ``groupoid``, ``inverse_semigroup`` or ``general``."""
    c = classification(S)
    if c["group"]:
        return "group"
    if c["groupoid"]:
        return "groupoid"
    if c["semigroup"]:
        return "inverse_semigroup"
    return "general"


def classification(S: InverseSemigroupoid) -> dict[str, bool]:
    t = S.table
    E = S.idempotents
    semigroup = all(t[e][f] is not None for e in E for f in E)
    groupoid = all(t[e][f] is None or e == f for e in E for f in E)
    return {"semigroup": semigroup, "groupoid": groupoid, "group": semigroup and groupoid}


def compatible(S: InverseSemigroupoid, a: int, b: int) -> bool:
    """a*b and ab* are both defined and idempotent."""
    t, inv = S.table, S.inv
    x, y = t[inv[a]][b], t[a][inv[b]]
    return x is not None and y is not None and S.is_idempotent(x) and S.is_idempotent(y)


def meet(S: InverseSemigroupoid, x: int, y: int) -> int | None:
    """Greatest lower bound of two elements with a common upper bound, as x y* y."""
    if not any(S.leq(x, a) and S.leq(y, a) for a in range(S.n)):
        return None
    yy = S.dom(y)
    return S.table[x][yy]


def isotropy(S: InverseSemigroupoid, v: int) -> list[int]:
    """Loops at vertex v."""
    return [a for a in range(S.n) if S.src[a] == v and S.rng[a] == v]


def unit_groupoid(names) -> InverseSemigroupoid:
    """A plain set viewed as a groupoid of identities."""
    names = tuple(names)
    n = len(names)
    table = tuple(tuple(i if i == j else None for j in range(n)) for i in range(n))
    ids = tuple(range(n))
    return InverseSemigroupoid(names, table, names, ids, ids, ids)


def as_semigroupoid(S) -> Semigroupoid:
    return Semigroupoid(S.names, S.table)
