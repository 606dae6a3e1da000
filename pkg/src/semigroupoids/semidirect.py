"""Semidirect products of actions, multipliers and the underlying groupoid."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .actions import Preaction, canonical_vertex_action
from .core import (
    GraphedSemigroupoid,
    Homomorphism,
    PartialMagma,
    Semigroupoid,
    exel_violations,
    graph_violations,
    is_idempotent_semigroupoid,
    is_nondegenerate,
)
from .errors import NotAssociative, NotRegular, NotUniqueInverse, SemigroupoidError
from .inverse import InverseSemigroupoid, make_inverse


@dataclass(frozen=True)
class SemidirectProduct:
    action: Preaction
    pairs: tuple[tuple[int, int], ...]
    semigroupoid: PartialMagma
    # space vertex behind each product vertex, when the space is graphed
    vertex_of: tuple[int, ...] = ()

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        return {p: i for i, p in enumerate(self.pairs)}


def _pair_table(p: Preaction):
    S, X = p.actor, p.space
    pairs = sorted((a, x) for a in range(S.n) for x in p.maps[a])
    pos = {q: i for i, q in enumerate(pairs)}
    rows = []
    stray = []
    for a, x in pairs:
        row = []
        for b, y in pairs:
            ab = S.table[a][b]
            z = p.maps[b][y]
            w = X.table[x][z] if ab is not None else None
            if w is None:
                row.append(None)
                continue
            v = p.maps[S.inv[b]].get(w)
            if v is None or (ab, v) not in pos:
                stray.append(((a, x), (b, y)))
                row.append(None)
                continue
            row.append(pos[(ab, v)])
        rows.append(tuple(row))
    return pairs, tuple(rows), stray


def _pair_name(p: Preaction, q: tuple[int, int]) -> str:
    return f"({p.actor.names[q[0]]},{p.space.names[q[1]]})"


def semidirect_product(p: Preaction, max_violations: int = 32) -> SemidirectProduct:
    """Pairs (a, x) with x in dom theta_a, ordered by (actor index, space index).

    (a,x)(b,y) = (ab, theta_{b*}(x theta_b(y))) when ab and x theta_b(y) exist.
    Raises :class:`NotAssociative` with the earliest bad triple otherwise.
    """
    pairs, table, stray = _pair_table(p)
    names = tuple(_pair_name(p, q) for q in pairs)
    if stray:
        raise SemigroupoidError(f"product leaves the set of pairs at {stray[0]}")
    m = PartialMagma(names, table)
    bad = exel_violations(m, limit=max_violations)
    if bad:
        witnesses = []
        for v in bad:
            f, g, h = (m.index(nm) for nm in v.triple)
            fg, gh = table[f][g], table[g][h]
            left = None if fg is None or table[fg][h] is None else names[table[fg][h]]
            right = None if gh is None or table[f][gh] is None else names[table[f][gh]]
            witnesses.append((v.triple, left, right))
        raise NotAssociative(witnesses)
    sg: PartialMagma = Semigroupoid(names, table)
    vertex_of: tuple[int, ...] = ()
    X = p.space
    if isinstance(X, GraphedSemigroupoid):
        src = [X.src[x] for _, x in pairs]
        rng = [X.rng[p.maps[a][x]] for a, x in pairs]
        used = sorted(set(src) | set(rng))
        re = {v: i for i, v in enumerate(used)}
        vnames = tuple(X.vertex_names[v] for v in used)
        src = tuple(re[v] for v in src)
        rng = tuple(re[v] for v in rng)
        vertex_of = tuple(used)
        if not graph_violations(sg, src, rng, len(vnames)):
            try:
                sg = make_inverse(sg, vnames, src, rng)
            except (NotRegular, NotUniqueInverse):
                sg = GraphedSemigroupoid(names, table, vnames, src, rng)
    return SemidirectProduct(p, tuple(pairs), sg, vertex_of)


def inverse_iff_check(sp: SemidirectProduct) -> dict:
    """Compare regularity of the product with that of the space and check the
    inverse formula (a,x)* = (a*, theta_a(x*))."""
    p = sp.action
    X = p.space
    prod_inverse = isinstance(sp.semigroupoid, InverseSemigroupoid)
    space_inverse = isinstance(X, InverseSemigroupoid)
    formula = None
    if prod_inverse and space_inverse:
        formula = all(
            sp.pairs[sp.semigroupoid.inv[i]] == (p.actor.inv[a], p.maps[a][X.inv[x]])
            for i, (a, x) in enumerate(sp.pairs)
        )
    return {
        "nondegenerate": p.is_nondegenerate(),
        "product_inverse": prod_inverse,
        "space_inverse": space_inverse,
        "agree": prod_inverse == space_inverse,
        "inverse_formula": formula,
    }


def eta(S: InverseSemigroupoid) -> tuple[Homomorphism, SemidirectProduct]:
    """a -> (a, s(a)) into the product with the canonical vertex action."""
    sp = semidirect_product(canonical_vertex_action(S))
    m = tuple(sp.index[(a, S.src[a])] for a in range(S.n))
    return Homomorphism(S, sp.semigroupoid, m), sp


# ---------------------------------------------------------------- multipliers


@dataclass(frozen=True)
class Multiplier:
    """A pair of partial maps (L, R) on a semigroupoid, keyed by element index."""

    left: dict = field(default_factory=dict)
    right: dict = field(default_factory=dict)


def multiplier_violations(S: PartialMagma, m: Multiplier, carrier=None) -> list[tuple[str, str]]:
    """Failures of the multiplier laws on ``carrier`` (default: all of S).

    Laws: dom L is a right ideal, dom R a left ideal, L(ab) = L(a)b,
    R(ab) = aR(b) and R(a)b = aL(b), each side defined iff the other is.
    """
    C = set(range(S.n)) if carrier is None else set(carrier)
    t, nm = S.table, S.names
    L, R = m.left, m.right
    bad = []

    def mul(x, y):
        if x is None or y is None:
            return None
        z = t[x][y]
        return z if z in C else None

    for a, b in product(sorted(C), repeat=2):
        ab = mul(a, b)
        if a in L and ab is not None and ab not in L:
            bad.append(("left domain right ideal", f"{nm[a]},{nm[b]}"))
        if b in R and ab is not None and ab not in R:
            bad.append(("right domain left ideal", f"{nm[a]},{nm[b]}"))
        lhs = L.get(ab) if ab is not None else None
        rhs = mul(L.get(a), b)
        if lhs != rhs:
            bad.append(("L(ab) = L(a)b", f"{nm[a]},{nm[b]}"))
        lhs = R.get(ab) if ab is not None else None
        rhs = mul(a, R.get(b))
        if lhs != rhs:
            bad.append(("R(ab) = aR(b)", f"{nm[a]},{nm[b]}"))
        if mul(R.get(a), b) != mul(a, L.get(b)):
            bad.append(("R(a)b = aL(b)", f"{nm[a]},{nm[b]}"))
    return bad


def validate_multiplier(S: PartialMagma, m: Multiplier, carrier=None) -> dict:
    bad = multiplier_violations(S, m, carrier)
    return {"valid": not bad, "violations": bad}


def translation_multiplier(S: PartialMagma, x: int, ideal=None) -> Multiplier:
    """Left and right multiplication by x, restricted to an ideal if given."""
    C = set(range(S.n)) if ideal is None else set(ideal)
    t = S.table
    left = {a: t[x][a] for a in S.left_sets[x] if a in C}
    right = {a: t[a][x] for a in S.right_sets[x] if a in C}
    return Multiplier(left, right)


def lr_associativity_evidence(S: PartialMagma) -> str:
    """Which sufficient condition for (L,R)-associativity applies."""
    if is_idempotent_semigroupoid(S):
        return "idempotent"
    if is_nondegenerate(S):
        if all(S.right_sets[a] for a in range(S.n)):
            return "nondeg_no_empty_right"
        if all(S.left_sets[a] for a in range(S.n)):
            return "nondeg_no_empty_left"
    return "direct_only"


# ---------------------------------------------------------------- underlying groupoid


def underlying_groupoid(S: InverseSemigroupoid) -> InverseSemigroupoid:
    """Same elements, keeping only products ab with a*a = bb*.

    Vertices are the idempotents of S.
    """
    t = S.table
    E = list(S.idempotents)
    pos = {e: i for i, e in enumerate(E)}
    table = tuple(
        tuple(t[a][b] if S.dom(a) == S.ran(b) else None for b in range(S.n)) for a in range(S.n)
    )
    return make_inverse(
        PartialMagma(S.names, table),
        tuple(S.names[e] for e in E),
        tuple(pos[S.dom(a)] for a in range(S.n)),
        tuple(pos[S.ran(a)] for a in range(S.n)),
        S.inv,
    )
