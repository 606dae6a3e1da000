"""Fibered partial bijections, the inverse semigroupoid I(pi), kinds of maps
between inverse semigroupoids, preactions and the standard representations."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations, product
from typing import Mapping, Sequence

from .core import Homomorphism, PartialMagma, Semigroupoid, restrict
from .errors import AxiomFailure, VertexMismatch
from .inverse import InverseSemigroupoid, detect_inverse, make_inverse, unit_groupoid


@dataclass(frozen=True)
class FiberedPartialBijection:
    """A bijection between a subset of the fiber over ``src`` and a subset of
    the fiber over ``tgt``. ``pairs`` holds ``(x, y)`` meaning x maps to y."""

    tgt: int
    pairs: frozenset[tuple[int, int]]
    src: int

    @cached_property
    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(x for x, _ in self.pairs)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(y for _, y in self.pairs)

    def inverse(self) -> "FiberedPartialBijection":
        return FiberedPartialBijection(self.src, frozenset((y, x) for x, y in self.pairs), self.tgt)

    def __le__(self, other: "FiberedPartialBijection") -> bool:
        return self.tgt == other.tgt and self.src == other.src and self.pairs <= other.pairs


def compose_fibered(g: FiberedPartialBijection, f: FiberedPartialBijection) -> FiberedPartialBijection:
    """g after f, defined when f lands over the vertex g starts from."""
    if g.src != f.tgt:
        raise VertexMismatch(f"cannot compose: {g.src} != {f.tgt}")
    gd = g.as_dict
    return FiberedPartialBijection(
        g.tgt, frozenset((x, gd[y]) for x, y in f.pairs if y in gd), f.src
    )


@dataclass(frozen=True)
class Bundle:
    """A map pi from a finite set onto (part of) a base set."""

    space_names: tuple[str, ...]
    base_names: tuple[str, ...]
    pi: tuple[int, ...]

    def fiber(self, v: int) -> list[int]:
        return [x for x, p in enumerate(self.pi) if p == v]


def _fiber_bijections(A: Sequence[int], B: Sequence[int]):
    for k in range(min(len(A), len(B)) + 1):
        for dom in combinations(A, k):
            for img in permutations(B, k):
                yield frozenset(zip(dom, img))


@dataclass(frozen=True)
class IPi:
    """I(pi) with its elements as fibered partial bijections."""

    semigroupoid: InverseSemigroupoid
    elements: tuple[FiberedPartialBijection, ...]

    @cached_property
    def index(self) -> dict[FiberedPartialBijection, int]:
        return {f: i for i, f in enumerate(self.elements)}


def _fpb_name(b: Bundle, f: FiberedPartialBijection) -> str:
    body = ",".join(f"{b.space_names[x]}>{b.space_names[y]}" for x, y in sorted(f.pairs))
    return f"{b.base_names[f.tgt]}[{body}]{b.base_names[f.src]}"


def ipi(bundle: Bundle) -> IPi:
    """All fibered partial bijections, composing when the vertices match."""
    nb = len(bundle.base_names)
    elems = []
    for tgt, src in product(range(nb), repeat=2):
        for pairs in _fiber_bijections(bundle.fiber(src), bundle.fiber(tgt)):
            elems.append(FiberedPartialBijection(tgt, pairs, src))
    elems.sort(key=lambda f: (f.tgt, f.src, len(f.pairs), sorted(f.pairs)))
    pos = {f: i for i, f in enumerate(elems)}
    table = tuple(
        tuple(pos[compose_fibered(g, f)] if g.src == f.tgt else None for f in elems)
        for g in elems
    )
    names = tuple(_fpb_name(bundle, f) for f in elems)
    inv = tuple(pos[f.inverse()] for f in elems)
    S = make_inverse(
        PartialMagma(names, table),
        bundle.base_names,
        tuple(f.src for f in elems),
        tuple(f.tgt for f in elems),
        inv,
    )
    return IPi(S, tuple(elems))


def ipi_product_check(bundle: Bundle) -> dict[str, bool]:
    """Recheck I(pi) from scratch: axioms, inverses are inverse maps, idempotents are identities."""
    I = ipi(bundle)
    S = I.semigroupoid
    fresh = detect_inverse(PartialMagma(S.names, S.table))
    inverse_ok = all(I.elements[fresh.inv[a]] == I.elements[a].inverse() for a in range(S.n))
    idem_ok = all(
        (S.table[a][a] == a) == (I.elements[a].tgt == I.elements[a].src and all(x == y for x, y in I.elements[a].pairs))
        for a in range(S.n)
    )
    return {"semigroupoid": True, "inverse": inverse_ok, "idempotents": idem_ok}


# ---------------------------------------------------------------- maps


def map_kind_report(S: InverseSemigroupoid, T: InverseSemigroupoid, theta: Sequence[int]) -> dict:
    """Which conditions a map between inverse semigroupoids satisfies.

    ``i``: theta(a*) = theta(a)*; ``ii``: theta(a)theta(b) defined and below
    theta(ab); ``iii``: monotone; ``vee``: products of images defined and
    theta(ab) below them; ``homomorphism``: theta(ab) = theta(a)theta(b).
    Each value is ``None`` (holds) or a witness tuple of names.
    """
    t, u = S.table, T.table
    nm = S.names
    rep: dict = {"i": None, "ii": None, "iii": None, "vee": None, "homomorphism": None}
    for a in range(S.n):
        if theta[S.inv[a]] != T.inv[theta[a]]:
            rep["i"] = (nm[a],)
            break
    for a, b, ab in S.defined_pairs:
        p = u[theta[a]][theta[b]]
        if rep["ii"] is None and (p is None or not T.leq(p, theta[ab])):
            rep["ii"] = (nm[a], nm[b])
        if rep["vee"] is None and (p is None or not T.leq(theta[ab], p)):
            rep["vee"] = (nm[a], nm[b])
        if rep["homomorphism"] is None and p != theta[ab]:
            rep["homomorphism"] = (nm[a], nm[b])
    for a, b in product(range(S.n), repeat=2):
        if S.leq(a, b) and not T.leq(theta[a], theta[b]):
            rep["iii"] = (nm[a], nm[b])
            break
    return rep


def map_kinds(S, T, theta) -> set[str]:
    rep = map_kind_report(S, T, theta)
    kinds = set()
    if rep["homomorphism"] is None:
        kinds.add("homomorphism")
    if rep["i"] is None and rep["ii"] is None:
        kinds.add("wedge_prehomomorphism")
        if rep["iii"] is None:
            kinds.add("partial_homomorphism")
    if rep["vee"] is None:
        kinds.add("vee_prehomomorphism")
    return kinds


# ---------------------------------------------------------------- preactions

KINDS = ("wedge", "partial", "global")


@dataclass(frozen=True)
class Preaction:
    """An inverse semigroupoid acting on a space fibered over its vertices.

    ``anchor[x]`` is the actor vertex over which space element x sits, and
    ``theta[a]`` lists the pairs ``(x, y)`` of the partial bijection for a.
    A plain set is modelled as a groupoid of identities.
    """

    actor: InverseSemigroupoid
    space: PartialMagma
    anchor: tuple[int, ...]
    theta: tuple[frozenset[tuple[int, int]], ...]
    kind: str = "wedge"

    @cached_property
    def maps(self) -> tuple[dict[int, int], ...]:
        return tuple(dict(p) for p in self.theta)

    def apply(self, a: int, x: int) -> int | None:
        return self.maps[a].get(x)

    def dom(self, a: int) -> frozenset[int]:
        return frozenset(self.maps[a])

    def ran(self, a: int) -> frozenset[int]:
        return frozenset(self.maps[a].values())

    def as_fibered(self, a: int) -> FiberedPartialBijection:
        return FiberedPartialBijection(self.actor.rng[a], self.theta[a], self.actor.src[a])

    def fiber(self, v: int) -> frozenset[int]:
        return frozenset(x for x, w in enumerate(self.anchor) if w == v)

    def is_nondegenerate(self) -> bool:
        covered = set()
        for m in self.maps:
            covered.update(m)
        return len(covered) == self.space.n


def preaction(actor, space, anchor, theta, kind: str = "wedge") -> Preaction:
    """Build from index data, where ``theta`` maps actor indices to dicts."""
    if isinstance(theta, Mapping):
        theta = [theta.get(a, {}) for a in range(actor.n)]
    return Preaction(
        actor,
        space,
        tuple(anchor),
        tuple(frozenset(dict(m).items()) for m in theta),
        kind,
    )


def preaction_violations(p: Preaction, kind: str | None = None) -> list[tuple[str, str]]:
    """All failed axioms as ``(axiom, witness)``; ``kind`` defaults to ``p.kind``."""
    kind = kind or p.kind
    S, X = p.actor, p.space
    sn, xn = S.names, X.names
    bad: list[tuple[str, str]] = []
    for a in range(S.n):
        m = p.maps[a]
        if len(set(m.values())) != len(m):
            bad.append(("injective", sn[a]))
        for x, y in m.items():
            if p.anchor[x] != S.src[a]:
                bad.append(("domain fiber", f"{sn[a]}: {xn[x]}"))
            if p.anchor[y] != S.rng[a]:
                bad.append(("range fiber", f"{sn[a]}: {xn[y]}"))
        inv = p.maps[S.inv[a]]
        if inv != {y: x for x, y in m.items()}:
            bad.append(("inverse", sn[a]))
    for a, b, ab in S.defined_pairs:
        ma, mb, mab = p.maps[a], p.maps[b], p.maps[ab]
        comp = {x: ma[y] for x, y in mb.items() if y in ma}
        if any(mab.get(x) != y for x, y in comp.items()):
            bad.append(("product below", f"{sn[a]},{sn[b]}"))
        elif kind == "global" and comp != mab:
            bad.append(("product equal", f"{sn[a]},{sn[b]}"))
    if kind in ("partial", "global"):
        for a, b in product(range(S.n), repeat=2):
            if S.leq(a, b) and any(p.maps[b].get(x) != y for x, y in p.maps[a].items()):
                bad.append(("monotone", f"{sn[a]}<={sn[b]}"))
    bad.extend(_space_violations(p))
    return bad


def _space_violations(p: Preaction) -> list[tuple[str, str]]:
    S, X = p.actor, p.space
    t = X.table
    xn = X.names
    bad = []
    for x, y, xy in X.defined_pairs:
        if not (p.anchor[x] == p.anchor[y] == p.anchor[xy]):
            bad.append(("anchor homomorphism", f"{xn[x]}{xn[y]}"))
    for a in range(S.n):
        m = p.maps[a]
        if not m:
            continue
        dom = set(m)
        fib = p.fiber(S.src[a])
        for x in dom:
            for y in fib:
                for z in (t[x][y], t[y][x]):
                    if z is not None and z not in dom:
                        bad.append(("domain ideal", f"{S.names[a]}: {xn[x]},{xn[y]}"))
        for x, y in product(dom, dom):
            xy, fxfy = t[x][y], t[m[x]][m[y]]
            if (xy is None) != (fxfy is None) or (xy is not None and m.get(xy) != fxfy):
                bad.append(("isomorphism", f"{S.names[a]}: {xn[x]},{xn[y]}"))
    return bad


def validate_preaction(p: Preaction, kind: str | None = None) -> dict:
    """Report with ``violations`` and ``nondegenerate``."""
    return {
        "violations": preaction_violations(p, kind),
        "nondegenerate": p.is_nondegenerate(),
        "discrete": "holds trivially",
    }


def require_preaction(p: Preaction, kind: str | None = None) -> Preaction:
    bad = preaction_violations(p, kind)
    if bad:
        raise AxiomFailure(*bad[0])
    return p


def extend_to_partial(p: Preaction) -> Preaction:
    """Smallest partial action above a preaction: join theta_b over b <= a."""
    S = p.actor
    theta = []
    for a in range(S.n):
        merged: dict[int, int] = {}
        for b in range(S.n):
            if S.leq(b, a):
                merged.update(p.maps[b])
        theta.append(merged)
    return require_preaction(preaction(S, p.space, p.anchor, theta, "partial"))


# ---------------------------------------------------------------- standard actions


def canonical_vertex_action(S: InverseSemigroupoid) -> Preaction:
    """Each arrow sends its source vertex to its range vertex."""
    V = unit_groupoid(S.vertex_names)
    theta = [{S.src[a]: S.rng[a]} for a in range(S.n)]
    return require_preaction(preaction(S, V, range(S.n_vertices), theta, "global"))


def conjugation_fixed(S: InverseSemigroupoid) -> list[int]:
    """Loops b such that beb* = e for every idempotent e below b*b."""
    t, inv = S.table, S.inv
    out = []
    for b in range(S.n):
        if S.src[b] != S.rng[b]:
            continue
        bb = S.dom(b)
        if all(t[t[b][e]][inv[b]] == e for e in S.idempotents if S.leq(e, bb)):
            out.append(b)
    return out


def munn_action(S: InverseSemigroupoid, on: str = "fixed") -> tuple[Preaction, tuple[int, ...]]:
    """Conjugation a . b = a b a* on bb* <= a*a.

    ``on="fixed"`` uses the conjugation-fixed loops, ``on="idempotents"``
    only the idempotents. Returns the action and the inclusion into S.
    """
    carrier = conjugation_fixed(S) if on == "fixed" else list(S.idempotents)
    sub, keep = restrict(S, carrier)
    X = detect_inverse(sub)
    pos = {x: i for i, x in enumerate(keep)}
    t, inv = S.table, S.inv
    theta = []
    for a in range(S.n):
        aa = S.dom(a)
        m = {}
        for b in keep:
            if S.leq(S.ran(b), aa):
                m[pos[b]] = pos[t[t[a][b]][inv[a]]]
        theta.append(m)
    anchor = [S.src[b] for b in keep]
    return require_preaction(preaction(S, X, anchor, theta, "global")), keep


@dataclass(frozen=True)
class WagnerPreston:
    action: Preaction
    images: tuple[FiberedPartialBijection, ...]
    image: Semigroupoid
    alpha: Homomorphism
    checks: dict = field(default_factory=dict)


def wagner_preston(S: InverseSemigroupoid) -> WagnerPreston:
    """Represent S by left multiplications on the bundle r: S -> vertices.

    a acts on {t : tt* <= a*a} by t -> at.
    """
    t = S.table
    below = [[x for x in range(S.n) if S.leq(S.ran(x), S.dom(a))] for a in range(S.n)]
    theta = [{x: t[a][x] for x in below[a]} for a in range(S.n)]
    X = unit_groupoid(S.names)
    act = require_preaction(preaction(S, X, S.rng, theta, "global"))
    images = tuple(act.as_fibered(a) for a in range(S.n))
    pos = {f: i for i, f in enumerate(images)}
    injective = len(pos) == S.n
    closed = True
    rows = []
    for g in images:
        row = []
        for f in images:
            if g.src != f.tgt:
                row.append(None)
                continue
            c = compose_fibered(g, f)
            if c not in pos:
                closed = False
                row.append(None)
            else:
                row.append(pos[c])
        rows.append(tuple(row))
    names = tuple(f"alpha({nm})" for nm in S.names)
    image = Semigroupoid(names, tuple(rows))
    alpha = Homomorphism(S, image, tuple(pos[f] for f in images) if injective else tuple(range(S.n)))
    defined_iff = all(
        (t[a][b] is not None) == (images[a].src == images[b].tgt)
        for a in range(S.n)
        for b in range(S.n)
    )
    checks = {
        "injective": injective,
        "closed": closed,
        "multiplicative": injective and closed and not alpha.violations(),
        "defined_iff_defined": defined_iff,
    }
    return WagnerPreston(act, images, image, alpha, checks)
