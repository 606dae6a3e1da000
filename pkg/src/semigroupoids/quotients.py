"""Graphed congruences, quotients, compatible preorders and germ relations."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .actions import Preaction, preaction, require_preaction
from .core import GraphedSemigroupoid, Homomorphism, PartialMagma, Semigroupoid, _UnionFind
from .errors import AxiomFailure, HypothesisViolated, NotGraphable, NotHomomorphism
from .inverse import InverseSemigroupoid, make_inverse
from .semidirect import semidirect_product


@dataclass(frozen=True)
class Congruence:
    """An equivalence given by a class label per element (labels 0..k-1,
    numbered by least member)."""

    labels: tuple[int, ...]

    @property
    def n_classes(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n_classes)]
        for x, c in enumerate(self.labels):
            out[c].append(x)
        return out

    def related(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    @classmethod
    def identity(cls, n: int) -> "Congruence":
        return cls(tuple(range(n)))

    @classmethod
    def from_blocks(cls, n: int, uf: _UnionFind) -> "Congruence":
        roots = {}
        labels = []
        for x in range(n):
            labels.append(roots.setdefault(uf.find(x), len(roots)))
        return cls(tuple(labels))


def congruence_closure(S: PartialMagma, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence containing ``pairs``.

    On a graphed semigroupoid the seeds must share source and range.
    """
    pairs = list(pairs)
    if isinstance(S, GraphedSemigroupoid):
        for a, b in pairs:
            if S.src[a] != S.src[b] or S.rng[a] != S.rng[b]:
                raise NotGraphable(S.names[a], S.names[b])
    uf = _UnionFind(range(S.n))
    for a, b in pairs:
        uf.union(a, b)
    changed = True
    while changed:
        changed = False
        seen: dict[tuple[int, int], int] = {}
        for a, b, ab in S.defined_pairs:
            key = (uf.find(a), uf.find(b))
            if key in seen:
                changed |= uf.union(seen[key], ab)
            else:
                seen[key] = ab
    return Congruence.from_blocks(S.n, uf)


def congruence_violations(S: PartialMagma, R: Congruence) -> list[str]:
    nm = S.names
    bad = []
    if isinstance(S, GraphedSemigroupoid):
        for a, b in product(range(S.n), repeat=2):
            if R.related(a, b) and (S.src[a] != S.src[b] or S.rng[a] != S.rng[b]):
                bad.append(f"{nm[a]} ~ {nm[b]} with different endpoints")
    seen: dict[tuple[int, int], int] = {}
    for a, b, ab in S.defined_pairs:
        key = (R.labels[a], R.labels[b])
        if key in seen and not R.related(seen[key], ab):
            bad.append(f"products over classes of {nm[a]},{nm[b]} disagree")
        seen.setdefault(key, ab)
    if not isinstance(S, GraphedSemigroupoid):
        # definedness must only depend on the classes
        for a, b in product(range(S.n), repeat=2):
            for c, d in product(range(S.n), repeat=2):
                if R.related(a, c) and R.related(b, d) and (S.table[a][b] is None) != (S.table[c][d] is None):
                    bad.append(f"definedness of {nm[a]}{nm[b]} and {nm[c]}{nm[d]} differ")
                    return bad
    return bad


def quotient_table(S: PartialMagma, R: Congruence) -> tuple[PartialMagma, Homomorphism]:
    """Class representatives are the least members; names come from them."""
    reps = [c[0] for c in R.classes()]
    table = tuple(
        tuple(None if (z := S.table[a][b]) is None else R.labels[z] for b in reps) for a in reps
    )
    Q = PartialMagma(tuple(S.names[r] for r in reps), table)
    return Q, Homomorphism(S, Q, R.labels)


def quotient(S: InverseSemigroupoid, R: Congruence) -> tuple[InverseSemigroupoid, Homomorphism]:
    """Quotient by a graphed congruence, keeping the vertex set."""
    bad = congruence_violations(S, R)
    if bad:
        raise NotHomomorphism(bad)
    Q, _ = quotient_table(S, R)
    reps = [c[0] for c in R.classes()]
    Q = make_inverse(
        Q,
        S.vertex_names,
        tuple(S.src[r] for r in reps),
        tuple(S.rng[r] for r in reps),
        tuple(R.labels[S.inv[r]] for r in reps),
    )
    return Q, Homomorphism(S, Q, R.labels)


def idempotent_pure_report(S: InverseSemigroupoid, R: Congruence) -> dict[str, bool]:
    """The three descriptions of idempotent purity, computed independently."""
    E = set(S.idempotents)
    sat = {x for x in range(S.n) if any(R.related(x, e) for e in E)}
    by_saturation = sat == E
    Q, pi = quotient(S, R)
    by_preimage = {x for x in range(S.n) if Q.is_idempotent(pi(x))} == E
    by_pairs = True
    for a, b in product(range(S.n), repeat=2):
        if R.related(a, b):
            ab_ = S.table[S.inv[a]][b]
            a_b = S.table[a][S.inv[b]]
            if ab_ not in E or a_b not in E:
                by_pairs = False
                break
    return {"saturation": by_saturation, "preimage": by_preimage, "pairs": by_pairs}


def is_idempotent_pure(S: InverseSemigroupoid, R: Congruence) -> bool:
    rep = idempotent_pure_report(S, R)
    return all(rep.values())


# ---------------------------------------------------------------- preorders and germs


@dataclass(frozen=True)
class Preorder:
    """A relation given as a set of pairs (x, y) meaning x precedes y."""

    pairs: frozenset[tuple[int, int]]

    def __call__(self, x: int, y: int) -> bool:
        return (x, y) in self.pairs


def canonical_preorder(S: InverseSemigroupoid) -> Preorder:
    return Preorder(frozenset((a, b) for a, b in product(range(S.n), repeat=2) if S.leq(a, b)))


def preorder_violations(S: InverseSemigroupoid, P: Preorder) -> list[tuple[str, str]]:
    """Reflexive, transitive, inside the natural order, and stable under
    multiplication on either side."""
    nm = S.names
    t = S.table
    bad = []
    for a in range(S.n):
        if not P(a, a):
            bad.append(("reflexive", nm[a]))
    for (a, b), (c, d) in product(P.pairs, P.pairs):
        if b == c and not P(a, d):
            bad.append(("transitive", f"{nm[a]},{nm[b]},{nm[d]}"))
    for a, b in P.pairs:
        if not S.leq(a, b):
            bad.append(("below natural order", f"{nm[a]},{nm[b]}"))
        for x in range(S.n):
            for u, v, side in ((t[a][x], t[b][x], "right"), (t[x][a], t[x][b], "left")):
                if u is not None and (v is None or not P(u, v)):
                    bad.append((f"{side} compatible", f"{nm[a]},{nm[b]},{nm[x]}"))
    return bad


def validate_preorder(S: InverseSemigroupoid, P: Preorder) -> dict:
    bad = preorder_violations(S, P)
    return {"valid": not bad, "violations": bad}


def germ_congruence(S: InverseSemigroupoid, P: Preorder) -> Congruence:
    """a ~ b iff some z precedes both, built with union-find over comparable pairs."""
    bad = preorder_violations(S, P)
    if bad:
        raise AxiomFailure(*bad[0])
    uf = _UnionFind(range(S.n))
    for a, b in P.pairs:
        uf.union(a, b)
    R = Congruence.from_blocks(S.n, uf)
    for a, b in product(range(S.n), repeat=2):
        if R.related(a, b) and not any(P(z, a) and P(z, b) for z in range(S.n)):
            raise AxiomFailure("germ relation transitive", (S.names[a], S.names[b]))
    return R


def initial_groupoid(S: InverseSemigroupoid) -> tuple[InverseSemigroupoid, Homomorphism]:
    """Quotient by the germ relation of the natural order."""
    return quotient(S, germ_congruence(S, canonical_preorder(S)))


def factor_through(pi: Homomorphism, phi: Homomorphism) -> Homomorphism:
    """The unique map psi with psi . pi = phi, checked to be a homomorphism."""
    psi: dict[int, int] = {}
    for a in range(pi.source.n):
        if psi.setdefault(pi(a), phi(a)) != phi(a):
            raise NotHomomorphism([f"{pi.source.names[a]} breaks constancy on classes"])
    h = Homomorphism(pi.target, phi.target, tuple(psi[q] for q in range(pi.target.n)))
    bad = h.violations()
    if bad:
        raise NotHomomorphism(bad)
    return h


# ---------------------------------------------------------------- quotient actions


def respects(p: Preaction, R2: Congruence) -> bool:
    """theta maps related points in a common domain to related points."""
    for a in range(p.actor.n):
        m = p.maps[a]
        for x, y in product(m, m):
            if R2.related(x, y) and not R2.related(m[x], m[y]):
                return False
    return True


def quotient_action(p: Preaction, R1: Congruence, R2: Congruence, check: bool = True):
    """Action of S/R1 on T/R2: [a] sends [x] to [theta_a(x)].

    The domain of [a] collects the classes meeting dom theta_b for some b ~ a.
    Returns ``(action, S/R1, T/R2)``. Needs R1 idempotent pure and theta
    compatible with R2.
    """
    S, T = p.actor, p.space
    if check and not is_idempotent_pure(S, R1):
        raise HypothesisViolated("H1", "R1 is not idempotent pure")
    if check and not respects(p, R2):
        raise HypothesisViolated("H2", "theta does not respect R2")
    SQ, _ = quotient(S, R1)
    TQ, _ = quotient(T, R2) if isinstance(T, InverseSemigroupoid) else quotient_table(T, R2)
    anchor: dict[int, int] = {}
    for x in range(T.n):
        if anchor.setdefault(R2.labels[x], p.anchor[x]) != p.anchor[x]:
            raise HypothesisViolated("H2", "anchor is not constant on R2 classes")
    theta = []
    for cls in R1.classes():
        m: dict[int, int] = {}
        for b in cls:
            for x, y in p.maps[b].items():
                cx, cy = R2.labels[x], R2.labels[y]
                if m.setdefault(cx, cy) != cy:
                    raise HypothesisViolated("H2", f"class of {S.names[b]} is not well defined")
        theta.append(m)
    act = preaction(SQ, TQ, [anchor[c] for c in range(R2.n_classes)], theta, "wedge")
    return require_preaction(act), SQ, TQ


def phi_isomorphism(p: Preaction, R1: Congruence, R2: Congruence) -> dict:
    """Compare (S x| T)/(R1 x R2) with (S/R1) x| (T/R2) via [a,x] -> ([a],[x])."""
    act, SQ, TQ = quotient_action(p, R1, R2)
    big = semidirect_product(p)
    small = semidirect_product(act)
    labels = {}
    for i, (a, x) in enumerate(big.pairs):
        labels.setdefault((R1.labels[a], R2.labels[x]), len(labels))
    R = Congruence(tuple(labels[(R1.labels[a], R2.labels[x])] for a, x in big.pairs))
    cong_bad = congruence_violations(big.semigroupoid, R)
    Q, _ = quotient_table(big.semigroupoid, R)
    inv_labels = {v: k for k, v in labels.items()}
    try:
        m = tuple(small.index[inv_labels[c]] for c in range(Q.n))
    except KeyError:
        return {"congruence": not cong_bad, "isomorphism": False}
    h = Homomorphism(Q, small.semigroupoid, m)
    return {
        "congruence": not cong_bad,
        "isomorphism": h.is_isomorphism(),
        "size": Q.n,
    }
