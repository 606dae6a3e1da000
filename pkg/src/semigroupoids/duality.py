"""Finite duality between inverse semigroupoids and ordered inverse semigroups.

A Sigma-ordered semigroup here is an inverse semigroup with zero (a
one-vertex inverse semigroupoid with an absorbing element) together with a
second partial order, written ``sub`` and read "is contained in", that
refines the natural order. ``KB`` turns an inverse semigroupoid into one via
its bisections and ``P`` goes back through ultrafilters and germs.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence

from .actions import preaction, require_preaction
from .core import Homomorphism, PartialMagma, induce_vertex_map
from .errors import AxiomFailure, CapExceeded, NoInterpolator, NotCovering, NotHomomorphism, SemigroupoidError
from .inverse import InverseSemigroupoid, make_inverse, unit_groupoid
from .quotients import Preorder, germ_congruence, quotient
from .semidirect import semidirect_product


# ---------------------------------------------------------------- filters


def _require_zero(S: InverseSemigroupoid) -> int:
    z = S.zero
    if z is None:
        raise SemigroupoidError("an inverse semigroup with zero is required")
    return z


def is_filter(S: InverseSemigroupoid, F: Iterable[int]) -> bool:
    """Nonempty, upward closed and closed under products, inside E(S)."""
    F = frozenset(F)
    E = S.idempotents
    t = S.table
    if not F or not F <= set(E):
        return False
    for e, f in product(F, F):
        if t[e][f] not in F:
            return False
    return all(f in F for e in F for f in E if t[e][f] == e)


def up_closure(S: InverseSemigroupoid, A: Iterable[int]) -> frozenset[int]:
    A = list(A)
    t = S.table
    return frozenset(f for f in S.idempotents if any(t[e][f] == e for e in A))


def is_ultrafilter(S: InverseSemigroupoid, F: Iterable[int]) -> bool:
    """Proper filter F such that every e meeting all of F nontrivially is in F."""
    z = _require_zero(S)
    F = frozenset(F)
    if not is_filter(S, F) or z in F:
        return False
    t = S.table
    for e in S.idempotents:
        if e not in F and all(t[e][f] != z for f in F):
            return False
    return True


def ultrafilters(S: InverseSemigroupoid) -> tuple[frozenset[int], ...]:
    """Ultrafilters of E(S), ordered by their least element.

    Every filter of a finite semilattice is principal, so candidates are the
    principal filters of nonzero idempotents, each tested by the criterion.
    """
    z = _require_zero(S)
    out = []
    for e in S.idempotents:
        if e == z:
            continue
        F = up_closure(S, [e])
        if is_ultrafilter(S, F):
            out.append((e, F))
    return tuple(F for _, F in sorted(out))


def ultrafilters_by_enumeration(S: InverseSemigroupoid) -> tuple[frozenset[int], ...]:
    """Maximal proper filters found by trying every subset of E(S)."""
    z = _require_zero(S)
    E = [e for e in S.idempotents if e != z]
    proper = []
    for k in range(1, len(E) + 1):
        for sub in combinations(E, k):
            if is_filter(S, sub):
                proper.append(frozenset(sub))
    maximal = [F for F in proper if not any(F < G for G in proper)]
    return tuple(sorted(maximal, key=lambda F: generator(S, F)))


def generator(S: InverseSemigroupoid, F: Iterable[int]) -> int:
    """The least element of a finite filter."""
    F = list(F)
    return next(e for e in F if all(S.table[e][f] == e for f in F))


def basic_set(omega: Sequence[frozenset[int]], e: int) -> frozenset[int]:
    """Indices of ultrafilters containing e."""
    return frozenset(i for i, F in enumerate(omega) if e in F)


# ---------------------------------------------------------------- Sigma orders


@dataclass(frozen=True)
class SigmaOrdered:
    S: InverseSemigroupoid
    sub: frozenset[tuple[int, int]]

    @cached_property
    def zero(self) -> int:
        return _require_zero(self.S)

    @cached_property
    def _sub(self) -> tuple[tuple[bool, ...], ...]:
        n = self.S.n
        return tuple(tuple((a, b) in self.sub for b in range(n)) for a in range(n))

    def contained(self, a: int, b: int) -> bool:
        return self._sub[a][b]

    @cached_property
    def _ups(self) -> tuple[frozenset[int], ...]:
        n = self.S.n
        return tuple(frozenset(b for b in range(n) if self._sub[a][b]) for a in range(n))

    def join(self, a: int, b: int) -> int | None:
        ups = self._ups[a] & self._ups[b]
        least = [c for c in ups if all(self._sub[c][d] for d in ups)]
        return least[0] if least else None

    def meet(self, a: int, b: int) -> int | None:
        n = self.S.n
        downs = [c for c in range(n) if self._sub[c][a] and self._sub[c][b]]
        greatest = [c for c in downs if all(self._sub[d][c] for d in downs)]
        return greatest[0] if greatest else None

    def join_all(self, items: Iterable[int]) -> int | None:
        acc = self.zero
        for x in items:
            acc = self.join(acc, x)
            if acc is None:
                return None
        return acc

    def complement_idempotent(self, e: int, f: int) -> int | None:
        """c in E with e v c = f and e ^ c = 0, for e contained in f."""
        for c in self.S.idempotents:
            if self.join(e, c) == f and self.meet(e, c) == self.zero:
                return c
        return None

    def difference(self, b: int, a: int) -> int | None:
        """b minus a, for a contained in b: b (b*b minus a*a)."""
        S = self.S
        c = self.complement_idempotent(S.dom(a), S.dom(b))
        return None if c is None else S.table[b][c]


def sigma(S: InverseSemigroupoid, pairs: Iterable[tuple[int, int]]) -> SigmaOrdered:
    return SigmaOrdered(S, frozenset(pairs))


def natural_sigma(S: InverseSemigroupoid) -> SigmaOrdered:
    """Use the natural order itself as the containment order."""
    return sigma(S, ((a, b) for a, b in product(range(S.n), repeat=2) if S.leq(a, b)))


def validate_sigma(X: SigmaOrdered) -> dict[str, object]:
    """Each axiom mapped to ``None`` when it holds, else a witness.

    order: partial order inside the natural order, stable under products.
    i: 0 is least.  ii: elements below a common bound have a join.
    iii: products distribute over joins.  iv: relative complements in E.
    v: orthogonal elements have a join.  vi: for t <= a some z with
    t <= z contained in a has the same right annihilator as t.
    The last three entries check derived identities.
    """
    S = X.S
    n, t, inv, z = S.n, S.table, S.inv, X.zero
    c = X.contained
    nm = S.names
    E = S.idempotents
    rep: dict[str, object] = {}

    rep["order"] = None
    for a, b in product(range(n), repeat=2):
        if not c(a, a):
            rep["order"] = ("reflexive", nm[a])
        elif a != b and c(a, b) and c(b, a):
            rep["order"] = ("antisymmetric", nm[a], nm[b])
        elif c(a, b) and not S.leq(a, b):
            rep["order"] = ("inside natural order", nm[a], nm[b])
        if rep["order"]:
            break
    if rep["order"] is None:
        for a, b, d in product(range(n), repeat=3):
            if c(a, b) and c(b, d) and not c(a, d):
                rep["order"] = ("transitive", nm[a], nm[b], nm[d])
                break
    if rep["order"] is None:
        for (a, b), x in product(X.sub, range(n)):
            if not (c(t[a][x], t[b][x]) and c(t[x][a], t[x][b]) and c(inv[a], inv[b])):
                rep["order"] = ("compatible", nm[a], nm[b], nm[x])
                break

    rep["i"] = next((nm[a] for a in range(n) if not c(z, a)), None)

    rep["ii"] = None
    for a1, a2, d in product(range(n), repeat=3):
        if c(a1, d) and c(a2, d) and X.join(a1, a2) is None:
            rep["ii"] = (nm[a1], nm[a2], nm[d])
            break

    rep["iii"] = None
    for c1, c2 in product(range(n), repeat=2):
        j = X.join(c1, c2)
        if j is None:
            continue
        for a in range(n):
            if t[a][j] != X.join(t[a][c1], t[a][c2]) or t[j][a] != X.join(t[c1][a], t[c2][a]):
                rep["iii"] = (nm[a], nm[c1], nm[c2])
                break
        if rep["iii"]:
            break

    rep["iv"] = None
    for e, f in product(E, E):
        if c(e, f) and X.complement_idempotent(e, f) is None:
            rep["iv"] = (nm[e], nm[f])
            break

    rep["v"] = None
    for a, b in product(range(n), repeat=2):
        if t[inv[a]][b] == z and t[a][inv[b]] == z and X.join(a, b) is None:
            rep["v"] = (nm[a], nm[b])
            break

    rep["vi"] = None
    for tt, a in product(range(n), repeat=2):
        if S.leq(tt, a) and _one_sided(X, tt, a) is None:
            rep["vi"] = (nm[tt], nm[a])
            break

    rep["meet_formula"] = None
    for x, y, a in product(range(n), repeat=3):
        if c(x, a) and c(y, a) and X.meet(x, y) != t[x][S.dom(y)]:
            rep["meet_formula"] = (nm[x], nm[y], nm[a])
            break

    rep["de_morgan"] = None
    for e, f, g in product(E, E, E):
        if not (c(e, g) and c(f, g)):
            continue
        ef_join, ef_meet = X.join(e, f), X.meet(e, f)
        ge, gf = X.complement_idempotent(e, g), X.complement_idempotent(f, g)
        if None in (ef_join, ef_meet, ge, gf):
            continue
        if X.complement_idempotent(ef_join, g) != X.meet(ge, gf) or X.complement_idempotent(ef_meet, g) != X.join(ge, gf):
            rep["de_morgan"] = (nm[e], nm[f], nm[g])
            break

    rep["difference_product"] = None
    for a, b, x in product(range(n), repeat=3):
        if not c(a, b):
            continue
        lhs = X.difference(b, a)
        rhs = X.difference(t[x][b], t[x][a])
        if lhs is None or rhs is None or t[x][lhs] != rhs:
            rep["difference_product"] = (nm[a], nm[b], nm[x])
            break
    return rep


def sigma_violations(X: SigmaOrdered) -> list[tuple[str, object]]:
    return [(k, v) for k, v in validate_sigma(X).items() if v is not None]


def relative_complement(X: SigmaOrdered, e: int, f: int) -> int:
    """f minus e for idempotents e contained in f."""
    c = X.complement_idempotent(e, f)
    if c is None:
        raise AxiomFailure("iv", (X.S.names[e], X.S.names[f]))
    return c


def require_sigma(X: SigmaOrdered) -> SigmaOrdered:
    bad = sigma_violations(X)
    if bad:
        raise AxiomFailure(*bad[0])
    return X


def _right_ann(X: SigmaOrdered, a: int) -> frozenset[int]:
    t, z = X.S.table, X.zero
    return frozenset(x for x in range(X.S.n) if t[a][x] == z)


def _left_ann(X: SigmaOrdered, a: int) -> frozenset[int]:
    t, z = X.S.table, X.zero
    return frozenset(x for x in range(X.S.n) if t[x][a] == z)


def _one_sided(X: SigmaOrdered, t: int, a: int) -> int | None:
    S = X.S
    target = _right_ann(X, t)
    for z in range(S.n):
        if S.leq(t, z) and X.contained(z, a) and _right_ann(X, z) == target:
            return z
    return None


def interpolator(X: SigmaOrdered, t: int, a: int) -> int:
    """The element a|t: t <= p contained in a with the same left and right
    annihilators as t, built as the meet of the two one-sided choices."""
    S = X.S
    if not S.leq(t, a):
        raise NoInterpolator(f"{S.names[t]} is not below {S.names[a]}")
    zr = _one_sided(X, t, a)
    zl = _one_sided(X, S.inv[t], S.inv[a])
    if zr is None or zl is None:
        raise NoInterpolator(f"no one-sided interpolator for {S.names[t]} <= {S.names[a]}")
    w = S.inv[zl]
    p = S.table[zr][S.dom(w)]
    if not (
        S.leq(t, p)
        and X.contained(p, a)
        and _right_ann(X, p) == _right_ann(X, t)
        and _left_ann(X, p) == _left_ann(X, t)
    ):
        raise NoInterpolator(f"meet of one-sided interpolators fails for {S.names[t]} <= {S.names[a]}")
    return p


def interpolators_by_search(X: SigmaOrdered, t: int, a: int) -> list[int]:
    S = X.S
    ra, la = _right_ann(X, t), _left_ann(X, t)
    return [
        p
        for p in range(S.n)
        if S.leq(t, p) and X.contained(p, a) and _right_ann(X, p) == ra and _left_ann(X, p) == la
    ]


# ---------------------------------------------------------------- bisections


def bisections(G: InverseSemigroupoid, cap: int = 1 << 16) -> list[frozenset[int]]:
    """Subsets on which source and range are both injective, by backtracking
    over source vertices."""
    by_src: list[list[int]] = [[] for _ in range(G.n_vertices)]
    for a in range(G.n):
        by_src[G.src[a]].append(a)
    out: list[frozenset[int]] = []
    chosen: list[int] = []
    used_r: set[int] = set()

    def rec(v: int):
        if v == G.n_vertices:
            out.append(frozenset(chosen))
            if len(out) > cap:
                raise CapExceeded(f"more than {cap} bisections")
            return
        rec(v + 1)
        for a in by_src[v]:
            if G.rng[a] in used_r:
                continue
            chosen.append(a)
            used_r.add(G.rng[a])
            rec(v + 1)
            used_r.discard(G.rng[a])
            chosen.pop()

    rec(0)
    return sorted(out, key=lambda B: (len(B), sorted(B)))


@dataclass(frozen=True)
class KB:
    """Bisections of G under set product, ordered by inclusion."""

    base: InverseSemigroupoid
    sets: tuple[frozenset[int], ...]
    sigma: SigmaOrdered

    @cached_property
    def index(self) -> dict[frozenset[int], int]:
        return {B: i for i, B in enumerate(self.sets)}


def _set_name(G, B) -> str:
    return "{" + ",".join(G.names[x] for x in sorted(B)) + "}"


def kb(G: InverseSemigroupoid, cap: int = 1 << 16) -> KB:
    sets = bisections(G, cap)
    pos = {B: i for i, B in enumerate(sets)}
    t = G.table
    table = tuple(
        tuple(pos[frozenset(t[a][b] for a in A for b in B if t[a][b] is not None)] for B in sets)
        for A in sets
    )
    inv = tuple(pos[frozenset(G.inv[a] for a in A)] for A in sets)
    S = make_inverse(
        PartialMagma(tuple(_set_name(G, B) for B in sets), table), ("*",), (0,) * len(sets), (0,) * len(sets), inv
    )
    sub = frozenset((i, j) for i, A in enumerate(sets) for j, B in enumerate(sets) if A <= B)
    return KB(G, tuple(sets), SigmaOrdered(S, sub))


def kb_interpolator_formula(K: KB, B: int, A: int) -> int:
    """For B <= A: the members of A whose source is a source of B."""
    G = K.base
    srcs = {G.src[x] for x in K.sets[B]}
    return K.index[frozenset(x for x in K.sets[A] if G.src[x] in srcs)]


# ---------------------------------------------------------------- morphisms


def is_covering(phi: Homomorphism) -> tuple[bool, bool]:
    """(star-injective, star-surjective) for a map between inverse semigroupoids."""
    G, H = phi.source, phi.target
    v0 = induce_vertex_map(phi)
    inj = all(
        not (G.src[a] == G.src[b] and phi(a) == phi(b))
        for a, b in combinations(range(G.n), 2)
    )
    surj = all(
        any(G.src[a] == v and phi(a) == b for a in range(G.n))
        for v in range(G.n_vertices)
        for b in range(H.n)
        if H.src[b] == v0[v]
    )
    return inj, surj


@dataclass(frozen=True)
class SigmaMorphism:
    source: SigmaOrdered
    target: SigmaOrdered
    mapping: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.mapping[a]


def sigma_morphism_report(f: SigmaMorphism) -> dict[str, object]:
    """Homomorphism plus axioms i-vi; each value ``None`` or a witness.

    i: zero to zero.  ii: monotone.  iii: preserves existing joins.
    iv: anything under two images is under the image of something under both.
    v: every target element is a join of pieces under images.
    vi: interpolators go to interpolators.
    """
    A, B = f.source, f.target
    S, T = A.S, B.S
    m = f.mapping
    nm = S.names
    rep: dict[str, object] = {}
    rep["homomorphism"] = next(
        ((nm[a], nm[b]) for a, b in product(range(S.n), repeat=2) if m[S.table[a][b]] != T.table[m[a]][m[b]]),
        None,
    )
    rep["i"] = None if m[A.zero] == B.zero else (nm[A.zero],)
    rep["ii"] = next(((nm[a], nm[b]) for a, b in A.sub if not B.contained(m[a], m[b])), None)
    rep["iii"] = None
    for a, b in product(range(S.n), repeat=2):
        j = A.join(a, b)
        if j is not None and B.join(m[a], m[b]) != m[j]:
            rep["iii"] = (nm[a], nm[b])
            break
    rep["iv"] = None
    for a, b in product(range(S.n), repeat=2):
        for tt in range(T.n):
            if B.contained(tt, m[a]) and B.contained(tt, m[b]):
                if not any(A.contained(c, a) and A.contained(c, b) and B.contained(tt, m[c]) for c in range(S.n)):
                    rep["iv"] = (nm[a], nm[b], T.names[tt])
                    break
        if rep["iv"]:
            break
    rep["v"] = None
    images = set(m)
    for tt in range(T.n):
        pieces = [u for u in range(T.n) if B.contained(u, tt) and any(B.contained(u, y) for y in images)]
        if B.join_all(pieces) != tt:
            rep["v"] = (T.names[tt],)
            break
    rep["vi"] = None
    for tt, a in product(range(S.n), repeat=2):
        if not S.leq(tt, a):
            continue
        try:
            lhs = m[interpolator(A, tt, a)]
            rhs = interpolator(B, m[tt], m[a])
        except NoInterpolator:
            rep["vi"] = (nm[tt], nm[a])
            break
        if lhs != rhs:
            rep["vi"] = (nm[tt], nm[a])
            break
    return rep


def sigma_morphism_failures(f: SigmaMorphism) -> set[str]:
    return {k for k, v in sigma_morphism_report(f).items() if v is not None}


def kb_on_morphism(phi: Homomorphism, KS: KB, KT: KB) -> SigmaMorphism:
    """Preimage map KB(T) -> KB(S) along a covering homomorphism S -> T."""
    inj, surj = is_covering(phi)
    if not (inj and surj):
        raise NotCovering(f"star-injective={inj}, star-surjective={surj}")
    G = phi.source
    m = []
    for B in KT.sets:
        pre = frozenset(a for a in range(G.n) if phi(a) in B)
        if pre not in KS.index:
            raise NotCovering("preimage of a bisection is not a bisection")
        m.append(KS.index[pre])
    return SigmaMorphism(KT.sigma, KS.sigma, tuple(m))


# ---------------------------------------------------------------- the functor P


@dataclass(frozen=True)
class PResult:
    """Germs of the dual conjugation action on ultrafilters."""

    sigma: SigmaOrdered
    omega: tuple[frozenset[int], ...]
    pairs: tuple[tuple[int, int], ...]
    labels: tuple[int, ...]
    semigroupoid: InverseSemigroupoid

    @cached_property
    def _pair_index(self) -> dict[tuple[int, int], int]:
        return {p: i for i, p in enumerate(self.pairs)}

    def germ(self, s: int, F: int) -> int | None:
        """Class of (s, F), or ``None`` when F does not contain s*s."""
        i = self._pair_index.get((s, F))
        return None if i is None else self.labels[i]


def dual_munn(S: InverseSemigroupoid, omega) -> list[dict[int, int]]:
    """a sends F (containing a*a) to the up-closure of a (F below a*a) a*."""
    t, inv = S.table, S.inv
    where = {F: i for i, F in enumerate(omega)}
    theta = []
    for a in range(S.n):
        aa = S.dom(a)
        m = {}
        for i, F in enumerate(omega):
            if aa not in F:
                continue
            img = up_closure(S, [t[t[a][e]][inv[a]] for e in F if S.leq(e, aa)])
            m[i] = where[img]
        theta.append(m)
    return theta


def p_functor(X: SigmaOrdered) -> PResult:
    S = X.S
    omega = ultrafilters(S)
    space = unit_groupoid([f"F{i}" for i in range(len(omega))])
    act = require_preaction(preaction(S, space, [0] * len(omega), dual_munn(S, omega), "global"))
    sp = semidirect_product(act)
    G = sp.semigroupoid
    order = Preorder(
        frozenset(
            (i, j)
            for i, (s, F) in enumerate(sp.pairs)
            for j, (u, H) in enumerate(sp.pairs)
            if F == H and X.contained(s, u)
        )
    )
    R = germ_congruence(G, order)
    Q, _ = quotient(G, R)
    names = tuple(f"[{S.names[sp.pairs[c[0]][0]]},F{sp.pairs[c[0]][1]}]" for c in R.classes())
    Q = InverseSemigroupoid(names, Q.table, Q.vertex_names, Q.src, Q.rng, Q.inv)
    return PResult(X, omega, sp.pairs, R.labels, Q)


def p_vertex_map(f: SigmaMorphism, PS: PResult, PT: PResult) -> tuple[int, ...]:
    """Ultrafilter F of E(T) goes to {e : 0 not in e . theta^-1(F)}."""
    S = f.source.S
    t, z = S.table, f.source.zero
    where = {F: i for i, F in enumerate(PS.omega)}
    out = []
    for F in PT.omega:
        pre = [x for x in S.idempotents if f(x) in F]
        G = frozenset(e for e in S.idempotents if all(t[e][x] != z for x in pre))
        if G not in where:
            raise SemigroupoidError("pulled-back set is not an ultrafilter")
        out.append(where[G])
    return tuple(out)


def p_on_morphism(f: SigmaMorphism, PS: PResult, PT: PResult) -> tuple[Homomorphism, tuple[int, ...]]:
    """The induced map P(T) -> P(S), with its vertex map."""
    v0 = p_vertex_map(f, PS, PT)
    S = f.source.S
    arrow: dict[int, int] = {}
    for (u, F) in PT.pairs:
        cls = PT.germ(u, F)
        for s in range(S.n):
            if PT.germ(f(s), F) == cls:
                img = PS.germ(s, v0[F])
                if img is None:
                    continue
                if arrow.setdefault(cls, img) != img:
                    raise NotHomomorphism([f"germ {PT.semigroupoid.names[cls]} has two images"])
    if len(arrow) != PT.semigroupoid.n:
        raise NotHomomorphism(["some germ has no image"])
    h = Homomorphism(PT.semigroupoid, PS.semigroupoid, tuple(arrow[c] for c in range(PT.semigroupoid.n)))
    bad = h.violations()
    if bad:
        raise NotHomomorphism(bad)
    return h, v0


# ---------------------------------------------------------------- unit maps


def zeta(G: InverseSemigroupoid, cap: int = 1 << 16) -> dict:
    """a -> [{a}, psi(s(a))] from G to P(KB(G)); psi(x) collects the
    idempotent bisections with x among their sources."""
    K = kb(G, cap)
    P = p_functor(K.sigma)
    KS = K.sigma.S
    where = {F: i for i, F in enumerate(P.omega)}
    psi = []
    for v in range(G.n_vertices):
        F = frozenset(
            U for U in KS.idempotents if any(G.src[x] == v for x in K.sets[U])
        )
        psi.append(where.get(F))
    m = []
    for a in range(G.n):
        F = psi[G.src[a]]
        m.append(None if F is None else P.germ(K.index[frozenset([a])], F))
    ok_vertices = None not in psi and len(set(psi)) == len(psi) == len(P.omega)
    if None in m:
        return {"iso": False, "elements": G.n, "vertices": ok_vertices}
    h = Homomorphism(G, P.semigroupoid, tuple(m))
    graph_ok = all(P.semigroupoid.src[m[a]] == psi[G.src[a]] for a in range(G.n))
    return {
        "iso": h.is_isomorphism() and ok_vertices and graph_ok,
        "elements": G.n,
        "vertices": ok_vertices,
        "map": h,
    }


def kappa(X: SigmaOrdered, cap: int = 1 << 16) -> dict:
    """s -> {[s, F] : F contains s*s}, from S to KB(P(S)), also as an order map."""
    P = p_functor(X)
    K = kb(P.semigroupoid, cap)
    S = X.S
    m = []
    for s in range(S.n):
        B = frozenset(P.germ(s, i) for i, F in enumerate(P.omega) if S.dom(s) in F)
        m.append(K.index.get(B))
    if None in m:
        return {"iso": False, "elements": S.n}
    h = Homomorphism(S, K.sigma.S, tuple(m))
    order_ok = all(
        X.contained(a, b) == K.sigma.contained(m[a], m[b]) for a, b in product(range(S.n), repeat=2)
    )
    return {"iso": h.is_isomorphism() and order_ok, "elements": S.n, "order": order_ok, "map": h}
