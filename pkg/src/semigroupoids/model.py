"""Turn a parsed document into tables, graphs, maps, actions and relations."""
from __future__ import annotations

from functools import cached_property

from .actions import Preaction, preaction
from .core import (
    GraphedSemigroupoid,
    Homomorphism,
    PartialMagma,
    partial_magma,
    validate_exel,
    validate_graphed,
)
from .dsl import (
    ActionDecl,
    CongruenceDecl,
    Document,
    GraphDecl,
    MapDecl,
    OrderDecl,
    SemigroupoidDecl,
)
from .errors import NotRegular, NotUniqueInverse, SemigroupoidError, UnresolvedName
from .inverse import InverseSemigroupoid, detect_inverse, make_inverse
from .quotients import Congruence, Preorder, congruence_closure


class Model:
    """Lazily built objects for each block of a document, cached by name."""

    def __init__(self, doc: Document):
        self.doc = doc
        self._cache: dict[tuple[str, str], object] = {}

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @cached_property
    def tables(self) -> list[str]:
        """Names of blocks that carry a product table."""
        return [d.name for d in self.doc.decls if isinstance(d, (SemigroupoidDecl, GraphDecl))]

    def magma(self, name: str) -> PartialMagma:
        """The raw table, without any axiom check."""
        d = self.doc[name]
        if isinstance(d, GraphDecl):
            return self.magma(d.on)
        if not isinstance(d, SemigroupoidDecl):
            raise UnresolvedName(name, "semigroupoid or graph")
        return self._memo(("magma", name), lambda: partial_magma(d.elements, d.products))

    def graphed(self, name: str) -> GraphedSemigroupoid:
        d = self.doc[name]
        if not isinstance(d, GraphDecl):
            raise UnresolvedName(name, "graph")

        def build():
            S = validate_exel(self.magma(d.on))
            vi = {v: i for i, v in enumerate(d.vertices)}
            s, r = dict(d.s), dict(d.r)
            missing = [a for a in S.names if a not in s or a not in r]
            if missing:
                raise UnresolvedName(missing[0], f"graph {name} (no source or range)")
            src = tuple(vi[s[a]] for a in S.names)
            rng = tuple(vi[r[a]] for a in S.names)
            return validate_graphed(S, d.vertices, src, rng)

        return self._memo(("graphed", name), build)

    def inverse(self, name: str) -> InverseSemigroupoid:
        """Inverse semigroupoid for a block, using the declared graph when
        there is one and the canonical graphing otherwise."""
        d = self.doc[name]

        def build():
            if isinstance(d, GraphDecl):
                G = self.graphed(name)
                return make_inverse(G, G.vertex_names, G.src, G.rng)
            return detect_inverse(self.magma(name))

        return self._memo(("inverse", name), build)

    def best(self, name: str) -> PartialMagma:
        """Most structured reading of a table: inverse, graphed or plain."""
        try:
            return self.inverse(name)
        except (NotRegular, NotUniqueInverse):
            d = self.doc[name]
            return self.graphed(name) if isinstance(d, GraphDecl) else validate_exel(self.magma(name))

    def is_inverse(self, name: str) -> bool:
        try:
            self.inverse(name)
        except SemigroupoidError:
            return False
        return True

    def homomorphism(self, name: str) -> Homomorphism:
        d = self.doc[name]
        assert isinstance(d, MapDecl)
        A, B = self.best(d.source), self.best(d.target)
        m = dict(d.pairs)
        missing = [a for a in A.names if a not in m]
        if missing:
            raise UnresolvedName(missing[0], f"map {name} (no image)")
        return Homomorphism(A, B, tuple(B.index(m[a]) for a in A.names))

    def action(self, name: str) -> Preaction:
        d = self.doc[name]
        assert isinstance(d, ActionDecl)

        def build():
            S = self.inverse(d.actor)
            X = self.best(d.space)
            anchors = dict(d.anchor)
            vi = {v: i for i, v in enumerate(S.vertex_names)}
            ei = {a: i for i, a in enumerate(S.names)}
            anchor = []
            for x in X.names:
                u = anchors.get(x)
                if u is None:
                    if S.n_vertices != 1:
                        raise UnresolvedName(x, f"action {name} (no anchor)")
                    anchor.append(0)
                elif u in vi and isinstance(self.doc[d.actor], GraphDecl):
                    anchor.append(vi[u])
                else:
                    # an element name stands for its source vertex
                    anchor.append(S.src[ei[u]] if u in ei else vi[u])
            theta: list[dict[int, int]] = [{} for _ in range(S.n)]
            for a, pairs in d.theta:
                theta[ei[a]] = {X.index(x): X.index(y) for x, y in pairs}
            return preaction(S, X, anchor, theta, d.kind or "wedge")

        return self._memo(("action", name), build)

    def congruence(self, name: str) -> tuple[PartialMagma, Congruence]:
        """Least congruence containing the listed pairs, on the block's best reading."""
        d = self.doc[name]
        assert isinstance(d, CongruenceDecl)
        S = self.best(d.on)
        return S, congruence_closure(S, [(S.index(a), S.index(b)) for a, b in d.pairs])

    def order(self, name: str) -> tuple[InverseSemigroupoid, Preorder]:
        """Listed pairs plus the diagonal."""
        d = self.doc[name]
        assert isinstance(d, OrderDecl)
        S = self.inverse(d.on)
        pairs = {(S.index(a), S.index(b)) for a, b in d.pairs}
        pairs |= {(a, a) for a in range(S.n)}
        return S, Preorder(frozenset(pairs))
