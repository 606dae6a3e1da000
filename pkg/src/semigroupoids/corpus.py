"""The generated instance corpus used by the theorem and acceptance suites.

Base instances are the semilattices with at most four elements, the groups
of order at most four, I2, the pair groupoids on one to three points and
(X x X) x L2 with |X| = 2. Quotients by principal graphed congruences and
initial groupoids are added, keeping one instance per isomorphism class.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .actions import Preaction, canonical_vertex_action, munn_action, preaction, require_preaction, wagner_preston
from .errors import SemigroupoidError
from .inverse import InverseSemigroupoid
from .iso import is_isomorphic
from .quotients import Congruence, congruence_closure, initial_groupoid, is_idempotent_pure, quotient, respects
from .zoo import (
    all_semilattices,
    chain,
    cyclic_group,
    klein_group,
    pair_groupoid,
    pair_groupoid_times_chain,
    semilattice,
    symmetric_inverse_monoid,
)


@dataclass(frozen=True)
class Instance:
    name: str
    S: InverseSemigroupoid


def base_instances() -> list[Instance]:
    out = []
    for n in range(1, 5):
        for i, L in enumerate(all_semilattices(n)):
            out.append(Instance(f"semilattice{n}.{i}", L))
    for n in range(1, 5):
        out.append(Instance(f"Z{n}", cyclic_group(n)))
    out.append(Instance("Klein", klein_group()))
    out.append(Instance("I2", symmetric_inverse_monoid(2)))
    for n in range(1, 4):
        out.append(Instance(f"pair{n}", pair_groupoid(n)))
    out.append(Instance("pair2xL2", pair_groupoid_times_chain(2)))
    return out


def principal_congruences(S: InverseSemigroupoid) -> list[Congruence]:
    """Least congruences identifying one pair with common source and range."""
    seen = set()
    out = []
    for a, b in combinations(range(S.n), 2):
        if S.src[a] != S.src[b] or S.rng[a] != S.rng[b]:
            continue
        R = congruence_closure(S, [(a, b)])
        if R.labels not in seen:
            seen.add(R.labels)
            out.append(R)
    return out


def _add(found: list[Instance], inst: Instance) -> bool:
    for other in found:
        if other.S.n == inst.S.n and other.S.n_vertices == inst.S.n_vertices and is_isomorphic(other.S, inst.S):
            return False
    found.append(inst)
    return True


@lru_cache(maxsize=1)
def corpus() -> tuple[Instance, ...]:
    """Base instances followed by their new quotients, up to isomorphism."""
    found: list[Instance] = []
    bases = base_instances()
    for inst in bases:
        _add(found, inst)
    for inst in bases:
        S = inst.S
        for R in principal_congruences(S):
            if R.n_classes == S.n:
                continue
            try:
                Q, _ = quotient(S, R)
            except SemigroupoidError:
                continue
            _add(found, Instance(f"{inst.name}/{'~'.join(S.names[x] for x in R.classes()[_first_merged(R)])}", Q))
        IG, _ = initial_groupoid(S)
        _add(found, Instance(f"IG({inst.name})", IG))
    return tuple(found)


def _first_merged(R: Congruence) -> int:
    return next(i for i, c in enumerate(R.classes()) if len(c) > 1)


def semilattice_corpus(max_size: int = 10) -> list[Instance]:
    """Semilattices for the ultrafilter comparison: the small ones, chains,
    the subsets of a three-element set, and E(S) of corpus instances with zero."""
    out = [Instance(f"semilattice{n}.{i}", L) for n in range(1, 5) for i, L in enumerate(all_semilattices(n))]
    out += [Instance(f"L{n}", chain(n)) for n in range(5, max_size + 1)]
    out.append(Instance("P(3)", semilattice([format(k, "03b") for k in range(8)], lambda a, b: a & b)))
    return [i for i in out if i.S.n <= max_size]


# ---------------------------------------------------------------- actions


def _orthogonal_action() -> Preaction:
    # E = {0,a,b} with ab = 0 acting globally on L2; only b moves 1
    E = semilattice(["0", "a", "b"], lambda x, y: x if x == y else 0)
    L2 = chain(2)
    theta = [{0: 0}, {0: 0}, {0: 0, 1: 1}]
    return require_preaction(preaction(E, L2, [0, 0], theta, "global"))


def orthogonal_action() -> tuple[Preaction, Congruence]:
    """The action of E = {0,a,b} on L2 and the congruence collapsing {0,b}."""
    p = _orthogonal_action()
    return p, congruence_closure(p.actor, [(0, 2)])


def corpus_actions(limit: int | None = None) -> list[tuple[str, Preaction]]:
    """Standard actions of each corpus instance on regular spaces."""
    out = []
    for inst in corpus():
        S = inst.S
        out.append((f"vertex({inst.name})", canonical_vertex_action(S)))
        out.append((f"munn({inst.name})", munn_action(S, "idempotents")[0]))
        if S.n <= 8:
            out.append((f"wp({inst.name})", wagner_preston(S).action))
    out.append(("orthogonal", _orthogonal_action()))
    return out[:limit] if limit else out


def h1_h2_instances(max_pairs: int = 64) -> list[tuple[str, Preaction, Congruence, Congruence]]:
    """Actions with congruences satisfying both hypotheses of the quotient
    action: R1 idempotent pure on the actor, R2 respected by the action."""
    out = []
    for name, p in corpus_actions():
        S, X = p.actor, p.space
        if sum(len(m) for m in p.maps) > max_pairs:
            continue
        R1s = [Congruence.identity(S.n)] + [R for R in principal_congruences(S) if is_idempotent_pure(S, R)]
        R2s = [Congruence.identity(X.n)]
        if isinstance(X, InverseSemigroupoid):
            R2s += [
                R for R in principal_congruences(X)
                if respects(p, R) and all(
                    p.anchor[x] == p.anchor[y] for x, y in product(range(X.n), repeat=2) if R.related(x, y)
                )
            ]
        for R1, R2 in product(R1s, R2s):
            out.append((name, p, R1, R2))
    p, R1 = orthogonal_action()
    out.append(("orthogonal/{0,b}", p, R1, Congruence.identity(p.space.n)))
    return out
