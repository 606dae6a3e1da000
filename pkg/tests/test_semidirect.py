from itertools import product

import pytest

from semigroupoids.actions import preaction
from semigroupoids.core import restrict
from semigroupoids.corpus import corpus, corpus_actions
from semigroupoids.errors import NotAssociative
from semigroupoids.inverse import InverseSemigroupoid, classify
from semigroupoids.semidirect import (
    Multiplier,
    eta,
    inverse_iff_check,
    lr_associativity_evidence,
    semidirect_product,
    translation_multiplier,
    underlying_groupoid,
    validate_multiplier,
)
from semigroupoids.zoo import (
    chain,
    cyclic_group,
    group_with_unit,
    null_extension,
    null_extension_action,
    symmetric_inverse_monoid,
)

CORPUS = corpus()
IDS = [i.name for i in CORPUS]
ACTIONS = corpus_actions()


def _pair_product(p, q, r):
    """(a,x)(b,y) = (ab, theta_{b*}(x theta_b(y))) computed from the action directly."""
    S, X = p.actor, p.space
    (a, x), (b, y) = q, r
    ab = S.table[a][b]
    z = p.maps[b].get(y)
    if ab is None or z is None:
        return None
    w = X.table[x][z]
    if w is None:
        return None
    v = p.maps[S.inv[b]].get(w)
    return None if v is None else (ab, v)


def _associativity_failures(p):
    S = p.actor
    pairs = [(a, x) for a in range(S.n) for x in sorted(p.maps[a])]
    bad = []
    for q, r, s in product(pairs, repeat=3):
        qr, rs = _pair_product(p, q, r), _pair_product(p, r, s)
        left = None if qr is None else _pair_product(p, qr, s)
        right = None if rs is None else _pair_product(p, q, rs)
        conds = (qr is not None and rs is not None, left is not None, right is not None)
        if len(set(conds)) > 1 or left != right:
            bad.append((q, r, s))
    return bad


def test_null_extension_action_is_not_associative():
    p = null_extension_action()
    with pytest.raises(NotAssociative) as exc:
        semidirect_product(p, max_violations=100)
    err = exc.value
    assert err.witness == ("(x,t)", "(g,u)", "(x,t)")
    assert (err.left, err.right) == ("(g,u)", "(g,0)")
    oracle = _associativity_failures(p)
    assert len(err.witnesses) == len(oracle) == 2


def test_null_extension_restricted_to_ideal_is_associative():
    p = null_extension_action()
    T = null_extension()
    keep = [T.index(a) for a in ("0", "u", "v")]
    TI, _ = restrict(T, keep)
    pos = {x: i for i, x in enumerate(keep)}
    theta = [{pos[x]: pos[y] for x, y in m.items() if x in pos} for m in p.maps]
    q = preaction(p.actor, TI, [0] * 3, theta, "global")
    sp = semidirect_product(q)
    assert not isinstance(sp.semigroupoid, InverseSemigroupoid)
    assert not inverse_iff_check(sp)["space_inverse"]
    assert lr_associativity_evidence(TI) == "direct_only"
    assert not _associativity_failures(q)


@pytest.mark.parametrize("name,p", ACTIONS, ids=[n for n, _ in ACTIONS])
def test_corpus_actions_give_associative_inverse_products(name, p):
    sp = semidirect_product(p)
    assert isinstance(sp.semigroupoid, InverseSemigroupoid)
    rep = inverse_iff_check(sp)
    assert rep["agree"] and rep["inverse_formula"]


@pytest.mark.parametrize("name,p", ACTIONS[:12], ids=[n for n, _ in ACTIONS[:12]])
def test_product_table_matches_direct_formula(name, p):
    sp = semidirect_product(p)
    G = sp.semigroupoid
    for i, j in product(range(G.n), repeat=2):
        expect = _pair_product(p, sp.pairs[i], sp.pairs[j])
        got = G.table[i][j]
        assert (None if got is None else sp.pairs[got]) == expect


@pytest.mark.parametrize("inst", CORPUS, ids=IDS)
def test_eta_is_isomorphism(inst):
    h, sp = eta(inst.S)
    assert h.is_isomorphism()
    assert sp.semigroupoid.n_vertices == inst.S.n_vertices


# ---------------------------------------------------------------- multipliers


@pytest.mark.parametrize("inst", CORPUS, ids=IDS)
def test_translations_are_multipliers(inst):
    S = inst.S
    for x in range(S.n):
        assert validate_multiplier(S, translation_multiplier(S, x))["valid"]


def test_broken_multiplier_reported():
    S = chain(2)
    rep = validate_multiplier(S, Multiplier({0: 0, 1: 0}, {0: 0, 1: 1}))
    assert not rep["valid"]


def test_associativity_evidence_labels():
    assert lr_associativity_evidence(chain(2)) == "idempotent"
    assert lr_associativity_evidence(cyclic_group(2)) == "idempotent"
    assert lr_associativity_evidence(null_extension()) == "direct_only"


# ---------------------------------------------------------------- underlying groupoid


def test_underlying_groupoid_of_i2():
    U = underlying_groupoid(symmetric_inverse_monoid(2))
    assert U.n == 7 and U.n_vertices == 4
    assert len(U.defined_pairs) == 13
    assert classify(U) == "groupoid"


@pytest.mark.parametrize("inst", CORPUS, ids=IDS)
def test_underlying_groupoid_keeps_inverses(inst):
    S = inst.S
    U = underlying_groupoid(S)
    assert classify(U) in ("groupoid", "group")
    assert U.inv == S.inv
    for a, b, ab in U.defined_pairs:
        assert S.table[a][b] == ab


def test_group_with_unit_actor():
    S = group_with_unit()
    assert S.n_vertices == 1 and classify(S) == "inverse_semigroup"
