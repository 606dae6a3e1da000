from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from semigroupoids.actions import canonical_vertex_action, preaction_violations
from semigroupoids.corpus import corpus, h1_h2_instances, orthogonal_action, principal_congruences
from semigroupoids.errors import AxiomFailure, HypothesisViolated, NotGraphable
from semigroupoids.inverse import classify
from semigroupoids.iso import is_isomorphic
from semigroupoids.quotients import (
    Congruence,
    Preorder,
    canonical_preorder,
    congruence_closure,
    congruence_violations,
    factor_through,
    germ_congruence,
    idempotent_pure_report,
    initial_groupoid,
    phi_isomorphism,
    quotient,
    quotient_action,
    validate_preorder,
)
from semigroupoids.semidirect import underlying_groupoid
from semigroupoids.zoo import chain, cyclic_group, klein_group, pair_groupoid, symmetric_inverse_monoid

CORPUS = corpus()
IDS = [i.name for i in CORPUS]
I2 = symmetric_inverse_monoid(2)


def _pairs(R: Congruence) -> set[tuple[int, int]]:
    n = len(R.labels)
    return {(a, b) for a, b in product(range(n), repeat=2) if R.related(a, b)}


# ---------------------------------------------------------------- congruences


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, I2.n - 1), st.integers(0, I2.n - 1)), max_size=3))
def test_closure_matches_fixpoint_oracle(seeds):
    R = congruence_closure(I2, seeds)
    assert _pairs(R) == oracles.congruence_by_fixpoint(I2, seeds)
    assert not congruence_violations(I2, R)


@pytest.mark.parametrize("inst", CORPUS, ids=IDS)
def test_principal_congruences_match_oracle(inst):
    S = inst.S
    for R in principal_congruences(S):
        seeds = [(a, b) for a, b in _pairs(R) if a < b]
        assert _pairs(R) == oracles.congruence_by_fixpoint(S, seeds)


def test_labels_numbered_by_least_member():
    R = congruence_closure(chain(3), [(1, 2)])
    assert R.labels == (0, 1, 1)
    assert R.classes() == [[0], [1, 2]]


def test_graphed_seed_must_share_endpoints():
    G = pair_groupoid(2)
    a, b = 0, 1
    assert (G.src[a], G.rng[a]) != (G.src[b], G.rng[b])
    with pytest.raises(NotGraphable):
        congruence_closure(G, [(a, b)])


# ---------------------------------------------------------------- purity


@pytest.mark.parametrize("inst", CORPUS, ids=IDS)
def test_purity_descriptions_agree(inst):
    S = inst.S
    for R in [Congruence.identity(S.n), *principal_congruences(S)]:
        rep = idempotent_pure_report(S, R)
        assert len(set(rep.values())) == 1


def test_collapsing_an_idempotent_with_a_non_idempotent_is_impure():
    Z2 = cyclic_group(2)
    R = congruence_closure(Z2, [(0, 1)])
    assert not any(idempotent_pure_report(Z2, R).values())


# ---------------------------------------------------------------- germs


@pytest.mark.parametrize("S", [cyclic_group(1), cyclic_group(2), cyclic_group(3), klein_group()], ids=["Z1", "Z2", "Z3", "K4"])
def test_initial_groupoid_of_group_is_itself(S):
    Q, pi = initial_groupoid(S)
    assert Q.n == S.n and pi.is_isomorphism()


def test_initial_groupoid_of_i2_is_trivial():
    Q, _ = initial_groupoid(I2)
    assert Q.n == 1 and classify(Q) == "group"


@pytest.mark.parametrize("inst", CORPUS, ids=IDS)
def test_initial_groupoid_is_groupoid_and_universal(inst):
    S = inst.S
    Q, pi = initial_groupoid(S)
    assert classify(Q) in ("group", "groupoid")
    assert factor_through(pi, pi).is_isomorphism()


def test_germ_relation_on_l3_with_bottom_below_all():
    L3 = chain(3)
    z = L3.index("0")
    P = Preorder(frozenset({(x, x) for x in range(3)} | {(z, y) for y in range(3)}))
    assert validate_preorder(L3, P)["valid"]
    assert germ_congruence(L3, P).n_classes == 1


def test_invalid_preorder_rejected():
    L3 = chain(3)
    P = Preorder(frozenset({(x, x) for x in range(3)} | {(2, 0)}))
    rep = validate_preorder(L3, P)
    assert not rep["valid"]
    assert any(kind == "below natural order" for kind, _ in rep["violations"])
    with pytest.raises(AxiomFailure):
        germ_congruence(L3, P)


def test_canonical_preorder_germs_of_underlying_groupoid_are_trivial():
    U = underlying_groupoid(I2)
    R = germ_congruence(U, canonical_preorder(U))
    assert R == Congruence.identity(U.n)


# ---------------------------------------------------------------- quotient actions


def test_orthogonal_quotient_is_wedge_but_not_partial():
    p, R1 = orthogonal_action()
    assert R1.n_classes == 2
    act, SQ, TQ = quotient_action(p, R1, Congruence.identity(p.space.n))
    assert SQ.n == 2 and TQ.n == 2
    assert not preaction_violations(act, "wedge")
    assert any(ax == "monotone" for ax, _ in preaction_violations(act, "partial"))


def test_impure_r1_is_refused():
    Z2 = cyclic_group(2)
    bad = congruence_closure(Z2, [(0, 1)])
    with pytest.raises(HypothesisViolated):
        quotient_action(canonical_vertex_action(Z2), bad, Congruence.identity(1))


H12 = h1_h2_instances()


def test_h1_h2_instances_are_plentiful():
    assert len(H12) >= 100


@pytest.mark.parametrize("name,p,R1,R2", H12[::7], ids=[h[0] for h in H12[::7]])
def test_phi_is_isomorphism(name, p, R1, R2):
    rep = phi_isomorphism(p, R1, R2)
    assert rep["congruence"] and rep["isomorphism"]


def test_phi_on_all_instances():
    assert all(phi_isomorphism(p, R1, R2)["isomorphism"] for _, p, R1, R2 in H12)


def test_trivial_congruence_gives_isomorphic_quotient():
    Q, pi = quotient(I2, congruence_closure(I2, []))
    assert is_isomorphic(Q, I2) and pi.is_isomorphism()
