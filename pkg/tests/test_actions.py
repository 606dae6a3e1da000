from itertools import permutations, product
from math import comb, factorial

import pytest

from semigroupoids.actions import (
    Bundle,
    FiberedPartialBijection,
    canonical_vertex_action,
    compose_fibered,
    extend_to_partial,
    ipi,
    ipi_product_check,
    map_kind_report,
    map_kinds,
    munn_action,
    preaction,
    preaction_violations,
    validate_preaction,
    wagner_preston,
)
from semigroupoids.corpus import corpus, corpus_actions, orthogonal_action
from semigroupoids.errors import VertexMismatch
from semigroupoids.inverse import compatible
from semigroupoids.iso import is_isomorphic
from semigroupoids.zoo import chain, group_with_zero, pair_groupoid_times_chain, symmetric_inverse_monoid

CORPUS = corpus()
IDS = [i.name for i in CORPUS]


def test_fibered_composition():
    f = FiberedPartialBijection(1, frozenset({(0, 2)}), 0)
    g = FiberedPartialBijection(0, frozenset({(2, 0)}), 1)
    assert compose_fibered(g, f) == FiberedPartialBijection(0, frozenset({(0, 0)}), 0)
    assert f.inverse() == g
    with pytest.raises(VertexMismatch):
        compose_fibered(f, f)


def test_ipi_over_a_point_is_i2():
    I = ipi(Bundle(("x", "y"), ("*",), (0, 0)))
    assert I.semigroupoid.n == 7
    assert is_isomorphic(I.semigroupoid, symmetric_inverse_monoid(2))


def test_ipi_of_identity_is_pair_groupoid_with_level():
    I = ipi(Bundle(("x", "y"), ("x", "y"), (0, 1)))
    assert I.semigroupoid.n == 8
    assert is_isomorphic(I.semigroupoid, pair_groupoid_times_chain(2))


@pytest.mark.parametrize("pi", [(0, 0), (0, 1), (0, 0, 1), (0, 1, 1, 1)])
def test_ipi_is_inverse_with_identity_idempotents(pi):
    names = tuple(f"x{i}" for i in range(len(pi)))
    base = tuple(f"v{i}" for i in range(max(pi) + 1))
    assert all(ipi_product_check(Bundle(names, base, pi)).values())


# ---------------------------------------------------------------- maps


def _as_map(p):
    """The action as a map into I(pi) for the anchor bundle."""
    S = p.actor
    I = ipi(Bundle(p.space.names, S.vertex_names, p.anchor))
    return S, I.semigroupoid, [I.index[p.as_fibered(a)] for a in range(S.n)]


def _ipi_size(p) -> int:
    fibers = [sum(1 for v in p.anchor if v == u) for u in range(p.actor.n_vertices)]
    return sum(
        sum(comb(m, k) * comb(n, k) * factorial(k) for k in range(min(m, n) + 1))
        for m, n in product(fibers, repeat=2)
    )


SMALL_ACTIONS = [(n, p) for n, p in corpus_actions() if _ipi_size(p) <= 40]


@pytest.mark.parametrize("name,p", SMALL_ACTIONS, ids=[n for n, _ in SMALL_ACTIONS])
def test_actions_are_wedge_prehomomorphisms(name, p):
    S, T, theta = _as_map(p)
    kinds = map_kinds(S, T, theta)
    assert "wedge_prehomomorphism" in kinds
    for a in S.idempotents:
        assert T.is_idempotent(theta[a])
    for a, b in product(range(S.n), repeat=2):
        if compatible(S, a, b):
            assert compatible(T, theta[a], theta[b])


def test_orthogonal_action_is_global_and_a_homomorphism():
    p, _ = orthogonal_action()
    S, T, theta = _as_map(p)
    assert "homomorphism" in map_kinds(S, T, theta)


@pytest.mark.parametrize("S", [group_with_zero(2), chain(3)], ids=["Z2+0", "L3"])
def test_invertible_vee_maps_with_vee_inverse_are_isomorphisms(S):
    for perm in permutations(range(S.n)):
        inv = [0] * S.n
        for a, b in enumerate(perm):
            inv[b] = a
        if "vee_prehomomorphism" in map_kinds(S, S, perm) and "vee_prehomomorphism" in map_kinds(S, S, inv):
            assert map_kind_report(S, S, perm)["homomorphism"] is None


def test_swap_on_l2_is_wedge_but_not_monotone():
    L2 = chain(2)
    rep = map_kind_report(L2, L2, [1, 0])
    assert map_kinds(L2, L2, [1, 0]) == {"wedge_prehomomorphism"}
    assert rep["i"] is None and rep["ii"] is None and rep["iii"] == ("0", "1")


def test_map_kind_witness_on_collapse():
    L3 = chain(3)
    theta = [0, 0, 0]
    rep = map_kind_report(L3, L3, theta)
    assert rep["homomorphism"] is None and rep["i"] is None


# ---------------------------------------------------------------- preactions


@pytest.mark.parametrize("inst", CORPUS, ids=IDS)
def test_standard_actions_are_global(inst):
    S = inst.S
    assert not preaction_violations(canonical_vertex_action(S), "global")
    act, keep = munn_action(S, "idempotents")
    assert not preaction_violations(act, "global")
    assert [S.names[k] for k in keep] == [S.names[e] for e in S.idempotents]


@pytest.mark.parametrize("inst", CORPUS, ids=IDS)
def test_wagner_preston(inst):
    wp = wagner_preston(inst.S)
    assert all(wp.checks.values())
    assert wp.image.n == inst.S.n


def test_wagner_preston_image_of_i2_has_seven_elements():
    assert wagner_preston(symmetric_inverse_monoid(2)).image.n == 7


def test_bad_theta_is_reported():
    L2 = chain(2)
    p = preaction(L2, L2, [0, 0], [{0: 0, 1: 0}, {0: 0, 1: 1}], "wedge")
    kinds = {ax for ax, _ in preaction_violations(p)}
    assert "injective" in kinds


def test_preaction_report_and_partial_extension():
    p, _ = orthogonal_action()
    rep = validate_preaction(p, "global")
    assert rep["violations"] == [] and rep["nondegenerate"]
    wedge = preaction(p.actor, p.space, p.anchor, [{0: 0}, {}, {0: 0, 1: 1}], "wedge")
    assert not preaction_violations(wedge, "wedge")
    assert any(ax == "monotone" for ax, _ in preaction_violations(wedge, "partial"))
    assert not preaction_violations(extend_to_partial(wedge), "partial")
