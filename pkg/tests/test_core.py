from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from semigroupoids.core import (
    GraphingChoice,
    Homomorphism,
    PartialMagma,
    categorical_witness,
    enumerate_graphings,
    exel_violations,
    finest_choice,
    graph,
    is_categorical,
    is_closed,
    is_ideal,
    is_left_ideal,
    is_right_ideal,
    partial_magma,
    require_categorical,
    restrict,
    sinks,
    sources,
    structural_predicates,
    validate_exel,
    validate_graphed,
)
from semigroupoids.errors import (
    CapExceeded,
    GraphViolation,
    InvalidChoice,
    MalformedTable,
    NotCategorical,
    NotExelSemigroupoid,
    UnresolvedName,
)
from semigroupoids.zoo import (
    exel_counterexamples,
    non_associative_example,
    non_categorical_example,
    pair_groupoid,
    strict_order,
    strict_order_graphed,
    symmetric_inverse_monoid,
    two_copies_glued,
    two_idempotents,
)


@st.composite
def partial_tables(draw, max_n=3):
    n = draw(st.integers(1, max_n))
    cells = draw(st.lists(st.one_of(st.none(), st.integers(0, n - 1)), min_size=n * n, max_size=n * n))
    names = tuple(f"x{i}" for i in range(n))
    return PartialMagma(names, tuple(tuple(cells[i * n:(i + 1) * n]) for i in range(n)))


# ---------------------------------------------------------------- axioms


@pytest.mark.parametrize("key", sorted(exel_counterexamples()))
def test_counterexamples_name_the_violated_conditions(key):
    m, held, failed = exel_counterexamples()[key]
    with pytest.raises(NotExelSemigroupoid) as exc:
        validate_exel(m)
    at_fgh = [v for v in exc.value.violations if v.triple == ("f", "g", "h")]
    assert len(at_fgh) == 1
    assert at_fgh[0].held == held
    assert at_fgh[0].failed == failed
    assert oracles.exel_labels(m.table, 0, 1, 2) == (held, failed)


def test_five_tables_have_distinct_mixed_patterns():
    patterns = {(h, f) for _, h, f in exel_counterexamples().values()}
    assert len(patterns) == 5
    assert all(h and f for h, f in patterns)


def test_non_associative_example_reports_unequal_bracketings():
    bad = exel_violations(non_associative_example())
    assert bad
    assert all(hasattr(v, "lhs") for v in bad)
    assert any(v.triple == ("a", "a", "a") for v in bad)


@settings(max_examples=200, deadline=None)
@given(partial_tables())
def test_validation_agrees_with_brute_force(m):
    assert (not exel_violations(m)) == oracles.is_exel(m.table)


def test_violation_limit_is_respected():
    m = partial_magma(["a", "b"], [("a", "a", "b"), ("a", "b", "b"), ("b", "b", "a"), ("b", "a", "a")])
    assert len(exel_violations(m, limit=2)) == 2


def test_malformed_tables():
    with pytest.raises(MalformedTable):
        PartialMagma(("a", "a"), ((None, None), (None, None)))
    with pytest.raises(MalformedTable):
        PartialMagma(("a",), ((3,),))
    with pytest.raises(UnresolvedName):
        partial_magma(["a", "b"], [("a", "b", "c")])


# ---------------------------------------------------------------- categorical


def test_non_categorical_witness():
    S = validate_exel(non_categorical_example())
    a, b, common, a_only, b_only = categorical_witness(S)
    nm = S.names
    assert (nm[a], nm[b], nm[common]) == ("a", "b", "x")
    assert [nm[x] for x in a_only] == ["a", "y"]
    assert [nm[x] for x in b_only] == ["b", "z"]
    ra = {nm[x] for x in S.right_sets[a]}
    rb = {nm[x] for x in S.right_sets[b]}
    assert {"x", "y"} <= ra and {"x", "z"} <= rb
    with pytest.raises(NotCategorical):
        require_categorical(S)
    with pytest.raises(NotCategorical):
        graph(S)


def test_left_and_right_criteria_agree_on_small_tables():
    for S in [strict_order(3), symmetric_inverse_monoid(2), non_categorical_example(), *two_idempotents()]:
        S = validate_exel(S)
        lefts = set(S.left_sets)
        rights = set(S.right_sets)
        left_ok = all(A == B or not (A & B) for A, B in product(lefts, lefts))
        right_ok = all(A == B or not (A & B) for A, B in product(rights, rights))
        assert left_ok == right_ok == is_categorical(S)


# ---------------------------------------------------------------- graphings


@pytest.mark.parametrize(
    "S",
    [
        strict_order(3),
        strict_order(4),
        two_idempotents()[0],
        two_idempotents()[1],
        partial_magma(["a", "b", "c"], []),
        symmetric_inverse_monoid(2),
        pair_groupoid(2),
    ],
)
def test_graphing_count_matches_partition_oracle(S):
    S = validate_exel(S)
    assert len(enumerate_graphings(S, cap=100)) == oracles.graphings_by_partitions(S)


def test_graphing_cap_counts_free_symbols():
    S = validate_exel(partial_magma(["a", "b", "c"], []))
    assert len(enumerate_graphings(S, cap=6)) == 25
    with pytest.raises(CapExceeded):
        enumerate_graphings(S, cap=5)
    with pytest.raises(CapExceeded):
        enumerate_graphings(validate_exel(partial_magma(list("abcde"), [])))


def test_every_enumerated_graphing_is_valid():
    S = validate_exel(strict_order(3))
    for ch in enumerate_graphings(S):
        G = graph(S, ch)
        validate_graphed(S, G.vertex_names, G.src, G.rng)


def test_finest_choice_is_default_and_invalid_choice_rejected():
    S = validate_exel(partial_magma(["a", "b"], []))
    assert graph(S).n_vertices == 4
    assert finest_choice(S).r0 == (frozenset({0}), frozenset({1}))
    with pytest.raises(InvalidChoice):
        graph(S, GraphingChoice((frozenset({0}),), (frozenset({0}), frozenset({1}))))


def test_strict_order_has_source_and_sink():
    G = strict_order_graphed(3)
    assert [G.vertex_names[v] for v in sources(G)] == ["0"]
    assert [G.vertex_names[v] for v in sinks(G)] == ["2"]


def test_gluing_changes_the_graph_but_not_the_table():
    S1, S2 = two_copies_glued()
    assert S1.table == S2.table
    assert S1.n_vertices == S2.n_vertices + 1


def test_graph_violation_detected():
    S = validate_exel(strict_order(3))
    with pytest.raises(GraphViolation):
        validate_graphed(S, ["u"], [0, 0, 0], [0, 0, 0])


# ---------------------------------------------------------------- maps and subsets


def test_image_of_homomorphism_need_not_be_closed():
    small, big = two_idempotents()
    phi = Homomorphism(small, big, (0, 1))
    assert phi.is_homomorphism() and phi.is_injective()
    assert not is_closed(big, phi.image())
    with pytest.raises(MalformedTable):
        restrict(big, phi.image())


def test_preimage_of_subsemigroupoid_is_subsemigroupoid():
    small, big = two_idempotents()
    phi = Homomorphism(small, big, (0, 1))
    for sub in product([0, 1], repeat=big.n):
        chosen = {i for i, c in enumerate(sub) if c}
        if is_closed(big, chosen):
            pre = {a for a in range(small.n) if phi(a) in chosen}
            assert is_closed(small, pre)


def test_ideals_in_strict_order():
    S = validate_exel(strict_order(3))
    i20 = {S.index("20")}
    assert is_ideal(S, i20)
    assert is_left_ideal(S, {S.index("10"), S.index("20")})
    assert is_right_ideal(S, {S.index("10")})
    assert not is_left_ideal(S, {S.index("10")})


def test_structural_predicates_on_strict_order():
    preds = structural_predicates(strict_order_graphed(3))
    assert preds["categorical"] and not preds["idempotent"]
    assert preds["sources"] == ["0"] and preds["sinks"] == ["2"]
