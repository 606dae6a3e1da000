"""The seven acceptance criteria, each checked exactly and reported as one
PASS/FAIL line. Run with ``pytest tests/test_acceptance.py`` (lines appear in
the terminal summary) or ``python tests/test_acceptance.py``."""
from itertools import product

import pytest

import oracles
from conftest import ACCEPTANCE_LINES
from semigroupoids.actions import preaction_violations, wagner_preston
from semigroupoids.core import (
    Homomorphism,
    categorical_witness,
    enumerate_graphings,
    is_categorical,
    is_closed,
    validate_exel,
)
from semigroupoids.corpus import corpus, corpus_actions, h1_h2_instances, orthogonal_action, semilattice_corpus
from semigroupoids.duality import (
    SigmaMorphism,
    interpolator,
    kappa,
    kb,
    kb_interpolator_formula,
    p_functor,
    sigma,
    sigma_morphism_failures,
    ultrafilters,
    ultrafilters_by_enumeration,
    zeta,
)
from semigroupoids.errors import NotAssociative, NotExelSemigroupoid
from semigroupoids.inverse import as_semigroupoid, classify, detect_inverse, idempotents_commute, order_axioms_check
from semigroupoids.iso import is_isomorphic
from semigroupoids.quotients import Congruence, initial_groupoid, phi_isomorphism, quotient_action
from semigroupoids.semidirect import eta, semidirect_product
from semigroupoids.zoo import (
    chain,
    exel_counterexamples,
    non_categorical_example,
    null_extension_action,
    pair_groupoid,
    symmetric_inverse_monoid,
    two_idempotents,
)

CORPUS = corpus()


def _golden_counterexamples():
    bad = []
    tables = exel_counterexamples()
    if len(tables) != 5:
        bad.append(f"{len(tables)} tables")
    for key, (m, held, failed) in tables.items():
        try:
            validate_exel(m)
            bad.append(f"{key} accepted")
            continue
        except NotExelSemigroupoid as exc:
            hits = [v for v in exc.violations if v.triple == ("f", "g", "h")]
        if len(hits) != 1 or (hits[0].held, hits[0].failed) != (held, failed):
            bad.append(f"{key} mislabelled")
    S = validate_exel(non_categorical_example())
    w = categorical_witness(S)
    nm = S.names
    if w is None or (nm[w[0]], nm[w[1]], nm[w[2]]) != ("a", "b", "x"):
        bad.append("non-categorical witness")
    else:
        ra = {nm[x] for x in S.right_sets[w[0]]}
        rb = {nm[x] for x in S.right_sets[w[1]]}
        if not ({"x", "y"} <= ra and {"x", "z"} <= rb and "z" not in ra and "y" not in rb):
            bad.append("non-categorical right sets")
    small, big = two_idempotents()
    phi = Homomorphism(small, big, (0, 1))
    if not (phi.is_homomorphism() and not is_closed(big, phi.image())):
        bad.append("image example")
    return not bad, "5 tables labelled, witness a,b share x, image {e,f} not closed" if not bad else "; ".join(bad)


def _theorem_suite():
    bad = []
    for inst in CORPUS:
        S = inst.S
        ok = (
            is_categorical(S)
            and idempotents_commute(S) is None
            and len(enumerate_graphings(as_semigroupoid(S))) == 1
            and all(v is None for v in order_axioms_check(S).values())
        )
        if not ok:
            bad.append(inst.name)
    return not bad, f"{len(CORPUS)} instances" if not bad else "failed on " + ",".join(bad)


def _wagner_preston():
    bad = [i.name for i in CORPUS if not all(wagner_preston(i.S).checks.values())]
    n = wagner_preston(symmetric_inverse_monoid(2)).image.n
    if n != 7:
        bad.append(f"|image(I2)|={n}")
    return not bad, f"{len(CORPUS)} instances, |image(I2)|=7" if not bad else ", ".join(bad)


def _semidirect():
    bad = []
    try:
        semidirect_product(null_extension_action())
        bad.append("null extension associative")
    except NotAssociative as exc:
        if (exc.left, exc.right) != ("(g,u)", "(g,0)"):
            bad.append(f"witness {exc.left} vs {exc.right}")
    actions = corpus_actions()
    for name, p in actions:
        try:
            semidirect_product(p)
        except NotAssociative:
            bad.append(name)
    for inst in CORPUS:
        h, _ = eta(inst.S)
        if not h.is_isomorphism():
            bad.append(f"eta {inst.name}")
    detail = f"witness (g,u) vs (g,0); {len(actions)} actions associative; eta iso on {len(CORPUS)}"
    return not bad, detail if not bad else ", ".join(bad)


def _quotients():
    bad = []
    groups = [i for i in CORPUS if classify(i.S) == "group"]
    for inst in groups:
        Q, pi = initial_groupoid(inst.S)
        if not pi.is_isomorphism():
            bad.append(f"IG({inst.name})")
    if initial_groupoid(symmetric_inverse_monoid(2))[0].n != 1:
        bad.append("IG(I2)")
    p, R1 = orthogonal_action()
    act, _, _ = quotient_action(p, R1, Congruence.identity(p.space.n))
    if preaction_violations(act, "wedge") or not any(ax == "monotone" for ax, _ in preaction_violations(act, "partial")):
        bad.append("orthogonal quotient action")
    cases = h1_h2_instances()
    for name, p, R1, R2 in cases:
        if not phi_isomorphism(p, R1, R2)["isomorphism"]:
            bad.append(f"phi {name}")
    detail = f"IG on {len(groups)} groups and I2; wedge not partial; phi iso on {len(cases)} instances"
    return not bad, detail if not bad else ", ".join(bad[:5])


def _zero_or_equal(S):
    return sigma(S, [(x, y) for x, y in product(range(S.n), repeat=2) if x == S.zero or x == y])


def _duality():
    bad = []
    I2, PG2 = symmetric_inverse_monoid(2), pair_groupoid(2)
    K = kb(I2)
    if len(K.sets) != 8 or not is_isomorphic(p_functor(K.sigma).semigroupoid, I2):
        bad.append("KB(I2)")
    K = kb(PG2)
    if len(K.sets) != 7 or not is_isomorphic(K.sigma.S, I2) or not is_isomorphic(p_functor(K.sigma).semigroupoid, PG2):
        bad.append("KB(PG2)")
    checked = 0
    for inst in CORPUS:
        K = kb(inst.S)
        if len(K.sets) > 4096:
            continue
        checked += 1
        if not (zeta(inst.S)["iso"] and kappa(K.sigma)["iso"]):
            bad.append(f"roundtrip {inst.name}")
        X = K.sigma
        for B, A in product(range(X.S.n), repeat=2):
            if X.S.leq(B, A) and interpolator(X, B, A) != kb_interpolator_formula(K, B, A):
                bad.append(f"interpolator {inst.name}")
                break
    L3, L2 = _zero_or_equal(chain(3)), _zero_or_equal(chain(2))
    if sigma_morphism_failures(SigmaMorphism(L3, L2, (0, 1, 1))) != {"iv"}:
        bad.append("theta")
    if sigma_morphism_failures(SigmaMorphism(L3, L2, (0, 0, 1))) != {"vi"}:
        bad.append("eta")
    detail = f"KB sizes 8 and 7; zeta, kappa, interpolator on {checked} instances; morphisms fail iv and vi"
    return not bad, detail if not bad else ", ".join(bad)


def _oracles():
    bad = []
    lattices = [i for i in semilattice_corpus() if i.S.n <= 10]
    for inst in lattices:
        if set(ultrafilters(inst.S)) != set(ultrafilters_by_enumeration(inst.S)):
            bad.append(inst.name)
    for inst in CORPUS:
        S = inst.S
        found = oracles.inverses(S.table)
        D = detect_inverse(as_semigroupoid(S))
        if any(len(f) != 1 for f in found) or tuple(f[0] for f in found) != D.inv:
            bad.append(f"inverse {inst.name}")
    detail = f"{len(lattices)} semilattices, {len(CORPUS)} inverse tables"
    return not bad, detail if not bad else ", ".join(bad)


CRITERIA = [
    (1, "golden counterexamples", _golden_counterexamples),
    (2, "theorem suite over corpus", _theorem_suite),
    (3, "Wagner-Preston", _wagner_preston),
    (4, "semidirect product", _semidirect),
    (5, "quotients and germs", _quotients),
    (6, "duality roundtrip", _duality),
    (7, "oracle equivalence", _oracles),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check):
    ok, detail = check()
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


if __name__ == "__main__":
    for number, title, check in CRITERIA:
        ok, detail = check()
        print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})")
