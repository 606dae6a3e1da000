"""Command-line front end: ``sgpd COMMAND FILE.sgpd [options]``.

Exit status is 0 when every check passes, 1 when a violation is found and
2 for unreadable or malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .actions import validate_preaction, wagner_preston
from .core import (
    categorical_witness,
    enumerate_graphings,
    exel_violations,
    graph,
    graph_violations,
    structural_predicates,
    validate_exel,
)
from .dsl import (
    ActionDecl,
    CongruenceDecl,
    DSLSyntaxError,
    GraphDecl,
    MapDecl,
    OrderDecl,
    SemigroupoidDecl,
    load,
)
from .duality import generator, kappa, kb, natural_sigma, p_functor, ultrafilters, validate_sigma, zeta
from .errors import (
    CapExceeded,
    DuplicateDefinition,
    NotAssociative,
    SemigroupoidError,
    UnresolvedName,
)
from .inverse import classify, order_axioms_check
from .iso import find_isomorphism
from .model import Model
from .quotients import (
    congruence_violations,
    germ_congruence,
    idempotent_pure_report,
    initial_groupoid,
    preorder_violations,
    quotient,
    quotient_table,
)
from .semidirect import semidirect_product, underlying_groupoid

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class Report:
    """Collects one entry per checked object; ``ok`` is the conjunction."""

    def __init__(self, command: str):
        self.command = command
        self.entries: list[dict] = []

    def add(self, name: str, ok: bool, text: str, **data):
        self.entries.append({"name": name, "ok": ok, "text": text, **data})

    @property
    def ok(self) -> bool:
        return all(e["ok"] for e in self.entries)

    def as_json(self) -> str:
        body = {
            "command": self.command,
            "ok": self.ok,
            "results": [{k: v for k, v in e.items() if k != "text"} for e in self.entries],
        }
        return json.dumps(body, indent=2, sort_keys=True)

    def as_text(self) -> str:
        return "\n".join(f"{e['name']}: {e['text']}" for e in self.entries)


def _targets(model: Model) -> list[str]:
    """Graph blocks, plus semigroupoid blocks no graph is declared on."""
    doc = model.doc
    graphed = {d.on for d in doc.of_type(GraphDecl)}
    return [
        d.name
        for d in doc.decls
        if isinstance(d, GraphDecl) or (isinstance(d, SemigroupoidDecl) and d.name not in graphed)
    ]


def _inverse_targets(model: Model, rep: Report) -> list:
    out = []
    for name in _targets(model):
        try:
            out.append((name, model.inverse(name)))
        except SemigroupoidError as exc:
            rep.add(name, False, f"not an inverse semigroupoid ({exc})", error=str(exc))
    return out


def _names(S, idx) -> list[str]:
    return [S.names[i] for i in idx]


# ---------------------------------------------------------------- commands


def cmd_validate(model: Model, args, rep: Report):
    limit = args.max_violations
    for d in model.doc.decls:
        try:
            if isinstance(d, SemigroupoidDecl):
                bad = [str(v) for v in exel_violations(model.magma(d.name), limit=limit)]
            elif isinstance(d, GraphDecl):
                S = validate_exel(model.magma(d.on))
                vi = {v: i for i, v in enumerate(d.vertices)}
                s, r = dict(d.s), dict(d.r)
                bad = [f"{a} has no source or range" for a in S.names if a not in s or a not in r]
                if not bad:
                    bad = graph_violations(
                        S, [vi[s[a]] for a in S.names], [vi[r[a]] for a in S.names], len(vi)
                    )[:limit]
            elif isinstance(d, MapDecl):
                bad = model.homomorphism(d.name).violations()[:limit]
            elif isinstance(d, ActionDecl):
                bad = [f"{ax}: {w}" for ax, w in validate_preaction(model.action(d.name))["violations"]]
            elif isinstance(d, CongruenceDecl):
                S, R = model.congruence(d.name)
                bad = congruence_violations(S, R)[:limit]
            else:
                S, P = model.order(d.name)
                bad = [f"{ax}: {w}" for ax, w in preorder_violations(S, P)][:limit]
        except (UnresolvedName, DuplicateDefinition):
            raise
        except SemigroupoidError as exc:
            bad = [str(exc)]
        text = "ok" if not bad else f"{len(bad)} violation(s)\n  " + "\n  ".join(bad)
        rep.add(d.name, not bad, text, violations=bad)


def cmd_analyze(model: Model, args, rep: Report):
    for name in _targets(model):
        try:
            S = model.best(name)
        except SemigroupoidError as exc:
            rep.add(name, False, f"not a semigroupoid ({exc})", error=str(exc))
            continue
        data = structural_predicates(S)
        w = categorical_witness(S)
        if w is not None:
            a, b, common, a_only, b_only = w
            nm = S.names
            data["categorical_witness"] = {
                "a": nm[a], "b": nm[b], "common": nm[common],
                "a_only": _names(S, a_only), "b_only": _names(S, b_only),
            }
        lines = [", ".join(f"{k}={v}" for k, v in data.items() if isinstance(v, bool))]
        if w is not None:
            cw = data["categorical_witness"]
            lines.append(f"right sets of {cw['a']} and {cw['b']} share {cw['common']} but differ")
        ok = data["categorical"]
        if model.is_inverse(name):
            G = model.inverse(name)
            data["class"] = classify(G)
            data["idempotents"] = _names(G, G.idempotents)
            data["vertices"] = list(G.vertex_names)
            data["order"] = [
                [G.names[a], G.names[b]] for a in range(G.n) for b in range(G.n) if a != b and G.leq(a, b)
            ]
            axioms = order_axioms_check(G)
            data["order_axioms"] = {k: v is None for k, v in axioms.items()}
            ok = ok and all(data["order_axioms"].values())
            lines.append(f"class={data['class']}, idempotents={' '.join(data['idempotents'])}")
            lines.append("order: " + (", ".join(f"{a}<={b}" for a, b in data["order"]) or "trivial"))
        rep.add(name, ok, "\n  ".join(lines), **data)


def cmd_graphings(model: Model, args, rep: Report):
    for d in model.doc.of_type(SemigroupoidDecl):
        try:
            S = validate_exel(model.magma(d.name))
            choices = enumerate_graphings(S, cap=args.cap_graphings)
        except CapExceeded:
            raise
        except SemigroupoidError as exc:
            rep.add(d.name, False, str(exc), error=str(exc))
            continue
        found = []
        for ch in choices:
            G = graph(S, ch)
            found.append(
                {
                    "vertices": list(G.vertex_names),
                    "s": {S.names[a]: G.vertex_names[G.src[a]] for a in range(S.n)},
                    "r": {S.names[a]: G.vertex_names[G.rng[a]] for a in range(S.n)},
                }
            )
        text = f"{len(found)} graphing(s)" + "".join(
            f"\n  vertices: {' '.join(g['vertices'])}" for g in found
        )
        rep.add(d.name, True, text, count=len(found), graphings=found)


def cmd_wagner_preston(model: Model, args, rep: Report):
    for name, S in _inverse_targets(model, rep):
        wp = wagner_preston(S)
        ok = all(wp.checks.values())
        checks = ", ".join(f"{k}={v}" for k, v in wp.checks.items())
        rep.add(name, ok, f"image has {wp.image.n} elements; {checks}", size=wp.image.n, checks=wp.checks)


def cmd_semidirect(model: Model, args, rep: Report):
    for d in model.doc.of_type(ActionDecl):
        try:
            sp = semidirect_product(model.action(d.name), max_violations=args.max_violations)
        except NotAssociative as exc:
            text = f"NotAssociative: triple ({','.join(exc.witness)}): left {exc.left}, right {exc.right}"
            rep.add(d.name, False, text, witness=list(exc.witness), left=exc.left, right=exc.right,
                    count=len(exc.witnesses))
            continue
        P = sp.semigroupoid
        kind = type(P).__name__
        verts = list(getattr(P, "vertex_names", ()))
        rep.add(d.name, True, f"{P.n} pairs, {kind}" + (f", vertices {' '.join(verts)}" if verts else ""),
                size=P.n, kind=kind, elements=list(P.names), vertices=verts)


def cmd_quotient(model: Model, args, rep: Report):
    for d in model.doc.of_type(CongruenceDecl):
        try:
            S, R = model.congruence(d.name)
            if model.is_inverse(d.on):
                Q, _ = quotient(S, R)
                pure = idempotent_pure_report(S, R)
            else:
                bad = congruence_violations(S, R)
                if bad:
                    raise SemigroupoidError(bad[0])
                Q, _ = quotient_table(S, R)
                pure = None
        except SemigroupoidError as exc:
            rep.add(d.name, False, str(exc), error=str(exc))
            continue
        classes = [[S.names[x] for x in c] for c in R.classes()]
        text = f"{Q.n} classes: " + " ".join("{" + ",".join(c) + "}" for c in classes)
        if pure is not None:
            text += f"; idempotent pure={all(pure.values())}"
        rep.add(d.name, True, text, size=Q.n, classes=classes, idempotent_pure=pure)


def cmd_germ(model: Model, args, rep: Report):
    orders = model.doc.of_type(OrderDecl)
    if orders:
        for d in orders:
            try:
                S, P = model.order(d.name)
                Q, _ = quotient(S, germ_congruence(S, P))
            except SemigroupoidError as exc:
                rep.add(d.name, False, str(exc), error=str(exc))
                continue
            rep.add(d.name, True, f"{Q.n} germs: {' '.join(Q.names)}", size=Q.n, elements=list(Q.names))
        return
    for name, S in _inverse_targets(model, rep):
        Q, _ = initial_groupoid(S)
        text = f"initial groupoid has {Q.n} elements: {' '.join(Q.names)} ({classify(Q)})"
        rep.add(name, True, text, size=Q.n, elements=list(Q.names), kind=classify(Q))


def cmd_underlying(model: Model, args, rep: Report):
    for name, S in _inverse_targets(model, rep):
        U = underlying_groupoid(S)
        pairs = sum(1 for _ in U.defined_pairs)
        rep.add(name, True, f"{U.n} elements, {U.n_vertices} vertices, {pairs} composable pairs",
                size=U.n, vertices=list(U.vertex_names), pairs=pairs)


def cmd_spectrum(model: Model, args, rep: Report):
    for name, S in _inverse_targets(model, rep):
        if S.zero is None:
            rep.add(name, True, "no zero; spectrum not defined", ultrafilters=None)
            continue
        gens = [S.names[generator(S, F)] for F in ultrafilters(S)]
        rep.add(name, True, f"{len(gens)} ultrafilter(s), generated by {' '.join(gens)}",
                size=len(gens), generators=gens)


def cmd_kb(model: Model, args, rep: Report):
    for name, S in _inverse_targets(model, rep):
        K = kb(S, cap=args.cap_bisections)
        axioms = {k: v is None for k, v in validate_sigma(K.sigma).items()}
        ok = all(axioms.values())
        rep.add(name, ok, f"{len(K.sets)} bisections; sigma axioms {'hold' if ok else 'fail'}",
                size=len(K.sets), axioms=axioms)


def cmd_p(model: Model, args, rep: Report):
    for name, S in _inverse_targets(model, rep):
        if S.zero is None:
            rep.add(name, True, "no zero; P not defined", size=None)
            continue
        P = p_functor(natural_sigma(S)).semigroupoid
        rep.add(name, True, f"{P.n} germs over {P.n_vertices} ultrafilters ({classify(P)})",
                size=P.n, vertices=P.n_vertices, elements=list(P.names))


def cmd_roundtrip(model: Model, args, rep: Report):
    for name, G in _inverse_targets(model, rep):
        z = zeta(G, cap=args.cap_bisections)
        K = kb(G, cap=args.cap_bisections)
        k = kappa(K.sigma, cap=args.cap_bisections)
        word = lambda r: "iso" if r["iso"] else "not iso"
        text = f"zeta: {word(z)} ({z['elements']} elements); kappa: {word(k)} ({k['elements']} elements)"
        rep.add(name, z["iso"] and k["iso"], text,
                zeta={"iso": z["iso"], "elements": z["elements"]},
                kappa={"iso": k["iso"], "elements": k["elements"]})


def cmd_iso(model: Model, args, rep: Report):
    A, B = model.best(args.a), model.best(args.b)
    m = find_isomorphism(A, B, cap=64)
    if m is None:
        rep.add(f"{args.a} {args.b}", False, "not isomorphic", isomorphism=None)
    else:
        pairs = {A.names[a]: B.names[b] for a, b in enumerate(m)}
        rep.add(f"{args.a} {args.b}", True, "isomorphic: " + ", ".join(f"{a}->{b}" for a, b in pairs.items()),
                isomorphism=pairs)


COMMANDS: dict[str, Callable] = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "graphings": cmd_graphings,
    "wagner-preston": cmd_wagner_preston,
    "semidirect": cmd_semidirect,
    "quotient": cmd_quotient,
    "germ": cmd_germ,
    "underlying": cmd_underlying,
    "spectrum": cmd_spectrum,
    "kb": cmd_kb,
    "p": cmd_p,
    "roundtrip": cmd_roundtrip,
    "iso": cmd_iso,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sgpd", description="Checks and constructions on .sgpd files.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="input .sgpd file")
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--max-violations", type=int, default=32)
    common.add_argument("--cap-bisections", type=int, default=1 << 16)
    common.add_argument("--cap-graphings", type=int, default=8)
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "iso":
            p.add_argument("a", help="first block name")
            p.add_argument("b", help="second block name")
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    rep = Report(args.command)
    try:
        model = Model(load(args.file))
        COMMANDS[args.command](model, args, rep)
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except (DSLSyntaxError, UnresolvedName, DuplicateDefinition, CapExceeded) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INPUT
    if not rep.entries:
        print(f"{args.command}: no applicable blocks in {args.file}", file=err)
    print(rep.as_json() if args.json else rep.as_text(), file=out)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
