"""Standard small instances: groups, semilattices, symmetric inverse monoids,
pair groupoids and the named counterexamples used throughout the tests."""
from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Callable, Sequence

from .core import GraphedSemigroupoid, PartialMagma, partial_magma, validate_exel, validate_graphed
from .inverse import InverseSemigroupoid, detect_inverse


def from_function(names: Sequence[str], op: Callable[[int, int], "int | None"]) -> PartialMagma:
    n = len(names)
    return PartialMagma(tuple(names), tuple(tuple(op(a, b) for b in range(n)) for a in range(n)))


def cyclic_group(n: int) -> InverseSemigroupoid:
    names = ["1"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    return detect_inverse(from_function(names, lambda a, b: (a + b) % n))


def direct_product(A: PartialMagma, B: PartialMagma, sep: str = ".") -> PartialMagma:
    pairs = list(product(range(A.n), range(B.n)))
    pos = {p: i for i, p in enumerate(pairs)}
    names = [f"{A.names[a]}{sep}{B.names[b]}" for a, b in pairs]

    def op(x, y):
        (a1, b1), (a2, b2) = pairs[x], pairs[y]
        a, b = A.table[a1][a2], B.table[b1][b2]
        return None if a is None or b is None else pos[(a, b)]

    return from_function(names, op)


def klein_group() -> InverseSemigroupoid:
    z2 = cyclic_group(2)
    return detect_inverse(direct_product(z2, z2))


def chain(n: int) -> InverseSemigroupoid:
    """The semilattice L_n = {0 < 1 < ... < n-1} under min."""
    return detect_inverse(from_function([str(k) for k in range(n)], min))


def semilattice(names: Sequence[str], meet: Callable[[int, int], int]) -> InverseSemigroupoid:
    return detect_inverse(from_function(names, meet))


def _canonical_total_table(table) -> tuple:
    n = len(table)
    best = None
    for p in permutations(range(n)):
        inv = [0] * n
        for i, x in enumerate(p):
            inv[x] = i
        form = tuple(tuple(inv[table[p[i]][p[j]]] for j in range(n)) for i in range(n))
        if best is None or form < best:
            best = form
    return best


def all_semilattices(n: int) -> list[InverseSemigroupoid]:
    """Every meet-semilattice with ``n`` elements, up to isomorphism."""
    if n == 1:
        return [chain(1)]
    offdiag = list(combinations(range(n), 2))
    found = {}
    for values in product(range(n), repeat=len(offdiag)):
        t = [[None] * n for _ in range(n)]
        for i in range(n):
            t[i][i] = i
        for (i, j), v in zip(offdiag, values):
            t[i][j] = t[j][i] = v
        if any(t[t[a][b]][c] != t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n)):
            continue
        key = _canonical_total_table(t)
        found.setdefault(key, key)
    out = []
    for key in sorted(found):
        out.append(semilattice([f"e{k}" for k in range(n)], lambda a, b, key=key: key[a][b]))
    return out


def _pbij_name(m: tuple) -> str:
    return "".join("_" if v is None else str(v + 1) for v in m)


def symmetric_inverse_monoid(n: int) -> InverseSemigroupoid:
    """Partial bijections of {1..n}; ``"1_"`` fixes 1 and is undefined on 2.

    The product ab applies b first.
    """
    maps = []
    for k in range(n + 1):
        for dom in combinations(range(n), k):
            for img in permutations(range(n), k):
                m = [None] * n
                for d, i in zip(dom, img):
                    m[d] = i
                maps.append(tuple(m))
    maps.sort(key=lambda m: (sum(v is not None for v in m), [(-1 if v is None else v) for v in m]))
    pos = {m: i for i, m in enumerate(maps)}

    def op(a, b):
        fa, fb = maps[a], maps[b]
        return pos[tuple(None if fb[x] is None else fa[fb[x]] for x in range(n))]

    return detect_inverse(from_function([_pbij_name(m) for m in maps], op))


def pair_groupoid(n: int) -> InverseSemigroupoid:
    """Arrows (i,j) from j to i, named ``p{i}{j}``, with (i,j)(j,k) = (i,k)."""
    arrows = list(product(range(n), repeat=2))
    pos = {a: i for i, a in enumerate(arrows)}

    def op(x, y):
        (i, j), (k, l) = arrows[x], arrows[y]
        return pos[(i, l)] if j == k else None

    return detect_inverse(from_function([f"p{i}{j}" for i, j in arrows], op))


def pair_groupoid_times_chain(n: int = 2) -> InverseSemigroupoid:
    """(X x X) x L2: the pair groupoid with a 0/1 level, levels multiply by min."""
    return detect_inverse(direct_product(pair_groupoid(n), chain(2), sep="_"))


def rectangular_band() -> PartialMagma:
    """2x2 rectangular band: (i,j)(k,l) = (i,l). Every element has four inverses."""
    cells = list(product(range(2), repeat=2))
    pos = {c: i for i, c in enumerate(cells)}
    return from_function(
        [f"r{i}{j}" for i, j in cells], lambda x, y: pos[(cells[x][0], cells[y][1])]
    )


def group_with_zero(n: int = 2) -> InverseSemigroupoid:
    """Cyclic group of order n with an adjoined zero ``0``."""
    names = ["0"] + list(cyclic_group(n).names)
    return detect_inverse(
        from_function(names, lambda a, b: 0 if a == 0 or b == 0 else (a - 1 + b - 1) % n + 1)
    )


def group_with_unit() -> InverseSemigroupoid:
    """Z/2 = {1, g} with a new identity ``x`` adjoined."""
    return detect_inverse(
        partial_magma(
            ["x", "1", "g"],
            [("x", y, y) for y in "x1g"]
            + [(y, "x", y) for y in "1g"]
            + [("1", "1", "1"), ("1", "g", "g"), ("g", "1", "g"), ("g", "g", "1")],
        )
    )


def null_extension() -> PartialMagma:
    """T = {0,t,u,v}: tv = vt = u and every other product is 0."""
    names = ["0", "t", "u", "v"]
    prods = [(a, b, "0") for a in names for b in names]
    prods = [p for p in prods if (p[0], p[1]) not in {("t", "v"), ("v", "t")}]
    prods += [("t", "v", "u"), ("v", "t", "u")]
    return validate_exel(partial_magma(names, prods))


def exel_counterexamples() -> dict[str, tuple[PartialMagma, tuple[str, ...], tuple[str, ...]]]:
    """Tables breaking the semigroupoid axioms at (f,g,h), with expected held/failed labels."""
    fgh = ["f", "g", "h"]
    return {
        "fg=f,gh=h": (partial_magma(fgh, [("f", "g", "f"), ("g", "h", "h")]), ("i",), ("ii", "iii")),
        "fg=g,gh=h": (partial_magma(fgh, [("f", "g", "g"), ("g", "h", "h")]), ("i", "ii"), ("iii",)),
        "fg=f,gh=g": (partial_magma(fgh, [("f", "g", "f"), ("g", "h", "g")]), ("i", "iii"), ("ii",)),
        "fg=hh=h": (partial_magma(fgh, [("f", "g", "h"), ("h", "h", "h")]), ("ii",), ("i", "iii")),
        "gh=ff=f": (partial_magma(fgh, [("g", "h", "f"), ("f", "f", "f")]), ("iii",), ("i", "ii")),
    }


def non_associative_example() -> PartialMagma:
    """aa = ab = b, bb = ba = a: total and satisfies definedness, but (aa)a != a(aa)."""
    return partial_magma(["a", "b"], [("a", "a", "b"), ("a", "b", "b"), ("b", "b", "a"), ("b", "a", "a")])


def non_categorical_example() -> PartialMagma:
    return partial_magma(
        ["a", "b", "x", "y", "z"],
        [("a", "a", "a"), ("x", "a", "y"), ("y", "a", "y"), ("b", "b", "b"), ("x", "b", "z"), ("z", "b", "z")],
    )


def two_idempotents() -> tuple[PartialMagma, PartialMagma]:
    """{e,f} with only ee, ff defined, and {e,f,g} where every other product is g."""
    small = validate_exel(partial_magma(["e", "f"], [("e", "e", "e"), ("f", "f", "f")]))
    names = ["e", "f", "g"]
    prods = [(a, b, "g") for a in names for b in names if not (a == b and a in "ef")]
    big = validate_exel(partial_magma(names, prods + [("e", "e", "e"), ("f", "f", "f")]))
    return small, big


def strict_order(n: int = 3) -> PartialMagma:
    """Pairs (i,j) with j < i < n, named ``{i}{j}``, and (i,j)(j,k) = (i,k)."""
    arrows = [(i, j) for i in range(n) for j in range(i)]
    pos = {a: k for k, a in enumerate(arrows)}
    return validate_exel(
        from_function(
            [f"{i}{j}" for i, j in arrows],
            lambda x, y: pos[(arrows[x][0], arrows[y][1])] if arrows[x][1] == arrows[y][0] else None,
        )
    )


def strict_order_graphed(n: int = 3) -> GraphedSemigroupoid:
    A = strict_order(n)
    arrows = [(int(nm[0]), int(nm[1])) for nm in A.names]
    return validate_graphed(A, [str(k) for k in range(n)], [j for _, j in arrows], [i for i, _ in arrows])


def two_copies_glued(n: int = 3) -> tuple[GraphedSemigroupoid, GraphedSemigroupoid]:
    """Two disjoint strict orders, then the same arrows with both copies of 0 identified."""
    A = strict_order(n)
    arrows = [(int(nm[0]), int(nm[1])) for nm in A.names]
    m = len(arrows)
    names = [f"{nm}_{c}" for c in (1, 2) for nm in A.names]

    def op(x, y):
        if x // m != y // m:
            return None
        z = A.table[x % m][y % m]
        return None if z is None else z + m * (x // m)

    T = validate_exel(from_function(names, op))
    vert = [f"{k}_{c}" for c in (1, 2) for k in range(n)]
    src = [n * (x // m) + arrows[x % m][1] for x in range(2 * m)]
    rng = [n * (x // m) + arrows[x % m][0] for x in range(2 * m)]
    S1 = validate_graphed(T, vert, src, rng)
    # glue 0_2 onto 0_1; no arrow has range 0 so the product table is unchanged
    glue = [v if v != n else 0 for v in range(2 * n)]
    keep = sorted(set(glue))
    relabel = {v: i for i, v in enumerate(keep)}
    S2 = validate_graphed(
        T,
        [vert[v] if v else "0" for v in keep],
        [relabel[glue[v]] for v in src],
        [relabel[glue[v]] for v in rng],
    )
    return S1, S2


def null_extension_action():
    """Z/2 with a unit adjoined acting globally on T = {0,t,u,v}: x fixes
    everything, 1 fixes I = {0,u,v} and g swaps u and v."""
    from .actions import preaction

    S, T = group_with_unit(), null_extension()
    x, one, g = (S.index(a) for a in ("x", "1", "g"))
    z, u, v = (T.index(a) for a in ("0", "u", "v"))
    theta = {
        x: {i: i for i in range(T.n)},
        one: {z: z, u: u, v: v},
        g: {z: z, u: v, v: u},
    }
    return preaction(S, T, [0] * T.n, theta, "global")
