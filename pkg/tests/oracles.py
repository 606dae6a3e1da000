"""Brute-force reference computations, written without the package's
algorithms so the tests compare two independent derivations."""
from __future__ import annotations

from itertools import combinations, product

from sympy.utilities.iterables import multiset_partitions


def exel_labels(table, f, g, h):
    """Which of the three definedness conditions hold on (f, g, h)."""
    fg, gh = table[f][g], table[g][h]
    conds = {
        "i": fg is not None and gh is not None,
        "ii": fg is not None and table[fg][h] is not None,
        "iii": gh is not None and table[f][gh] is not None,
    }
    return tuple(k for k, v in conds.items() if v), tuple(k for k, v in conds.items() if not v)


def is_exel(table) -> bool:
    n = len(table)
    for f, g, h in product(range(n), repeat=3):
        held, failed = exel_labels(table, f, g, h)
        if held and failed:
            return False
        if len(held) == 3 and table[table[f][g]][h] != table[f][table[g][h]]:
            return False
    return True


def inverses(table) -> list[list[int]]:
    """All b with aba = a and bab = b, for each a."""
    n = len(table)
    out = []
    for a in range(n):
        found = []
        for b in range(n):
            ab, ba = table[a][b], table[b][a]
            if ab is None or ba is None:
                continue
            if table[ab][a] == a and table[ba][b] == b:
                found.append(b)
        out.append(found)
    return out


def graphings_by_partitions(S) -> int:
    """Count graphings by trying every pair of set partitions of the free
    source and range symbols and checking the graph conditions directly."""
    n, t = S.n, S.table
    right = [frozenset(b for b in range(n) if t[b][a] is not None) for a in range(n)]
    left = [frozenset(b for b in range(n) if t[a][b] is not None) for a in range(n)]
    free0 = [a for a in range(n) if not left[a]]
    free1 = [a for a in range(n) if not right[a]]

    def parts(items):
        return list(multiset_partitions(items)) if items else [[]]

    count = 0
    for p0, p1 in product(parts(free0), parts(free1)):
        src, rng = {}, {}
        for a in range(n):
            src[a] = ("R", right[next(iter(left[a]))]) if left[a] else ("v0", next(i for i, b in enumerate(p0) if a in b))
            rng[a] = ("R", right[a]) if right[a] else ("v1", next(i for i, b in enumerate(p1) if a in b))
        ok = True
        for a, b in product(range(n), repeat=2):
            ab = t[a][b]
            if (ab is not None) != (src[a] == rng[b]):
                ok = False
                break
            if ab is not None and (src[ab] != src[b] or rng[ab] != rng[a]):
                ok = False
                break
        if ok:
            count += 1
    return count


def natural_order(table, inv) -> set[tuple[int, int]]:
    n = len(table)
    return {
        (a, b)
        for a, b in product(range(n), repeat=2)
        if table[inv[a]][a] is not None and table[b][table[inv[a]][a]] == a
    }


def bisections(G) -> list[frozenset[int]]:
    """Every subset on which source and range are injective."""
    out = []
    for k in range(G.n + 1):
        for sub in combinations(range(G.n), k):
            if len({G.src[a] for a in sub}) == k and len({G.rng[a] for a in sub}) == k:
                out.append(frozenset(sub))
    return out


def congruence_by_fixpoint(S, seeds) -> set[tuple[int, int]]:
    """Least congruence as a set of pairs, by saturating reflexive,
    symmetric, transitive and product closure until nothing changes."""
    n, t = S.n, S.table
    R = {(a, a) for a in range(n)} | set(seeds) | {(b, a) for a, b in seeds}
    while True:
        new = set(R)
        for (a, b), (c, d) in product(R, R):
            if b == c:
                new.add((a, d))
            x, y = t[a][c], t[b][d]
            if x is not None and y is not None:
                new.add((x, y))
                new.add((y, x))
        if new == R:
            return R
        R = new
