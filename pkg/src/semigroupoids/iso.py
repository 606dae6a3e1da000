"""Backtracking isomorphism search between small partial tables."""
from __future__ import annotations

from .core import PartialMagma
from .errors import CapExceeded


def _signature(S: PartialMagma, a: int) -> tuple:
    t = S.table
    sq = t[a][a]
    x, seen = a, set()
    while x is not None and x not in seen:
        seen.add(x)
        x = t[x][a]
    return (
        sq == a,
        sq is None,
        len(S.left_sets[a]),
        len(S.right_sets[a]),
        sum(1 for c in S.defined_pairs if c[2] == a),
        len(seen),
    )


def find_isomorphism(A: PartialMagma, B: PartialMagma, cap: int = 64) -> tuple[int, ...] | None:
    """A bijection preserving and reflecting products, or ``None``."""
    if max(A.n, B.n) > cap:
        raise CapExceeded(f"isomorphism search limited to {cap} elements")
    if A.n != B.n or len(A.defined_pairs) != len(B.defined_pairs):
        return None
    sa = [_signature(A, a) for a in range(A.n)]
    sb = [_signature(B, b) for b in range(B.n)]
    if sorted(sa) != sorted(sb):
        return None
    n = A.n
    ta, tb = A.table, B.table
    # most constrained first
    order = sorted(range(n), key=lambda a: (sum(1 for x in sa if x == sa[a]), a))
    fwd: list[int | None] = [None] * n
    used = [False] * n

    def consistent(assigned: list[int]) -> bool:
        for x in assigned:
            for y in assigned:
                p, q = ta[x][y], tb[fwd[x]][fwd[y]]
                if (p is None) != (q is None):
                    return False
                if p is not None and fwd[p] is not None and fwd[p] != q:
                    return False
        return True

    def extend(a: int, b: int, trail: list[int]) -> bool:
        # assign a -> b and propagate products forced by assigned pairs
        stack = [(a, b)]
        while stack:
            x, y = stack.pop()
            if fwd[x] is not None:
                if fwd[x] != y:
                    return False
                continue
            if used[y] or sa[x] != sb[y]:
                return False
            fwd[x] = y
            used[y] = True
            trail.append(x)
            for z in list(trail):
                for p, q in ((ta[x][z], tb[y][fwd[z]]), (ta[z][x], tb[fwd[z]][y])):
                    if (p is None) != (q is None):
                        return False
                    if p is not None:
                        stack.append((p, q))
        return True

    def undo(trail: list[int]):
        for x in trail:
            used[fwd[x]] = False
            fwd[x] = None

    def search(i: int) -> bool:
        while i < n and fwd[order[i]] is not None:
            i += 1
        if i == n:
            return consistent(list(range(n)))
        a = order[i]
        for b in range(n):
            if used[b] or sa[a] != sb[b]:
                continue
            trail: list[int] = []
            if extend(a, b, trail) and search(i + 1):
                return True
            undo(trail)
        return False

    return tuple(fwd) if search(0) else None


def is_isomorphic(A: PartialMagma, B: PartialMagma, cap: int = 64) -> bool:
    return find_isomorphism(A, B, cap) is not None
