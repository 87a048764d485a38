"""Brute-force ground truth: D, D', chi and chi', each with a witness colouring.

Two routes exist for the distinguishing parameters.  The exhaustive route walks
restricted growth strings (one representative per colour permutation) and asks
the automorphism search whether each colouring is distinguishing; it is capped
at ``oracle_exhaustive`` points.  The pruned route materialises the group once,
colours only the points moved by some automorphism and kills a branch as soon
as some group element is certain to survive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .caps import get_caps
from .errors import K1K2Component, TooLarge
from .graph import (
    EDGE,
    VERTEX,
    Colouring,
    Graph,
    colouring_from_list,
    components,
    line_graph,
)
from .symmetry import automorphisms, induced_edge_perm, is_distinguishing


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Colouring


def restricted_growth_strings(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Strings ``s`` of length n with ``s[0] = 0``, ``s[i] <= max(s[:i]) + 1`` and values < k."""
    if n == 0:
        yield ()
        return
    s = [0] * n
    mx = [0] * n

    def rec(i):
        if i == n:
            yield tuple(s)
            return
        for c in range(min(mx[i - 1] + 1, k - 1) + 1):
            s[i] = c
            mx[i] = max(mx[i - 1], c)
            yield from rec(i + 1)

    yield from rec(1)


# ---------------------------------------------------------------------------
# distinguishing number / index


def _check_k1k2(G: Graph) -> None:
    for comp in components(G):
        if len(comp) <= 2:
            raise K1K2Component(f"component {comp} is K1 or K2")


def _exhaustive(G: Graph, kind: str) -> OracleResult:
    npts = G.n if kind == VERTEX else G.m
    cap = get_caps().oracle_exhaustive
    if npts > cap:
        raise TooLarge(f"{npts} {kind}s exceeds exhaustive cap {cap}")
    if npts == 0:
        return OracleResult(0, Colouring(kind, {}))
    for k in range(1, npts + 1):
        for s in restricted_growth_strings(npts, k):
            if max(s) != k - 1:
                continue
            c = colouring_from_list(G, kind, s)
            if is_distinguishing(G, c):
                return OracleResult(k, c)
    raise AssertionError("all-distinct colouring must be distinguishing")


def _swappable_leaf_classes(G: Graph) -> list[list[int]]:
    by_parent: dict[int, list[int]] = {}
    for v in range(G.n):
        if len(G.adj[v]) == 1:
            (p,) = G.adj[v]
            by_parent.setdefault(p, []).append(v)
    return [leaves for leaves in by_parent.values() if len(leaves) >= 2]


def _pruned_search(npts: int, perms: Sequence[tuple[int, ...]], lower: int):
    """Least k and a colouring of ``0..npts-1`` broken by every perm in ``perms``."""
    moved = sorted({i for p in perms for i in range(npts) if p[i] != i})
    pos = {v: i for i, v in enumerate(moved)}
    col = [0] * npts

    def broken(support, perm):
        return any(col[v] != col[perm[v]] for v in support)

    # each perm is checked once its whole support is coloured
    due_perm: list[list[tuple[list[int], tuple[int, ...]]]] = [[] for _ in moved]
    for p in perms:
        support = [i for i in range(npts) if p[i] != i]
        if support:
            due_perm[max(pos[v] for v in support)].append((support, p))

    def rec(idx: int, used: int, k: int) -> bool:
        if idx == len(moved):
            return True
        v = moved[idx]
        for c in range(min(used + 1, k)):
            col[v] = c
            if all(broken(sup, p) for sup, p in due_perm[idx]):
                if rec(idx + 1, max(used, c + 1), k):
                    return True
        col[v] = 0
        return False

    k = max(1, lower)
    while True:
        for i in range(npts):
            col[i] = 0
        if rec(0, 0, k):
            return k, list(col)
        k += 1


def _pruned(G: Graph, kind: str) -> OracleResult:
    caps = get_caps()
    group = automorphisms(G)
    if not group.enumerated or group.order > caps.oracle_group:
        raise TooLarge(f"group of order {group.order} too large for the pruned search")
    identity = tuple(range(G.n))
    perms = [p for p in group.elements if p != identity]
    if kind == VERTEX:
        npts = G.n
        classes = _swappable_leaf_classes(G)
        lower = max((len(c) for c in classes), default=1)
    else:
        npts = G.m
        perms = sorted({induced_edge_perm(G, p) for p in perms})
        lower = 1
    k, col = _pruned_search(npts, perms, lower)
    return OracleResult(k, colouring_from_list(G, kind, col))


def _distinguishing(G: Graph, kind: str, method: str) -> OracleResult:
    caps = get_caps()
    npts = G.n if kind == VERTEX else G.m
    if G.n > caps.oracle_vertices:
        raise TooLarge(f"{G.n} vertices exceeds oracle cap {caps.oracle_vertices}")
    if method == "exhaustive":
        return _exhaustive(G, kind)
    if method == "pruned":
        return _pruned(G, kind)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    try:
        return _pruned(G, kind)
    except TooLarge:
        if npts <= caps.oracle_exhaustive:
            return _exhaustive(G, kind)
        raise


def distinguishing_number(G: Graph, method: str = "auto") -> OracleResult:
    return _distinguishing(G, VERTEX, method)


def distinguishing_index(G: Graph, method: str = "auto") -> OracleResult:
    _check_k1k2(G)
    return _distinguishing(G, EDGE, method)


# ---------------------------------------------------------------------------
# chromatic number / index


def _greedy_clique(G: Graph) -> int:
    best = 1 if G.n else 0
    for v in range(G.n):
        clique = [v]
        for w in sorted(G.adj[v], key=lambda x: -len(G.adj[x])):
            if all(w in G.adj[u] for u in clique):
                clique.append(w)
        best = max(best, len(clique))
    return best


def _k_colour(G: Graph, k: int) -> list[int] | None:
    n = G.n
    order = sorted(range(n), key=lambda v: (-len(G.adj[v]), v))
    col = [-1] * n

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        banned = {col[w] for w in G.adj[v]}
        for c in range(min(used + 1, k)):
            if c in banned:
                continue
            col[v] = c
            if rec(i + 1, max(used, c + 1)):
                return True
        col[v] = -1
        return False

    return list(col) if rec(0, 0) else None


def chromatic_number(G: Graph) -> OracleResult:
    caps = get_caps()
    if G.n > caps.oracle_vertices:
        raise TooLarge(f"{G.n} vertices exceeds oracle cap {caps.oracle_vertices}")
    if G.n == 0:
        return OracleResult(0, Colouring(VERTEX, {}))
    k = _greedy_clique(G)
    while True:
        col = _k_colour(G, k)
        if col is not None:
            return OracleResult(k, colouring_from_list(G, VERTEX, col))
        k += 1


def chromatic_index(G: Graph) -> OracleResult:
    if G.m == 0:
        return OracleResult(0, Colouring(EDGE, {}))
    L = line_graph(G)
    res = chromatic_number(L)
    col = [res.witness[name] for name in L.vertices]
    return OracleResult(res.value, colouring_from_list(G, EDGE, col))
