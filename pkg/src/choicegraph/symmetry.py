"""Automorphism groups, colour-preserving subgroups, orbits, fixed/stabilized sets.

The search is individualisation-refinement: colour refinement (1-dimensional
Weisfeiler-Leman, with edge colours folded into the neighbour multisets) is
the pruning invariant, and vertices are individualised in index order so the
output is reproducible.  Permutations are tuples ``p`` with ``p[i]`` the image
of vertex index ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .caps import get_caps
from .errors import TooLarge, UnknownVertex
from .graph import VERTEX, Colouring, Graph, check_domain

Perm = tuple


@dataclass(frozen=True)
class AutomorphismGroup:
    graph: Graph
    order: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...] | None = None

    @property
    def enumerated(self) -> bool:
        return self.elements is not None

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def perms(self) -> tuple[Perm, ...]:
        """Elements when enumerated, otherwise the generators."""
        return self.elements if self.elements is not None else self.generators

    def as_dict(self, p: Perm) -> dict[str, str]:
        vs = self.graph.vertices
        return {vs[i]: vs[j] for i, j in enumerate(p)}

    def __len__(self):
        return self.order


# ---------------------------------------------------------------------------
# search core


class _Search:
    def __init__(self, G: Graph, vcol: Sequence[int] | None, ecol: Sequence[int] | None):
        self.G = G
        self.n = G.n
        self.adj = [sorted(a) for a in G.adj]
        self.vcol = list(vcol) if vcol is not None else [0] * self.n
        self.ecolour: list[dict[int, int]] = [dict() for _ in range(self.n)]
        for i, (u, v) in enumerate(G.edge_ends):
            k = ecol[i] if ecol is not None else 0
            self.ecolour[u][v] = k
            self.ecolour[v][u] = k
        self._src_cache: dict[tuple, list[int]] = {}

    def refine(self, fixed: Sequence[int]) -> list[int]:
        """Equitable labelling after individualising ``fixed`` in order."""
        pos = {v: i + 1 for i, v in enumerate(fixed)}
        keys = [(self.vcol[v], pos.get(v, 0)) for v in range(self.n)]
        labels = _canon(keys)
        ncls = len(set(labels))
        while True:
            sigs = [
                (labels[v], tuple(sorted((labels[w], self.ecolour[v][w]) for w in self.adj[v])))
                for v in range(self.n)
            ]
            new = _canon(sigs)
            k = len(set(new))
            if k == ncls:
                return new
            labels, ncls = new, k

    def is_automorphism(self, p: Perm) -> bool:
        for v in range(self.n):
            if self.vcol[p[v]] != self.vcol[v]:
                return False
        for v in range(self.n):
            pv = p[v]
            if len(self.adj[pv]) != len(self.adj[v]):
                return False
            for w, k in self.ecolour[v].items():
                if self.ecolour[pv].get(p[w]) != k:
                    return False
        return True

    def extensions(self, src: list[int], dst: list[int]) -> Iterator[Perm]:
        """All automorphisms mapping ``src[i] -> dst[i]`` (DFS, index order)."""
        key = tuple(src)
        P = self._src_cache.get(key)
        if P is None:
            P = self._src_cache[key] = self.refine(src)
        Q = self.refine(dst)
        if sorted(P) != sorted(Q):
            return
        if len(set(P)) == self.n:
            where = {lab: w for w, lab in enumerate(Q)}
            p = tuple(where[P[v]] for v in range(self.n))
            if self.is_automorphism(p):
                yield p
            return
        counts: dict[int, int] = {}
        for lab in P:
            counts[lab] = counts.get(lab, 0) + 1
        v = next(u for u in range(self.n) if counts[P[u]] > 1)
        for w in range(self.n):
            if Q[w] == P[v]:
                yield from self.extensions(src + [v], dst + [w])

    def first_extension(self, src: list[int], dst: list[int]) -> Perm | None:
        return next(self.extensions(src, dst), None)

    def base(self) -> list[tuple[list[int], int, list[int]]]:
        """First path of the search tree as (prefix, base point, its cell)."""
        prefix: list[int] = []
        path = []
        while True:
            P = self.refine(prefix)
            counts: dict[int, int] = {}
            for lab in P:
                counts[lab] = counts.get(lab, 0) + 1
            nxt = next((u for u in range(self.n) if counts[P[u]] > 1), None)
            if nxt is None:
                return path
            cell = [w for w in range(self.n) if P[w] == P[nxt]]
            path.append((list(prefix), nxt, cell))
            prefix.append(nxt)


def _canon(keys: list) -> list[int]:
    table = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [table[k] for k in keys]


def _orbit(point: int, gens: Iterable[Perm]) -> set[int]:
    gens = list(gens)
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _compose(a: Perm, b: Perm) -> Perm:
    """``a after b``."""
    return tuple(a[x] for x in b)


def _transversal(point: int, gens: list[Perm], n: int) -> dict[int, Perm]:
    reps = {point: tuple(range(n))}
    queue = [point]
    for x in queue:
        for g in gens:
            y = g[x]
            if y not in reps:
                reps[y] = _compose(g, reps[x])
                queue.append(y)
    return reps


def _strong_generators(s: _Search) -> tuple[list[Perm], list[dict[int, Perm]]]:
    """Strong generating set and one transversal per base level (top level first)."""
    gens: list[Perm] = []
    transversals = []
    for prefix, point, cell in reversed(s.base()):
        orbit = _orbit(point, gens)
        for w in cell:
            if w in orbit:
                continue
            g = s.first_extension(prefix + [point], prefix + [w])
            if g is not None:
                gens.append(g)
                orbit = _orbit(point, gens)
        transversals.append(_transversal(point, gens, s.n))
    transversals.reverse()
    return gens, transversals


def _elements(n: int, transversals: list[dict[int, Perm]]) -> list[Perm]:
    elements = [tuple(range(n))]
    for reps in reversed(transversals):
        elements = [_compose(u, h) for u in reps.values() for h in elements]
    return sorted(elements)


def _build(G: Graph, vcol=None, ecol=None) -> AutomorphismGroup:
    caps = get_caps()
    if G.n > caps.automorphism_vertices:
        raise TooLarge(f"{G.n} vertices exceeds automorphism cap {caps.automorphism_vertices}")
    s = _Search(G, vcol, ecol)
    gens, transversals = _strong_generators(s)
    order = 1
    for reps in transversals:
        order *= len(reps)
    identity = tuple(range(G.n))
    if order <= caps.enumeration:
        elements = tuple(_elements(G.n, transversals))
        return AutomorphismGroup(G, order, tuple(gens) or (identity,), elements)
    return AutomorphismGroup(G, order, tuple(gens), None)


def _colour_lists(G: Graph, c: Colouring | None):
    if c is None:
        return None, None
    check_domain(G, c)
    if c.kind == VERTEX:
        return c.as_list(G), None
    return None, c.as_list(G)


# ---------------------------------------------------------------------------
# public operations


def automorphisms(G: Graph) -> AutomorphismGroup:
    return _build(G)


def preserving_automorphisms(G: Graph, c: Colouring) -> AutomorphismGroup:
    vcol, ecol = _colour_lists(G, c)
    return _build(G, vcol, ecol)


def nontrivial_preserving(G: Graph, c: Colouring | None = None) -> Perm | None:
    """Some non-identity automorphism preserving ``c``, or None."""
    vcol, ecol = _colour_lists(G, c)
    s = _Search(G, vcol, ecol)
    for prefix, point, cell in reversed(s.base()):
        for w in cell:
            if w == point:
                continue
            g = s.first_extension(prefix + [point], prefix + [w])
            if g is not None:
                return g
    return None


def is_distinguishing(G: Graph, c: Colouring) -> bool:
    if G.n > get_caps().automorphism_vertices:
        raise TooLarge(G.n)
    return nontrivial_preserving(G, c) is None


def orbit_partition(group: AutomorphismGroup) -> list[tuple[str, ...]]:
    """Orbits of the vertex set, each in vertex order, ordered by first vertex."""
    G = group.graph
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in group.perms():
        for x, y in enumerate(g):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    blocks: dict[int, list[str]] = {}
    for i, v in enumerate(G.vertices):
        blocks.setdefault(find(i), []).append(v)
    return [tuple(b) for _, b in sorted(blocks.items())]


def _indices(group: AutomorphismGroup, A: Iterable[str]) -> list[int]:
    idx = group.graph.index
    out = []
    for a in A:
        if a not in idx:
            raise UnknownVertex(a)
        out.append(idx[a])
    return out


def is_fixed(group: AutomorphismGroup, A: Iterable[str]) -> bool:
    ids = _indices(group, A)
    return all(g[i] == i for g in group.perms() for i in ids)


def is_stabilized(group: AutomorphismGroup, A: Iterable[str]) -> bool:
    ids = _indices(group, A)
    s = set(ids)
    return all(g[i] in s for g in group.perms() for i in ids)


def induced_edge_perm(G: Graph, p: Perm) -> tuple[int, ...]:
    """Edge permutation induced by vertex permutation ``p`` (edge index -> edge index)."""
    vs = G.vertices
    out = []
    for u, v in G.edge_ends:
        out.append(G.edge_index[frozenset((vs[p[u]], vs[p[v]]))])
    return tuple(out)


def preserves(G: Graph, p: Perm, c: Colouring) -> bool:
    col = c.as_list(G)
    if c.kind == VERTEX:
        return all(col[p[i]] == col[i] for i in range(G.n))
    ep = induced_edge_perm(G, p)
    return all(col[ep[i]] == col[i] for i in range(G.m))


def brute_force_automorphisms(G: Graph, c: Colouring | None = None) -> list[Perm]:
    """All vertex permutations preserving edges (and ``c``), by exhaustion.

    Independent reference for small graphs; does not share code with the search.
    """
    if G.n > 9:
        raise TooLarge("brute force is limited to 9 vertices")
    if c is not None:
        check_domain(G, c)
    edges = {(u, v) for u, v in G.edge_ends} | {(v, u) for u, v in G.edge_ends}
    out = []
    for p in permutations(range(G.n)):
        if all((p[u], p[v]) in edges for u, v in G.edge_ends):
            if c is None or preserves(G, p, c):
                out.append(tuple(p))
    return out


__all__ = [
    "AutomorphismGroup",
    "automorphisms",
    "preserving_automorphisms",
    "is_distinguishing",
    "orbit_partition",
    "is_fixed",
    "is_stabilized",
    "induced_edge_perm",
    "preserves",
    "brute_force_automorphisms",
    "nontrivial_preserving",
]
