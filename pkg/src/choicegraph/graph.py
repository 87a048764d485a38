"""Finite simple graphs, vertex/edge colourings and elementary queries.

Vertex identifiers are opaque strings.  Internally every graph keeps a dense
index for its vertices (declaration order) and for its edges (sorted by the
index pair), which the search code works on; everything user facing is keyed
by the original ids.  Edges are ``frozenset`` pairs, so ``{u, v}`` and
``{v, u}`` are the same edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

from .errors import (
    DomainMismatch,
    DuplicateVertex,
    EmptyGraph,
    SelfLoop,
    UnknownEndpoint,
    UnknownVertex,
)

VERTEX = "vertex"
EDGE = "edge"
KINDS = (VERTEX, EDGE)

Edge = frozenset


def edge(u: str, v: str) -> frozenset:
    return frozenset((u, v))


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[frozenset, ...]
    index: dict = field(init=False, repr=False, compare=False)
    adj: tuple = field(init=False, repr=False, compare=False)
    edge_index: dict = field(init=False, repr=False, compare=False)
    edge_ends: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {v: i for i, v in enumerate(self.vertices)}
        nbrs: list[set[int]] = [set() for _ in self.vertices]
        ends = []
        for e in self.edges:
            u, v = sorted(index[x] for x in e)
            nbrs[u].add(v)
            nbrs[v].add(u)
            ends.append((u, v))
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))
        object.__setattr__(self, "edge_index", {e: i for i, e in enumerate(self.edges)})
        object.__setattr__(self, "edge_ends", tuple(ends))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: str, v: str) -> bool:
        return edge(u, v) in self.edge_index

    def neighbours(self, v: str) -> list[str]:
        i = self._idx(v)
        return [self.vertices[j] for j in sorted(self.adj[i])]

    def edge_pair(self, e: frozenset) -> tuple[str, str]:
        """Endpoints of ``e`` in vertex order."""
        u, v = self.edge_ends[self.edge_index[e]]
        return self.vertices[u], self.vertices[v]

    def _idx(self, v: str) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def without_edges(self, drop: Iterable[frozenset]) -> "Graph":
        drop = set(drop)
        return Graph(self.vertices, tuple(e for e in self.edges if e not in drop))


def make_graph(vertices: Iterable[str], edges: Iterable[Iterable[str]]) -> Graph:
    """Validate and build a graph; duplicate edges (in either orientation) collapse."""
    vs = tuple(vertices)
    seen = set()
    for v in vs:
        if v in seen:
            raise DuplicateVertex(v)
        seen.add(v)
    index = {v: i for i, v in enumerate(vs)}
    es = set()
    for pair in edges:
        u, v = tuple(pair)
        for x in (u, v):
            if x not in index:
                raise UnknownEndpoint(x)
        if u == v:
            raise SelfLoop(u)
        es.add(edge(u, v))
    ordered = sorted(es, key=lambda e: sorted(index[x] for x in e))
    return Graph(vs, tuple(ordered))


def degree(G: Graph, v: str) -> int:
    return len(G.adj[G._idx(v)])


def max_degree(G: Graph) -> int:
    if G.n == 0:
        raise EmptyGraph()
    return max(len(a) for a in G.adj)


def ball(G: Graph, v: str, d: int) -> set[str]:
    start = G._idx(v)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        if dist[u] == d:
            continue
        for w in G.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return {G.vertices[i] for i in dist}


def components(G: Graph) -> list[list[str]]:
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in G.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append([G.vertices[i] for i in sorted(comp)])
    return out


def line_graph(G: Graph) -> Graph:
    """Line graph whose vertices are named by the edge index (``"e0"``, ...)."""
    names = [f"e{i}" for i in range(G.m)]
    at = [[] for _ in range(G.n)]
    for i, (u, v) in enumerate(G.edge_ends):
        at[u].append(i)
        at[v].append(i)
    pairs = set()
    for inc in at:
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                pairs.add((inc[a], inc[b]))
    return make_graph(names, [(names[a], names[b]) for a, b in sorted(pairs)])


# ---------------------------------------------------------------------------
# colourings


@dataclass(frozen=True, eq=False)
class Colouring:
    """Total map from V(G) or E(G) to colours ``0..alpha-1``.

    ``alpha`` defaults to one more than the largest colour used.
    """

    kind: str
    assignment: Mapping[Hashable, int]
    alpha: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown colouring kind {self.kind!r}")
        assignment = dict(self.assignment)
        if self.kind == EDGE:
            assignment = {frozenset(k): c for k, c in assignment.items()}
        for k, c in assignment.items():
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"colour of {k!r} must be a natural number, got {c!r}")
        top = max(assignment.values(), default=-1) + 1
        alpha = top if self.alpha is None else self.alpha
        if alpha < top:
            raise ValueError(f"colour {top - 1} not below alpha={alpha}")
        object.__setattr__(self, "assignment", assignment)
        object.__setattr__(self, "alpha", alpha)

    def __getitem__(self, key):
        return self.assignment[key]

    def __eq__(self, other):
        if not isinstance(other, Colouring):
            return NotImplemented
        return self.kind == other.kind and self.assignment == other.assignment

    def __hash__(self):
        return hash((self.kind, frozenset(self.assignment.items())))

    def __repr__(self):
        return f"Colouring({self.kind}, {len(self.assignment)} items, image={sorted(self.image())})"

    def image(self) -> set[int]:
        return set(self.assignment.values())

    def classes(self) -> dict[int, frozenset]:
        out: dict[int, set] = {}
        for k, c in self.assignment.items():
            out.setdefault(c, set()).add(k)
        return {c: frozenset(s) for c, s in sorted(out.items())}

    def with_colours(self, updates: Mapping) -> "Colouring":
        new = dict(self.assignment)
        for k, c in updates.items():
            new[frozenset(k) if self.kind == EDGE else k] = c
        return Colouring(self.kind, new)

    def relabel(self, mapping: Mapping[int, int]) -> "Colouring":
        return Colouring(self.kind, {k: mapping[c] for k, c in self.assignment.items()})

    def as_list(self, G: Graph) -> list[int]:
        """Colours indexed by vertex (or edge) index of ``G``."""
        check_domain(G, self)
        keys = G.vertices if self.kind == VERTEX else G.edges
        return [self.assignment[k] for k in keys]


def vertex_colouring(mapping: Mapping[str, int]) -> Colouring:
    return Colouring(VERTEX, mapping)


def edge_colouring(mapping: Mapping) -> Colouring:
    return Colouring(EDGE, mapping)


def constant_colouring(G: Graph, kind: str = VERTEX, colour: int = 0) -> Colouring:
    keys = G.vertices if kind == VERTEX else G.edges
    return Colouring(kind, {k: colour for k in keys})


def colouring_from_list(G: Graph, kind: str, colours) -> Colouring:
    keys = G.vertices if kind == VERTEX else G.edges
    return Colouring(kind, dict(zip(keys, (int(c) for c in colours))))


def check_domain(G: Graph, c: Colouring) -> None:
    expected = G.vertices if c.kind == VERTEX else G.edges
    if len(c.assignment) != len(expected) or any(k not in c.assignment for k in expected):
        raise DomainMismatch(f"{c.kind} colouring is not total on this graph")


def is_proper(G: Graph, c: Colouring) -> bool:
    check_domain(G, c)
    col = c.as_list(G)
    if c.kind == VERTEX:
        return all(col[u] != col[v] for u, v in G.edge_ends)
    seen: list[set[int]] = [set() for _ in range(G.n)]
    for i, (u, v) in enumerate(G.edge_ends):
        k = col[i]
        if k in seen[u] or k in seen[v]:
            return False
        seen[u].add(k)
        seen[v].add(k)
    return True
