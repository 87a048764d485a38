"""Finite truncations of the spine graphs G_A / H_A and the double stars DS / DC.

``G_A`` hangs the members of each family set ``A_i`` as leaves off a rung
vertex ``z'i`` attached to spine vertex ``zi``; ``H_A`` additionally turns every
``A_i`` into a clique.  The spine ``z0 z1 ...`` is infinite in the original
object; here it stops at ``z{n-1}`` and a tail path ``t0 t1 ...`` of
configurable length is hung off its last vertex so that the far end does not
mirror ``z0``.  Truncation can still create symmetries the infinite graph does
not have, which is why :func:`verify_claim1` reports instead of asserting.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidSets, InvalidSpec
from .graph import Graph, make_graph, max_degree
from .symmetry import automorphisms, orbit_partition

GA = "GA"
HA = "HA"
DS = "DS"
DC = "DC"

X_PRIME = "x'"
Y_PRIME = "y'"

_RESERVED = re.compile(r"^(z\d+|z'\d+|t\d+|x'|y')$")


def z(i: int) -> str:
    return f"z{i}"


def zp(i: int) -> str:
    return f"z'{i}"


def t(j: int) -> str:
    return f"t{j}"


@dataclass(frozen=True)
class AcceptableFamilySpec:
    """First ``n`` members of an acceptable family plus the truncation tail."""

    sets: tuple[tuple[str, ...], ...]
    tail_length: int = 3

    def __post_init__(self):
        sets = tuple(tuple(A) for A in self.sets)
        object.__setattr__(self, "sets", sets)
        if not sets:
            raise InvalidSpec("family must have at least one set")
        if self.tail_length < 0:
            raise InvalidSpec("tail_length must be non-negative")
        seen: set[str] = set()
        for i, A in enumerate(sets):
            if not A:
                raise InvalidSpec(f"set {i} is empty")
            for a in A:
                if not isinstance(a, str):
                    raise InvalidSpec(f"vertex id {a!r} is not a string")
                if a in seen:
                    raise InvalidSpec(f"{a!r} appears twice (sets must be pairwise disjoint)")
                if _RESERVED.match(a):
                    raise InvalidSpec(f"{a!r} collides with a reserved vertex name")
                seen.add(a)

    @property
    def n(self) -> int:
        return len(self.sets)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(A) for A in self.sets)

    def union(self) -> tuple[str, ...]:
        return tuple(a for A in self.sets for a in A)

    def is_k_acceptable(self, k: int) -> bool:
        return max(self.sizes) <= k


def spec_from_sizes(sizes: Sequence[int], tail_length: int = 3) -> AcceptableFamilySpec:
    """Family with ``A_i = {a{i}_0, ..., a{i}_{s-1}}``."""
    return AcceptableFamilySpec(
        tuple(tuple(f"a{i}_{j}" for j in range(s)) for i, s in enumerate(sizes)), tail_length
    )


@dataclass(frozen=True)
class FamilyGraph:
    graph: Graph
    spec: AcceptableFamilySpec
    variant: str
    roles: dict

    def family_index(self, v: str) -> int | None:
        role, i = self.roles[v]
        return i if role == "family" else None

    @property
    def spine(self) -> tuple[str, ...]:
        """Spine vertices followed by the tail, in path order."""
        return tuple(z(i) for i in range(self.spec.n)) + tuple(
            t(j) for j in range(self.spec.tail_length)
        )

    @property
    def rungs(self) -> tuple[str, ...]:
        return tuple(zp(i) for i in range(self.spec.n))


def _family_graph(spec: AcceptableFamilySpec, variant: str) -> FamilyGraph:
    n = spec.n
    roles: dict[str, tuple[str, int]] = {}
    vertices: list[str] = []
    for i in range(n):
        vertices.append(z(i))
        roles[z(i)] = ("z", i)
    for i in range(n):
        vertices.append(zp(i))
        roles[zp(i)] = ("z_prime", i)
    for i, A in enumerate(spec.sets):
        for a in A:
            vertices.append(a)
            roles[a] = ("family", i)
    for j in range(spec.tail_length):
        vertices.append(t(j))
        roles[t(j)] = ("tail", j)

    edges: list[tuple[str, str]] = []
    spine = [z(i) for i in range(n)] + [t(j) for j in range(spec.tail_length)]
    edges += list(zip(spine, spine[1:]))
    edges += [(z(i), zp(i)) for i in range(n)]
    edges += [(a, zp(i)) for i, A in enumerate(spec.sets) for a in A]
    if variant == HA:
        edges += [pair for A in spec.sets for pair in combinations(A, 2)]
    return FamilyGraph(make_graph(vertices, edges), spec, variant, roles)


def _check_spec(spec) -> AcceptableFamilySpec:
    if not isinstance(spec, AcceptableFamilySpec):
        raise InvalidSpec(f"expected AcceptableFamilySpec, got {type(spec).__name__}")
    return spec


def build_GA(spec: AcceptableFamilySpec) -> FamilyGraph:
    return _family_graph(_check_spec(spec), GA)


def build_HA(spec: AcceptableFamilySpec) -> FamilyGraph:
    return _family_graph(_check_spec(spec), HA)


def expected_max_degree(spec: AcceptableFamilySpec) -> int:
    return max(3, max(spec.sizes) + 1)


# ---------------------------------------------------------------------------
# double stars


@dataclass(frozen=True)
class TwoStarGraph:
    graph: Graph
    X: tuple[str, ...]
    Y: tuple[str, ...]
    variant: str
    x_prime: str = X_PRIME
    y_prime: str = Y_PRIME


def _check_sets(X: Iterable[str], Y: Iterable[str]) -> tuple[tuple[str, ...], tuple[str, ...]]:
    X, Y = tuple(X), tuple(Y)
    if not X or not Y:
        raise InvalidSets("X and Y must be non-empty")
    if len(set(X)) != len(X) or len(set(Y)) != len(Y):
        raise InvalidSets("repeated vertex id")
    if set(X) & set(Y):
        raise InvalidSets("X and Y must be disjoint")
    if {X_PRIME, Y_PRIME} & (set(X) | set(Y)):
        raise InvalidSets("x' and y' are reserved")
    return X, Y


def _two_star(X, Y, variant: str) -> TwoStarGraph:
    X, Y = _check_sets(X, Y)
    edges = [(X_PRIME, Y_PRIME)]
    edges += [(X_PRIME, x) for x in X]
    edges += [(Y_PRIME, y) for y in Y]
    if variant == DC:
        edges += list(combinations(X, 2)) + list(combinations(Y, 2))
    G = make_graph(X + Y + (X_PRIME, Y_PRIME), edges)
    return TwoStarGraph(G, X, Y, variant)


def build_DS(X: Iterable[str], Y: Iterable[str]) -> TwoStarGraph:
    return _two_star(X, Y, DS)


def build_DC(X: Iterable[str], Y: Iterable[str]) -> TwoStarGraph:
    return _two_star(X, Y, DC)


def two_star_from_sizes(p: int, q: int, variant: str = DS) -> TwoStarGraph:
    return _two_star([f"x{i}" for i in range(p)], [f"y{j}" for j in range(q)], variant)


# ---------------------------------------------------------------------------
# orbit structure of the truncations


@dataclass(frozen=True)
class OrbitReport:
    holds: bool
    orbit_partition: tuple[tuple[str, ...], ...]
    expected_partition: tuple[tuple[str, ...], ...]
    group_order: int

    def spurious(self) -> list[tuple[str, ...]]:
        """Orbits that differ from the expected partition."""
        exp = set(self.expected_partition)
        return [o for o in self.orbit_partition if o not in exp]


def expected_orbits(fg: FamilyGraph) -> tuple[tuple[str, ...], ...]:
    G = fg.graph
    blocks = []
    in_family = set(fg.spec.union())
    for A in fg.spec.sets:
        blocks.append(tuple(sorted(A, key=G.index.__getitem__)))
    blocks += [(v,) for v in G.vertices if v not in in_family]
    return tuple(sorted(blocks, key=lambda b: G.index[b[0]]))


def verify_claim1(fg: FamilyGraph) -> OrbitReport:
    """Compare the actual orbit partition with ``{A_i} ∪ singletons``."""
    group = automorphisms(fg.graph)
    orbits = tuple(orbit_partition(group))
    expected = expected_orbits(fg)
    return OrbitReport(orbits == expected, orbits, expected, group.order)


def degree_formula_holds(spec: AcceptableFamilySpec) -> tuple[int, int, int]:
    """``(max_degree(G_A), max_degree(H_A), expected_max_degree(spec))``."""
    return (
        max_degree(build_GA(spec).graph),
        max_degree(build_HA(spec).graph),
        expected_max_degree(spec),
    )
