import math

import pytest
from hypothesis import given, settings

from choicegraph.caps import get_caps
from choicegraph.errors import TooLarge
from choicegraph.graph import EDGE, VERTEX, Colouring, constant_colouring
from choicegraph.symmetry import (
    automorphisms,
    brute_force_automorphisms,
    induced_edge_perm,
    is_distinguishing,
    is_fixed,
    is_stabilized,
    orbit_partition,
    preserves,
    preserving_automorphisms,
)

from conftest import complete, cycle, graph, graphs_with_colouring, path, small_graphs, star


@pytest.mark.parametrize(
    "G, order",
    [(path(4), 2), (cycle(5), 10), (complete(4), 24), (star(3), 6), (cycle(6), 12)],
)
def test_group_orders(G, order):
    assert automorphisms(G).order == order


def test_rigid_graph_has_trivial_group():
    # triangle 2-3-4 with pendant paths of lengths 2 and 1 at different corners
    G = graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 4), (4, 5)])
    group = automorphisms(G)
    assert group.is_trivial and len(brute_force_automorphisms(G)) == 1
    assert is_distinguishing(G, constant_colouring(G))


def test_large_group_lists_generators_only():
    group = automorphisms(complete(12))
    assert group.order == math.factorial(12)
    assert not group.enumerated and group.generators


def test_automorphism_cap(monkeypatch):
    monkeypatch.setenv("CHOICEGRAPH_CAPS", "automorphism_vertices=3")
    with pytest.raises(TooLarge):
        automorphisms(path(4))


@settings(max_examples=150, deadline=None)
@given(small_graphs())
def test_group_matches_brute_force(G):
    assert set(automorphisms(G).elements) == set(brute_force_automorphisms(G))


@settings(max_examples=150, deadline=None)
@given(graphs_with_colouring(VERTEX))
def test_vertex_preserving_group_matches_brute_force(Gc):
    G, c = Gc
    group = preserving_automorphisms(G, c)
    brute = brute_force_automorphisms(G, c)
    assert set(group.elements) == set(brute)
    assert is_distinguishing(G, c) == (len(brute) == 1)


@settings(max_examples=150, deadline=None)
@given(graphs_with_colouring(EDGE))
def test_edge_preserving_group_matches_brute_force(Gc):
    G, c = Gc
    brute = brute_force_automorphisms(G, c)
    assert set(preserving_automorphisms(G, c).elements) == set(brute)
    assert is_distinguishing(G, c) == (len(brute) == 1)


@settings(max_examples=80, deadline=None)
@given(small_graphs())
def test_orbits_are_unions_of_images(G):
    group = automorphisms(G)
    for orbit in orbit_partition(group):
        v = G.index[orbit[0]]
        assert {G.vertices[g[v]] for g in group.elements} == set(orbit)


def test_fixed_and_stabilized_on_star():
    G = star(3)
    group = automorphisms(G)
    assert is_fixed(group, ["v0"])
    assert not is_fixed(group, ["v1"])
    assert is_stabilized(group, ["v1", "v2", "v3"])


def test_induced_edge_perm_is_a_permutation():
    G = cycle(5)
    for p in automorphisms(G).elements:
        assert sorted(induced_edge_perm(G, p)) == list(range(G.m))


def test_distinguishing_examples():
    K3 = complete(3)
    assert not is_distinguishing(K3, Colouring(VERTEX, {"v0": 0, "v1": 0, "v2": 1}))
    assert is_distinguishing(K3, Colouring(VERTEX, {"v0": 0, "v1": 1, "v2": 2}))
    P4 = path(4)
    assert not is_distinguishing(P4, constant_colouring(P4))
    assert is_distinguishing(P4, Colouring(VERTEX, {"v0": 1, "v1": 0, "v2": 0, "v3": 0}))


def test_every_element_preserves_its_colouring():
    G = cycle(6)
    c = Colouring(VERTEX, {f"v{i}": i % 2 for i in range(6)})
    for p in preserving_automorphisms(G, c).elements:
        assert preserves(G, p, c)


def test_default_caps_are_sane():
    caps = get_caps()
    assert caps.automorphism_vertices >= 500
