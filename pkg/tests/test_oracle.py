import itertools

import pytest
from hypothesis import assume, given, settings

from choicegraph.errors import K1K2Component, TooLarge
from choicegraph.families import build_GA, build_HA, spec_from_sizes
from choicegraph.graph import is_proper, make_graph
from choicegraph.oracle import (
    chromatic_index,
    chromatic_number,
    distinguishing_index,
    distinguishing_number,
    restricted_growth_strings,
)
from choicegraph.symmetry import automorphisms, is_distinguishing

from conftest import complete, cycle, path, small_graphs, star

BELL = [1, 1, 2, 5, 15, 52, 203]


@pytest.mark.parametrize("n", range(0, 7))
def test_restricted_growth_strings_count_set_partitions(n):
    strings = list(restricted_growth_strings(n, max(n, 1)))
    assert len(strings) == BELL[n]
    assert len(set(strings)) == len(strings)


def test_rgs_respects_colour_bound():
    assert all(max(s) < 2 for s in restricted_growth_strings(5, 2))
    assert len(list(restricted_growth_strings(5, 2))) == 2**4


@pytest.mark.parametrize(
    "G, D",
    [(complete(3), 3), (path(4), 2), (cycle(5), 3), (cycle(6), 2), (star(3), 3), (complete(1), 1)],
)
def test_distinguishing_numbers(G, D):
    res = distinguishing_number(G)
    assert res.value == D
    assert is_distinguishing(G, res.witness)
    assert len(res.witness.image()) == D


def test_family_example():
    assert distinguishing_number(build_GA(spec_from_sizes([2, 2], 3)).graph).value == 2


@pytest.mark.parametrize("G, D", [(path(4), 2), (star(3), 3), (cycle(5), 3), (complete(4), 3)])
def test_distinguishing_indices(G, D):
    res = distinguishing_index(G)
    assert res.value == D
    assert is_distinguishing(G, res.witness)


def test_k2_components_rejected():
    with pytest.raises(K1K2Component):
        distinguishing_index(complete(2))
    with pytest.raises(K1K2Component):
        distinguishing_index(make_graph(["a", "b", "c", "d", "e"], [("a", "b"), ("c", "d"), ("d", "e")]))


@settings(max_examples=120, deadline=None)
@given(small_graphs(max_n=7))
def test_pruned_search_matches_exhaustive(G):
    a = distinguishing_number(G, "pruned")
    b = distinguishing_number(G, "exhaustive")
    assert a.value == b.value
    assert is_distinguishing(G, a.witness)
    assert (a.value == 1) == automorphisms(G).is_trivial


@settings(max_examples=60, deadline=None)
@given(small_graphs(min_n=3, max_n=6))
def test_pruned_index_matches_exhaustive(G):
    assume(G.m <= 10)
    try:
        a = distinguishing_index(G, "pruned")
    except K1K2Component:
        return
    assert a.value == distinguishing_index(G, "exhaustive").value


def test_exhaustive_cap(monkeypatch):
    monkeypatch.setenv("CHOICEGRAPH_CAPS", "oracle_exhaustive=4")
    with pytest.raises(TooLarge):
        distinguishing_number(path(5), "exhaustive")


@pytest.mark.parametrize("G, chi", [(complete(4), 4), (cycle(5), 3), (cycle(6), 2), (path(1), 1)])
def test_chromatic_numbers(G, chi):
    res = chromatic_number(G)
    assert res.value == chi and is_proper(G, res.witness)


def test_chromatic_index_examples():
    assert chromatic_index(complete(3)).value == 3
    assert chromatic_index(star(4)).value == 4
    assert chromatic_index(complete(4)).value == 3


def test_ha_chromatic_number_has_clique_bound():
    HA = build_HA(spec_from_sizes([3], 0)).graph
    assert chromatic_number(HA).value >= 4


def _brute_chromatic(G):
    for k in range(1, G.n + 1):
        for cols in itertools.product(range(k), repeat=G.n):
            if all(cols[u] != cols[v] for u, v in G.edge_ends):
                return k
    return 0


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_n=6))
def test_chromatic_number_matches_brute_force(G):
    assert chromatic_number(G).value == _brute_chromatic(G)
