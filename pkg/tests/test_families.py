import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from choicegraph.errors import InvalidSets, InvalidSpec
from choicegraph.families import (
    AcceptableFamilySpec,
    build_DC,
    build_DS,
    build_GA,
    build_HA,
    expected_max_degree,
    spec_from_sizes,
    verify_claim1,
)
from choicegraph.graph import degree, max_degree


def test_smallest_instance_is_a_path():
    fg = build_GA(AcceptableFamilySpec((("a",),), 0))
    assert fg.graph.n == 3
    assert set(fg.graph.edges) == {frozenset(("z0", "z'0")), frozenset(("z'0", "a"))}


def test_counts_without_tail():
    G = build_GA(spec_from_sizes([2, 3], 0)).graph
    assert (G.n, G.m) == (9, 8)


@pytest.mark.parametrize("tail", [0, 2, 3, 5])
def test_max_degree_of_2_3(tail):
    spec = spec_from_sizes([2, 3], tail)
    assert max_degree(build_GA(spec).graph) == max_degree(build_HA(spec).graph) == 4


def test_tail_is_a_path_from_last_spine_vertex():
    G = build_GA(spec_from_sizes([1, 1], 3)).graph
    assert G.has_edge("z1", "t0") and G.has_edge("t0", "t1") and G.has_edge("t1", "t2")
    assert degree(G, "t2") == 1


def test_ha_adds_cliques():
    spec = spec_from_sizes([3], 0)
    assert build_HA(spec).graph.m == build_GA(spec).graph.m + 3
    single = spec_from_sizes([1], 3)
    assert set(build_HA(single).graph.edges) == set(build_GA(single).graph.edges)


def test_family_vertex_degrees():
    spec = spec_from_sizes([2, 3])
    GA, HA = build_GA(spec), build_HA(spec)
    for i, A in enumerate(spec.sets):
        for a in A:
            assert degree(GA.graph, a) == 1
            assert degree(HA.graph, a) == len(A)


@pytest.mark.parametrize(
    "sets, tail",
    [((), 3), ((("a",), ()), 3), ((("a",), ("a",)), 3), ((("z0",),), 3), ((("t1",),), 3), ((("a",),), -1)],
)
def test_invalid_specs(sets, tail):
    with pytest.raises(InvalidSpec):
        AcceptableFamilySpec(sets, tail)


def test_expected_max_degree_examples():
    assert expected_max_degree(spec_from_sizes([1])) == 3
    assert expected_max_degree(spec_from_sizes([2, 3])) == 4
    assert expected_max_degree(spec_from_sizes([9])) == 10


def test_two_star_sizes():
    assert build_DS(["x"], ["y"]).graph.m == 3
    ds = build_DS(["x1", "x2"], ["y1", "y2", "y3"])
    assert (ds.graph.n, ds.graph.m) == (7, 6)
    assert build_DC(["x1", "x2"], ["y1", "y2", "y3"]).graph.m == 10


@pytest.mark.parametrize("X, Y", [([], ["y"]), (["a"], ["a"]), (["x'"], ["y"]), (["x", "x"], ["y"])])
def test_invalid_two_star_sets(X, Y):
    with pytest.raises(InvalidSets):
        build_DS(X, Y)


def test_orbit_structure_examples():
    assert verify_claim1(build_GA(spec_from_sizes([1, 2, 3], 2))).holds
    flip = verify_claim1(build_GA(spec_from_sizes([2, 2], 0)))
    assert not flip.holds
    assert ("z0", "z1") in flip.orbit_partition
    assert verify_claim1(build_GA(spec_from_sizes([2, 2], 3))).holds


def test_orbit_structure_fails_when_a_branch_mirrors_the_tail():
    # the branch z0 - z'0 - a has the shape of the tail; a truncation artefact
    rep = verify_claim1(build_GA(spec_from_sizes([1, 2], 3)))
    assert not rep.holds
    assert rep.spurious()


def test_orbit_structure_for_distinct_sizes_with_a_large_first_set():
    for sizes in itertools.permutations([2, 3, 4]):
        assert verify_claim1(build_HA(spec_from_sizes(sizes, 3))).holds


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(1, 6), min_size=2, max_size=5),
    st.sampled_from([0, 2, 3]),
)
def test_degree_formula_when_n_at_least_two(sizes, tail):
    spec = spec_from_sizes(sizes, tail)
    if not (tail == 0 and sizes == [1, 1]):
        assert max_degree(build_GA(spec).graph) == expected_max_degree(spec)
        assert max_degree(build_HA(spec).graph) == expected_max_degree(spec)


def test_degree_formula_degenerate_cases():
    # with every set a singleton and no z vertex of degree 3 the formula's floor of 3 is not attained
    assert max_degree(build_GA(spec_from_sizes([1], 3)).graph) == 2
    assert max_degree(build_GA(spec_from_sizes([1, 1], 0)).graph) == 2
    assert max_degree(build_GA(spec_from_sizes([1, 1], 2)).graph) == 3
