import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from choicegraph.errors import ColourNotInImage, DifferentBase, PropertyNotSatisfied, SameColour, TooLarge
from choicegraph.graph import EDGE, VERTEX, Colouring, constant_colouring, make_graph
from choicegraph.oracle import restricted_growth_strings
from choicegraph.reduction import (
    DIST_VERTEX,
    PROPER_VERTEX,
    Order,
    chain_element,
    compare,
    enumerate_chain,
    find_irreducible_greedy,
    find_least_in_chain,
    greedy_trace,
    is_irreducible,
    is_total_order_on,
    labelled_coarsenings,
    least_elements,
    reduce,
    reduction_pairs,
    sort_chain,
)

from conftest import complete, graphs_with_colouring, path

# number of labelled coarsenings of an m-colour base (set partitions weighted by block sizes)
LABELLED_COARSENINGS = [1, 1, 3, 10, 41, 196, 1057]


def _c(*cols):
    return Colouring(VERTEX, {f"u{i}": c for i, c in enumerate(cols)})


def test_reduce_examples():
    assert reduce(_c(0, 1, 1), 1, 0) == _c(0, 0, 0)
    assert reduce(_c(0, 1, 2), 2, 1) == _c(0, 1, 1)
    with pytest.raises(ColourNotInImage):
        reduce(_c(0, 1), 5, 0)
    with pytest.raises(SameColour):
        reduce(_c(0, 1), 1, 1)


def test_reduction_pairs_are_lexicographic():
    assert list(reduction_pairs(_c(0, 1, 2))) == [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]


@pytest.mark.parametrize("m", range(1, 6))
def test_chain_size_counts_labelled_coarsenings(m):
    chain = enumerate_chain(_c(*range(m)))
    assert len(chain) == LABELLED_COARSENINGS[m]


def test_two_colour_chain():
    chain = enumerate_chain(_c(0, 1))
    assert {e.colouring for e in chain} == {_c(0, 1), _c(0, 0), _c(1, 1)}


def test_chain_caps():
    with pytest.raises(TooLarge):
        enumerate_chain(_c(*range(7)))


def test_merge_partition_is_checked():
    base = _c(0, 1, 2)
    e = chain_element(_c(0, 0, 2), base)
    assert e.merge_partition == {0: frozenset({0, 1}), 2: frozenset({2})}
    with pytest.raises(DifferentBase):
        chain_element(_c(0, 1, 1), _c(0, 0, 1))
    with pytest.raises(DifferentBase):
        chain_element(_c(3, 3, 2), base)


def test_condition_one_example():
    base = _c(0, 1, 2)
    e1 = chain_element(reduce(base, 1, 0), base)
    e2 = chain_element(reduce(base, 2, 0), base)
    assert compare(e1, e2, base) == Order.LESS
    assert compare(e2, e1, base) == Order.GREATER
    assert compare(e1, e1, base) == Order.EQUAL


def test_condition_two_without_a_delta_on_one_side():
    base = _c(0, 1, 2)
    # equal images {1, 2}; colour 1 absorbs {0, 1} in one and only {1} in the other
    e1 = chain_element(_c(1, 1, 2), base)
    e2 = chain_element(_c(2, 1, 2), base)
    assert compare(e1, e2, base) == Order.LESS


def test_reductions_are_smaller():
    base = _c(0, 1, 2, 3)
    for e in enumerate_chain(base):
        for b, a in reduction_pairs(e.colouring):
            r = chain_element(reduce(e.colouring, b, a), base)
            assert compare(r, e, base) == Order.LESS


def _bases(max_domain=5, max_colours=4):
    for n in range(1, max_domain + 1):
        for s in restricted_growth_strings(n, max_colours):
            yield _c(*s)


def test_comparator_axioms_on_every_small_base():
    for base in _bases():
        chain = enumerate_chain(base)
        assert {e.colouring for e in chain} == labelled_coarsenings(base)
        assert all(is_total_order_on(chain, base).values())


def test_every_subset_has_one_least_element():
    rng = random.Random(0)
    for base in _bases(4, 4):
        chain = enumerate_chain(base)
        if len(chain) <= 10:
            subsets = [list(s) for r in range(1, len(chain) + 1) for s in itertools.combinations(chain, r)]
        else:
            subsets = [rng.sample(chain, rng.randint(1, len(chain))) for _ in range(50)]
        for sub in subsets:
            assert len(least_elements(sub, base)) == 1


def test_sort_chain_agrees_with_least_elements():
    base = _c(0, 1, 2, 0)
    ordered = sort_chain(enumerate_chain(base), base)
    assert least_elements(ordered, base) == [ordered[0]]


def test_edge_colourings_form_chains_too():
    G = path(4)
    base = Colouring(EDGE, {e: i for i, e in enumerate(G.edges)})
    assert len(enumerate_chain(base)) == 10


# ---------------------------------------------------------------------------
# irreducibility


def test_irreducible_examples():
    rigid = make_graph(
        [f"v{i}" for i in range(6)],
        [("v0", "v1"), ("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v2", "v4"), ("v4", "v5")],
    )
    assert is_irreducible(rigid, constant_colouring(rigid), DIST_VERTEX)
    K2 = complete(2)
    assert is_irreducible(K2, Colouring(VERTEX, {"v0": 0, "v1": 1}), PROPER_VERTEX)
    P4 = path(4)
    c = Colouring(VERTEX, {"v0": 0, "v1": 1, "v2": 0, "v3": 2})
    expected = not any(DIST_VERTEX.holds(P4, reduce(c, b, a)) for b, a in reduction_pairs(c))
    assert is_irreducible(P4, c, DIST_VERTEX) == expected


def test_irreducible_needs_the_property():
    with pytest.raises(PropertyNotSatisfied):
        is_irreducible(complete(3), constant_colouring(complete(3)), PROPER_VERTEX)


def test_greedy_keeps_irreducible_input():
    K3 = complete(3)
    c = Colouring(VERTEX, {"v0": 0, "v1": 1, "v2": 2})
    assert find_irreducible_greedy(K3, c, PROPER_VERTEX) == c


def test_least_for_k2_is_the_base():
    K2 = complete(2)
    c = Colouring(VERTEX, {"v0": 0, "v1": 1})
    assert find_least_in_chain(K2, c, DIST_VERTEX).colouring == c


@settings(max_examples=60, deadline=None)
@given(graphs_with_colouring(VERTEX, max_n=6, max_colours=4), st.sampled_from([PROPER_VERTEX, DIST_VERTEX]))
def test_greedy_and_least_are_both_irreducible(Gc, phi):
    G, c = Gc
    if not phi.holds(G, c):
        return
    greedy, steps = greedy_trace(G, c, phi)
    assert is_irreducible(G, greedy, phi)
    assert len(steps) < len(c.image())
    least = find_least_in_chain(G, c, phi)
    assert is_irreducible(G, least.colouring, phi)
    good = [e for e in enumerate_chain(c) if phi.holds(G, e.colouring)]
    assert all(compare(least, e, c) != Order.GREATER for e in good)
