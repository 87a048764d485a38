import itertools

from hypothesis import strategies as st

from choicegraph.graph import EDGE, VERTEX, colouring_from_list, make_graph


@st.composite
def small_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph([f"v{i}" for i in range(n)], [(f"v{u}", f"v{v}") for u, v in chosen])


@st.composite
def graphs_with_colouring(draw, kind=VERTEX, max_n=7, max_colours=3):
    G = draw(small_graphs(max_n=max_n))
    size = G.n if kind == VERTEX else G.m
    cols = draw(st.lists(st.integers(0, max_colours - 1), min_size=size, max_size=size))
    return G, colouring_from_list(G, kind, cols)


def graph(n, edges, prefix="v"):
    return make_graph([f"{prefix}{i}" for i in range(n)], [(f"{prefix}{u}", f"{prefix}{v}") for u, v in edges])


def path(n):
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return graph(n, list(itertools.combinations(range(n), 2)))


def star(k):
    return graph(k + 1, [(0, i) for i in range(1, k + 1)])


__all__ = ["EDGE", "VERTEX"]
