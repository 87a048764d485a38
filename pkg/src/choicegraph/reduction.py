"""Reductions, the reduction closure of a colouring and its well-ordering.

A reduction recolours every element of one colour ``b`` with another colour
``a`` already in use.  The closure ``C_c`` of a base colouring ``c`` under
reductions consists of colourings whose classes are unions of base classes,
each block labelled by one of the base colours it contains.

The order on ``C_c``: first compare images, the one missing the least colour
on which the images disagree is smaller; with equal images, take the least
colour ``beta`` whose preimages differ and compare the sets ``S1``, ``S2`` of
base colours merged into ``beta``: the side owning ``min(S1 ^ S2)`` is
smaller.  A reduction is always smaller than the colouring it came from, so
the least element satisfying a property has no reduction satisfying it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from functools import cmp_to_key
from typing import Iterator

from .caps import get_caps
from .errors import (
    ChainInvariantError,
    ColourNotInImage,
    DifferentBase,
    PropertyNotSatisfied,
    SameColour,
    TooLarge,
)
from .graph import EDGE, KINDS, VERTEX, Colouring, Graph, is_proper
from .oracle import restricted_growth_strings
from .symmetry import is_distinguishing

PROPER = "proper"
DISTINGUISHING = "distinguishing"


class Order(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class PropertyTag:
    target: str
    kind: str

    def __post_init__(self):
        if self.target not in (PROPER, DISTINGUISHING):
            raise ValueError(f"unknown property {self.target!r}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")

    def holds(self, G: Graph, c: Colouring) -> bool:
        if c.kind != self.kind:
            raise ValueError(f"{self} evaluated on a {c.kind} colouring")
        if self.target == PROPER:
            return is_proper(G, c)
        return is_distinguishing(G, c)

    def __str__(self):
        return f"{self.target}-{self.kind}"


PROPER_VERTEX = PropertyTag(PROPER, VERTEX)
PROPER_EDGE = PropertyTag(PROPER, EDGE)
DIST_VERTEX = PropertyTag(DISTINGUISHING, VERTEX)
DIST_EDGE = PropertyTag(DISTINGUISHING, EDGE)


def reduce(c: Colouring, b: int, a: int) -> Colouring:
    """Recolour every ``b``-coloured element with ``a``."""
    img = c.image()
    for x in (a, b):
        if x not in img:
            raise ColourNotInImage(x)
    if a == b:
        raise SameColour(a)
    return Colouring(c.kind, {k: (a if v == b else v) for k, v in c.assignment.items()})


def reduction_pairs(c: Colouring) -> Iterator[tuple[int, int]]:
    """All ``(b, a)`` pairs in lexicographic order."""
    img = sorted(c.image())
    for b in img:
        for a in img:
            if a != b:
                yield b, a


# ---------------------------------------------------------------------------
# chain


@dataclass(frozen=True)
class ChainElement:
    colouring: Colouring
    merge_partition: dict[int, frozenset[int]]

    def __hash__(self):
        return hash(self.colouring)

    def __eq__(self, other):
        return isinstance(other, ChainElement) and self.colouring == other.colouring


def chain_element(d: Colouring, base: Colouring) -> ChainElement:
    """Attach merge data; fails unless ``d``'s classes coarsen ``base``'s."""
    if d.kind != base.kind or d.assignment.keys() != base.assignment.keys():
        raise DifferentBase("colourings live on different domains")
    live_of: dict[int, int] = {}
    blocks: dict[int, set[int]] = {}
    for k, b in base.assignment.items():
        live = d.assignment[k]
        if live_of.setdefault(b, live) != live:
            raise DifferentBase(f"base colour {b} split between {live_of[b]} and {live}")
        blocks.setdefault(live, set()).add(b)
    for live, block in blocks.items():
        if live not in block:
            raise DifferentBase(f"colour {live} labels a block that does not contain it")
    return ChainElement(d, {live: frozenset(bl) for live, bl in sorted(blocks.items())})


def _check_chain_caps(c: Colouring) -> None:
    caps = get_caps()
    if len(c.image()) > caps.chain_image:
        raise TooLarge(f"image of size {len(c.image())} exceeds chain cap {caps.chain_image}")
    if len(c.assignment) > caps.chain_domain:
        raise TooLarge(f"domain of size {len(c.assignment)} exceeds chain cap {caps.chain_domain}")


def enumerate_chain(c: Colouring) -> list[ChainElement]:
    """``C_c`` in breadth-first discovery order (reductions tried lexicographically)."""
    _check_chain_caps(c)
    seen = {c}
    order = [c]
    queue = deque([c])
    while queue:
        d = queue.popleft()
        for b, a in reduction_pairs(d):
            s = reduce(d, b, a)
            if s not in seen:
                seen.add(s)
                order.append(s)
                queue.append(s)
    return [chain_element(d, c) for d in order]


def labelled_coarsenings(c: Colouring) -> set[Colouring]:
    """Every coarsening of ``c``'s colour classes, each block labelled by one of its colours.

    Independent of :func:`enumerate_chain`: built from set partitions of the
    image rather than from repeated reductions.
    """
    colours = sorted(c.image())
    out = set()
    for rgs in restricted_growth_strings(len(colours), len(colours)):
        blocks: dict[int, list[int]] = {}
        for colour, blk in zip(colours, rgs):
            blocks.setdefault(blk, []).append(colour)
        block_list = list(blocks.values())

        def labellings(i, acc):
            if i == len(block_list):
                yield dict(acc)
                return
            for lab in block_list[i]:
                for colour in block_list[i]:
                    acc[colour] = lab
                yield from labellings(i + 1, acc)

        for relabel in labellings(0, {}):
            out.add(c.relabel(relabel))
    return out


def compare(e1: ChainElement, e2: ChainElement, base: Colouring) -> Order:
    for e in (e1, e2):
        if chain_element(e.colouring, base).merge_partition != e.merge_partition:
            raise DifferentBase("merge data does not match the base colouring")
    if e1.colouring == e2.colouring:
        return Order.EQUAL
    alpha = base.alpha
    img1, img2 = e1.colouring.image(), e2.colouring.image()
    if img1 != img2:
        for beta in range(alpha):
            if (beta in img1) != (beta in img2):
                return Order.LESS if beta in img2 else Order.GREATER
        raise ChainInvariantError("images differ outside 0..alpha-1")
    empty: frozenset[int] = frozenset()
    for beta in range(alpha):
        s1 = e1.merge_partition.get(beta, empty)
        s2 = e2.merge_partition.get(beta, empty)
        if s1 == s2:
            continue
        # a missing delta is treated as alpha, i.e. larger than any colour
        d1 = min(s1 - s2, default=alpha)
        d2 = min(s2 - s1, default=alpha)
        if d1 == d2:
            raise ChainInvariantError(f"no delta on either side at colour {beta}")
        return Order.LESS if d1 < d2 else Order.GREATER
    raise ChainInvariantError("distinct colourings with identical preimages")


def sort_chain(elements: list[ChainElement], base: Colouring) -> list[ChainElement]:
    return sorted(elements, key=cmp_to_key(lambda x, y: int(compare(x, y, base))))


# ---------------------------------------------------------------------------
# irreducibility


def is_irreducible(G: Graph, c: Colouring, phi: PropertyTag) -> bool:
    if not phi.holds(G, c):
        raise PropertyNotSatisfied(f"colouring is not {phi}")
    return not any(phi.holds(G, reduce(c, b, a)) for b, a in reduction_pairs(c))


def greedy_trace(G: Graph, c: Colouring, phi: PropertyTag) -> tuple[Colouring, list[tuple[int, int]]]:
    """Greedy reduction path: the reduced colouring and the ``(b, a)`` steps taken."""
    if not phi.holds(G, c):
        raise PropertyNotSatisfied(f"colouring is not {phi}")
    steps = []
    while True:
        for b, a in reduction_pairs(c):
            d = reduce(c, b, a)
            if phi.holds(G, d):
                c = d
                steps.append((b, a))
                break
        else:
            return c, steps


def find_irreducible_greedy(G: Graph, c: Colouring, phi: PropertyTag) -> Colouring:
    return greedy_trace(G, c, phi)[0]


def find_least_in_chain(G: Graph, c: Colouring, phi: PropertyTag) -> ChainElement:
    if not phi.holds(G, c):
        raise PropertyNotSatisfied(f"colouring is not {phi}")
    chain = enumerate_chain(c)
    good = [e for e in chain if phi.holds(G, e.colouring)]
    return sort_chain(good, c)[0]


def is_total_order_on(elements: list[ChainElement], base: Colouring) -> dict[str, bool]:
    """Exhaustive axiom audit of the comparator on ``elements``."""
    cmp = {(i, j): compare(x, y, base) for i, x in enumerate(elements) for j, y in enumerate(elements)}
    idx = range(len(elements))
    total = all(cmp[i, j] != Order.EQUAL or i == j for i in idx for j in idx)
    antisym = all(cmp[i, j] == -cmp[j, i] for i in idx for j in idx)
    trans = all(
        cmp[i, k] == Order.LESS
        for i in idx
        for j in idx
        if cmp[i, j] == Order.LESS
        for k in idx
        if cmp[j, k] == Order.LESS
    )
    return {"total": total, "antisymmetric": antisym, "transitive": trans}


def least_elements(subset: list[ChainElement], base: Colouring) -> list[ChainElement]:
    """Members of ``subset`` that are <= every other member."""
    return [x for x in subset if all(compare(x, y, base) != Order.GREATER for y in subset)]


__all__ = [
    "Order",
    "PropertyTag",
    "PROPER",
    "DISTINGUISHING",
    "PROPER_VERTEX",
    "PROPER_EDGE",
    "DIST_VERTEX",
    "DIST_EDGE",
    "reduce",
    "reduction_pairs",
    "ChainElement",
    "chain_element",
    "enumerate_chain",
    "labelled_coarsenings",
    "compare",
    "sort_chain",
    "is_irreducible",
    "greedy_trace",
    "find_irreducible_greedy",
    "find_least_in_chain",
    "is_total_order_on",
    "least_elements",
]
