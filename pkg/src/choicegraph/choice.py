"""Explicit choice functions with an audit log, and the constructions that use them.

* :func:`derive_choice` reads a choice function off a vertex colouring of
  ``G_A`` (pick the least-coloured member of each set).
* :func:`construct_distinguishing` goes the other way: given a way to choose
  from every residual family it builds a distinguishing colouring of ``G_A``
  with at most ``k`` colours for a ``k``-acceptable family.
* :func:`construct_irreducible_DS` colours a double star from an injection
  ``X -> Y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .errors import ChoiceUndefined, DomainMismatch, NotInjective, NotKAcceptable, SizeOrder
from .families import X_PRIME, Y_PRIME, AcceptableFamilySpec, build_GA, build_DS
from .graph import VERTEX, Colouring, check_domain

Rule = Callable[[int, Sequence[str]], str]


def index_min_rule(index: int, candidates: Sequence[str]) -> str:
    """First candidate in family order."""
    return candidates[0]


@dataclass
class ChoiceFunction:
    """Family index -> chosen element, plus an append-only log of every choice made.

    ``mapping`` is consulted first; when it has no usable entry for a set
    (missing, or its element is no longer among the candidates) ``rule`` is
    used if given, otherwise :class:`ChoiceUndefined` is raised.
    """

    mapping: dict[int, str] = field(default_factory=dict)
    log: list[tuple[int, str, str]] = field(default_factory=list)
    rule: Rule | None = None

    @classmethod
    def index_min(cls) -> "ChoiceFunction":
        return cls(rule=index_min_rule)

    def choose(self, index: int, candidates: Sequence[str], tag: str) -> str:
        if not candidates:
            raise ChoiceUndefined(f"set {index} is empty")
        element = self.mapping.get(index)
        if element is None or element not in candidates:
            if self.rule is None:
                raise ChoiceUndefined(f"no usable choice for set {index} ({tag})")
            element = self.rule(index, candidates)
            if element not in candidates:
                raise ChoiceUndefined(f"rule chose {element!r} outside set {index}")
        self.log.append((index, element, tag))
        return element

    def is_choice_for(self, spec: AcceptableFamilySpec) -> bool:
        return len(self.mapping) == spec.n and all(
            self.mapping.get(i) in A for i, A in enumerate(spec.sets)
        )


def derive_choice(c: Colouring, spec: AcceptableFamilySpec) -> ChoiceFunction:
    """Least-coloured member of each ``A_i``; ties go to the earlier vertex."""
    G = build_GA(spec).graph
    if c.kind != VERTEX:
        raise DomainMismatch("derive_choice needs a vertex colouring")
    check_domain(G, c)
    f = ChoiceFunction()
    for i, A in enumerate(spec.sets):
        best = min(A, key=lambda a: (c[a], G.index[a]))
        f.mapping[i] = best
        f.log.append((i, best, "least-colour"))
    return f


def choice_cost(spec: AcceptableFamilySpec, k: int) -> int:
    """Number of choices :func:`construct_distinguishing` makes: sum over levels j < k-1
    of the number of sets still non-empty after j removals."""
    return sum(sum(1 for s in spec.sizes if s > j) for j in range(k - 1))


def construct_distinguishing(spec: AcceptableFamilySpec, f: ChoiceFunction, k: int) -> Colouring:
    """Vertex colouring of ``G_A`` with at most ``k`` colours.

    Level ``j`` (while ``k - j >= 2``) gives colour ``k-1-j`` to one chosen
    member of every non-empty residual set and removes it; whatever is left,
    together with the spine, rungs and tail, gets colour 0.
    """
    if k < 1:
        raise NotKAcceptable("k must be a positive integer")
    if not spec.is_k_acceptable(k):
        raise NotKAcceptable(f"largest set has {max(spec.sizes)} > {k} elements")
    G = build_GA(spec).graph
    colours = {v: 0 for v in G.vertices}
    residual = [list(A) for A in spec.sets]
    for j in range(k - 1):
        live = [(i, R) for i, R in enumerate(residual) if R]
        if not live:
            break
        for i, R in live:
            chosen = f.choose(i, tuple(R), f"level{j}")
            colours[chosen] = k - 1 - j
            R.remove(chosen)
    return Colouring(VERTEX, colours)


def construct_irreducible_DS(
    X: Sequence[str], Y: Sequence[str], f: Mapping[str, str]
) -> Colouring:
    """Irreducible distinguishing vertex colouring of ``DS(X, Y)`` from an injection ``f``.

    Colours are positions in ``Y``: ``c(y)`` is the index of ``y`` and
    ``c(x)`` the index of ``f(x)``.  When ``f`` is onto, ``x'`` and ``y'`` get
    colours 0 and 1; otherwise both get colour 0.  ``|X| = |Y| = 1`` is the
    path ``x x' y' y``, coloured ``0, 0, 1, 0``.
    """
    ts = build_DS(X, Y)
    X, Y = ts.X, ts.Y
    if len(X) > len(Y):
        raise SizeOrder(f"|X|={len(X)} > |Y|={len(Y)}")
    if set(f) != set(X) or any(f[x] not in Y for x in X):
        raise NotInjective("f must map every x in X into Y")
    if len(set(f.values())) != len(X):
        raise NotInjective("f is not injective")
    if len(Y) == 1:
        (x,), (y,) = X, Y
        return Colouring(VERTEX, {x: 0, X_PRIME: 0, Y_PRIME: 1, y: 0})
    pos = {y: i for i, y in enumerate(Y)}
    colours = {x: pos[f[x]] for x in X}
    colours.update(pos)
    if len(X) == len(Y):
        colours[X_PRIME], colours[Y_PRIME] = 0, 1
    else:
        colours[X_PRIME] = colours[Y_PRIME] = 0
    return Colouring(VERTEX, colours)


def default_injection(X: Sequence[str], Y: Sequence[str]) -> dict[str, str]:
    return dict(zip(X, Y))
