"""Colouring transfers between the four colouring problems on the family graphs.

On ``G_A`` / ``H_A`` the chain is::

    distinguishing vertex (G_A) -> distinguishing edge (G_A)
        -> proper edge (G_A) -> proper vertex (H_A) -> distinguishing vertex (G_A)

On the double stars the four problems are ``dv`` (distinguishing vertex on DS),
``de`` (distinguishing edge on DS), ``pe`` (proper edge on DS) and ``pv``
(proper vertex on DC), linked as ``dv - pv - pe - de``.  Every double-star
transfer ends with a greedy re-irreducibilisation and a post-check.

New colours are always consecutive naturals above the largest colour of the
colouring being built.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    NotProperInput,
    NotProperResult,
    PropertyLost,
    PropertyNotSatisfied,
    SpecMismatch,
    UnsupportedPair,
    VariantMismatch,
)
from .families import GA, HA, FamilyGraph, TwoStarGraph, build_DC, build_DS, zp
from .graph import EDGE, VERTEX, Colouring, Graph, check_domain, edge, is_proper
from .reduction import (
    DIST_EDGE,
    DIST_VERTEX,
    PROPER_EDGE,
    PROPER_VERTEX,
    PropertyTag,
    greedy_trace,
    is_irreducible,
)
from .symmetry import is_distinguishing

# ---------------------------------------------------------------------------
# G_A / H_A chain


def _require(fg: FamilyGraph, variant: str) -> None:
    if fg.variant != variant:
        raise VariantMismatch(f"expected a {variant} graph, got {fg.variant}")


def pendant_edges(fg: FamilyGraph) -> dict[frozenset, str]:
    """Edge ``a z'i`` -> family vertex ``a``."""
    return {edge(a, zp(i)): a for i, A in enumerate(fg.spec.sets) for a in A}


def _spine_edges(fg: FamilyGraph) -> list[frozenset]:
    spine = fg.spine
    return [edge(u, v) for u, v in zip(spine, spine[1:])]


def dv_to_de(fg: FamilyGraph, c: Colouring) -> Colouring:
    """Pendant edge ``a z'i`` takes ``c(a)``; every other edge gets one fresh colour."""
    _require(fg, GA)
    check_domain(fg.graph, c)
    bottom = max(c.image()) + 1
    pend = pendant_edges(fg)
    return Colouring(EDGE, {e: (c[pend[e]] if e in pend else bottom) for e in fg.graph.edges})


def de_to_pe(fg: FamilyGraph, c: Colouring) -> Colouring:
    """Keep pendant edges, one new colour on the rungs, two alternating on the spine."""
    _require(fg, GA)
    check_domain(fg.graph, c)
    pend = pendant_edges(fg)
    for i, A in enumerate(fg.spec.sets):
        seen = [c[edge(a, zp(i))] for a in A]
        if len(set(seen)) != len(seen):
            raise NotProperResult(f"pendant edges at {zp(i)} share a colour")
    out = {e: c[e] for e in pend}
    top = max(out.values())
    rung, p, q = top + 1, top + 2, top + 3
    for i in range(fg.spec.n):
        out[edge(fg.spine[i], zp(i))] = rung
    for j, e in enumerate(_spine_edges(fg)):
        out[e] = p if j % 2 == 0 else q
    result = Colouring(EDGE, out)
    if not is_proper(fg.graph, result):
        raise NotProperResult("result is not a proper edge colouring")
    return result


def _same_spec(a: FamilyGraph, b: FamilyGraph) -> None:
    if a.spec != b.spec:
        raise SpecMismatch("graphs were built from different families")


def pe_to_pv(fg_GA: FamilyGraph, fg_HA: FamilyGraph, c: Colouring) -> Colouring:
    """``a in A_i`` takes ``c(a z'i)``; rungs one new colour, spine two alternating."""
    if fg_GA.variant != GA or fg_HA.variant != HA:
        raise SpecMismatch("need a GA graph and an HA graph")
    _same_spec(fg_GA, fg_HA)
    check_domain(fg_GA.graph, c)
    out = {a: c[e] for e, a in pendant_edges(fg_GA).items()}
    top = max(out.values())
    rung, p, q = top + 1, top + 2, top + 3
    for v in fg_GA.rungs:
        out[v] = rung
    for j, v in enumerate(fg_GA.spine):
        out[v] = p if j % 2 == 0 else q
    return Colouring(VERTEX, out)


def pv_to_dv(fg_HA: FamilyGraph, fg_GA: FamilyGraph, c: Colouring) -> Colouring:
    """Identity on assignments; ``V(H_A) = V(G_A)``."""
    if fg_GA.variant != GA or fg_HA.variant != HA:
        raise SpecMismatch("need an HA graph and a GA graph")
    _same_spec(fg_GA, fg_HA)
    if c.kind != VERTEX or not is_proper(fg_HA.graph, c):
        raise NotProperInput("input is not a proper vertex colouring of H_A")
    return Colouring(VERTEX, dict(c.assignment))


@dataclass
class StageReport:
    name: str
    colouring: Colouring
    ok: bool
    fresh: int


def transfer_pipeline(fg_GA: FamilyGraph, fg_HA: FamilyGraph, c: Colouring) -> list[StageReport]:
    """Run dv -> de -> pe -> pv -> dv and oracle-check every stage.

    ``fresh`` counts colours of a stage's output that do not come from the
    inherited part (pendant edges or family vertices).
    """
    _same_spec(fg_GA, fg_HA)
    GA_graph, HA_graph = fg_GA.graph, fg_HA.graph
    pend = pendant_edges(fg_GA)
    family = set(fg_GA.spec.union())

    def fresh_edges(d):
        return len(d.image() - {d[e] for e in pend})

    def fresh_vertices(d):
        return len(d.image() - {d[v] for v in family})

    de = dv_to_de(fg_GA, c)
    pe = de_to_pe(fg_GA, de)
    pv = pe_to_pv(fg_GA, fg_HA, pe)
    dv = pv_to_dv(fg_HA, fg_GA, pv)
    return [
        StageReport("dv->de", de, is_distinguishing(GA_graph, de), fresh_edges(de)),
        StageReport("de->pe", pe, is_proper(GA_graph, pe), fresh_edges(pe)),
        StageReport("pe->pv", pv, is_proper(HA_graph, pv), fresh_vertices(pv)),
        StageReport("pv->dv", dv, is_distinguishing(GA_graph, dv), len(dv.image() - pv.image())),
    ]


# ---------------------------------------------------------------------------
# double stars

DV, DE, PE, PV = "dv", "de", "pe", "pv"
KINDS = (DV, PV, PE, DE)
# the path dv - pv - pe - de
_PATH = (DV, PV, PE, DE)


@dataclass
class TransferTrace:
    """What happened in a double-star transfer: one entry per hop."""

    hops: list[tuple[str, str]] = field(default_factory=list)
    reductions: list[list[tuple[int, int]]] = field(default_factory=list)

    @property
    def max_reductions(self) -> int:
        return max((len(r) for r in self.reductions), default=0)


def ds_property(ts: TwoStarGraph, kind: str) -> tuple[Graph, PropertyTag]:
    if kind == DV:
        return build_DS(ts.X, ts.Y).graph, DIST_VERTEX
    if kind == DE:
        return build_DS(ts.X, ts.Y).graph, DIST_EDGE
    if kind == PE:
        return build_DS(ts.X, ts.Y).graph, PROPER_EDGE
    if kind == PV:
        return build_DC(ts.X, ts.Y).graph, PROPER_VERTEX
    raise UnsupportedPair(f"unknown colouring problem {kind!r}")


def _dv_to_pv(ts, c):
    top = max(c.image())
    return c.with_colours({ts.x_prime: top + 1, ts.y_prime: top + 2})


def _pv_to_dv(ts, c):
    return c


def _pv_to_pe(ts, c):
    out = {edge(ts.x_prime, x): c[x] for x in ts.X}
    out.update({edge(ts.y_prime, y): c[y] for y in ts.Y})
    out[edge(ts.x_prime, ts.y_prime)] = max(c.image()) + 1
    return Colouring(EDGE, out)


def _pe_to_pv(ts, c):
    out = {x: c[edge(ts.x_prime, x)] for x in ts.X}
    out.update({y: c[edge(ts.y_prime, y)] for y in ts.Y})
    cx = {out[x] for x in ts.X}
    cy = {out[y] for y in ts.Y}
    top = max(c.image())
    x_col = min(cy - cx, default=top + 1)
    y_col = min(cx - cy, default=top + 1 if x_col != top + 1 else top + 2)
    out[ts.x_prime] = x_col
    out[ts.y_prime] = y_col
    return Colouring(VERTEX, out)


def _pendant_colours(ts, c):
    sx = {c[edge(ts.x_prime, x)] for x in ts.X}
    sy = {c[edge(ts.y_prime, y)] for y in ts.Y}
    return sx, sy


def _de_to_pe(ts, c):
    sx, sy = _pendant_colours(ts, c)
    free = sorted(c.image() - sx - sy)
    middle = free[0] if free else max(c.image()) + 1
    return c.with_colours({edge(ts.x_prime, ts.y_prime): middle})


def _pe_to_de(ts, c):
    G = build_DS(ts.X, ts.Y).graph
    sx, sy = _pendant_colours(ts, c)
    top = max(c.image())
    d = c.with_colours({edge(ts.x_prime, ts.y_prime): min(sx | sy)})
    if DIST_EDGE.holds(G, d):
        return d
    # |X| = |Y| with equal pendant palettes: the side swap survives any
    # recolouring of x'y', so one Y pendant edge moves to a fresh colour
    return d.with_colours({edge(ts.y_prime, ts.Y[-1]): top + 1})


_STEPS = {
    (DV, PV): _dv_to_pv,
    (PV, DV): _pv_to_dv,
    (PV, PE): _pv_to_pe,
    (PE, PV): _pe_to_pv,
    (DE, PE): _de_to_pe,
    (PE, DE): _pe_to_de,
}


def _route(src: str, dst: str) -> list[tuple[str, str]]:
    if src not in KINDS or dst not in KINDS or src == dst:
        raise UnsupportedPair(f"{src} -> {dst}")
    i, j = _PATH.index(src), _PATH.index(dst)
    step = 1 if j > i else -1
    return [(_PATH[k], _PATH[k + step]) for k in range(i, j, step)]


def ds_transfer_trace(
    ts: TwoStarGraph, c: Colouring, src: str, dst: str
) -> tuple[Colouring, TransferTrace]:
    """Transfer along the ``dv - pv - pe - de`` path, re-irreducibilising after each hop."""
    route = _route(src, dst)
    G, phi = ds_property(ts, src)
    if not phi.holds(G, c):
        raise PropertyNotSatisfied(f"input is not {phi} on {'DC' if src == PV else 'DS'}")
    trace = TransferTrace()
    for a, b in route:
        d = _STEPS[a, b](ts, c)
        G, phi = ds_property(ts, b)
        if not phi.holds(G, d):
            raise PropertyLost(f"{a} -> {b} construction is not {phi}")
        d, steps = greedy_trace(G, d, phi)
        if not is_irreducible(G, d, phi):
            raise PropertyLost(f"{a} -> {b} result is reducible")
        trace.hops.append((a, b))
        trace.reductions.append(steps)
        c = d
    return c, trace


def ds_transfer(ts: TwoStarGraph, c: Colouring, src: str, dst: str) -> Colouring:
    return ds_transfer_trace(ts, c, src, dst)[0]


__all__ = [
    "dv_to_de",
    "de_to_pe",
    "pe_to_pv",
    "pv_to_dv",
    "pendant_edges",
    "transfer_pipeline",
    "StageReport",
    "ds_transfer",
    "ds_transfer_trace",
    "ds_property",
    "TransferTrace",
    "DV",
    "DE",
    "PE",
    "PV",
    "KINDS",
]
