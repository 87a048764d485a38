"""JSON wire formats for graphs, colourings, groups, families, choices and chains.

Edge keys in colouring JSON are ``"u|v"``; the endpoints may come in either
order on input.  Output is deterministic: keys follow vertex/edge order of the
graph when one is given and sorted order otherwise.
"""

from __future__ import annotations

import json
from typing import Any

from .choice import ChoiceFunction
from .families import DC, DS, AcceptableFamilySpec, TwoStarGraph, build_DC, build_DS
from .graph import EDGE, VERTEX, Colouring, Graph, make_graph
from .reduction import ChainElement
from .symmetry import AutomorphismGroup

SCHEMA = "1"


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def load(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def graph_to_json(G: Graph) -> dict:
    return {"vertices": list(G.vertices), "edges": [list(G.edge_pair(e)) for e in G.edges]}


def graph_from_json(d: dict) -> Graph:
    return make_graph([str(v) for v in d["vertices"]], [(str(u), str(v)) for u, v in d["edges"]])


def edge_key(e: frozenset, G: Graph | None = None) -> str:
    if G is not None and e in G.edge_index:
        return "|".join(G.edge_pair(e))
    return "|".join(sorted(e))


def colouring_to_json(c: Colouring, G: Graph | None = None) -> dict:
    if c.kind == VERTEX:
        keys = [v for v in G.vertices if v in c.assignment] if G else sorted(c.assignment)
        colours = {v: c[v] for v in keys}
    else:
        keys = [e for e in G.edges if e in c.assignment] if G else sorted(c.assignment, key=sorted)
        colours = {edge_key(e, G): c[e] for e in keys}
    return {"kind": c.kind, "colours": colours}


def colouring_from_json(d: dict) -> Colouring:
    kind = d.get("kind", VERTEX)
    raw = d["colours"]
    if kind == EDGE:
        out = {}
        for key, colour in raw.items():
            u, sep, v = key.partition("|")
            if not sep:
                raise ValueError(f"edge key {key!r} is not of the form 'u|v'")
            out[frozenset((u, v))] = int(colour)
        return Colouring(EDGE, out)
    return Colouring(kind, {str(k): int(v) for k, v in raw.items()})


def group_to_json(group: AutomorphismGroup) -> dict:
    out: dict[str, Any] = {"order": group.order}
    if group.enumerated:
        out["elements"] = [group.as_dict(p) for p in group.elements]
    else:
        out["generators"] = [group.as_dict(p) for p in group.generators]
    return out


def family_to_json(spec: AcceptableFamilySpec) -> dict:
    return {"sets": [list(A) for A in spec.sets], "tail_length": spec.tail_length}


def family_from_json(d: dict) -> AcceptableFamilySpec:
    return AcceptableFamilySpec(
        tuple(tuple(str(a) for a in A) for A in d["sets"]), int(d.get("tail_length", 3))
    )


def two_star_to_json(ts: TwoStarGraph) -> dict:
    return {"X": list(ts.X), "Y": list(ts.Y), "variant": ts.variant}


def two_star_from_json(d: dict) -> TwoStarGraph:
    build = {DS: build_DS, DC: build_DC}[d.get("variant", DS)]
    return build([str(x) for x in d["X"]], [str(y) for y in d["Y"]])


def choice_to_json(f: ChoiceFunction) -> dict:
    return {
        "mapping": {str(i): a for i, a in sorted(f.mapping.items())},
        "log": [[str(i), a, tag] for i, a, tag in f.log],
    }


def choice_from_json(d: dict) -> ChoiceFunction:
    return ChoiceFunction(
        mapping={int(i): a for i, a in d.get("mapping", {}).items()},
        log=[(int(i), a, tag) for i, a, tag in d.get("log", [])],
    )


def chain_element_to_json(e: ChainElement, G: Graph | None = None) -> dict:
    return {
        "colouring": colouring_to_json(e.colouring, G),
        "merge_partition": {str(k): sorted(v) for k, v in e.merge_partition.items()},
    }
