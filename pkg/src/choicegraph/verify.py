"""Instance-level claim suite behind ``choicegraph verify``.

Each check yields one row ``{"check", "instance", "status", "detail"}`` with
status ``pass``, ``fail`` or ``skip``.  Rows are sorted by instance key and
check name so that identical inputs give byte-identical reports.
"""

from __future__ import annotations

import csv
import io
import random
from typing import Any

from .caps import get_caps
from .choice import (
    ChoiceFunction,
    choice_cost,
    construct_distinguishing,
    construct_irreducible_DS,
    default_injection,
    derive_choice,
)
from .errors import ChoiceGraphError
from .families import (
    AcceptableFamilySpec,
    build_DS,
    build_GA,
    build_HA,
    expected_max_degree,
    spec_from_sizes,
    verify_claim1,
)
from .graph import max_degree
from .jsonio import SCHEMA
from .oracle import distinguishing_number
from .reduction import (
    DIST_VERTEX,
    enumerate_chain,
    find_least_in_chain,
    is_irreducible,
    is_total_order_on,
    reduce,
    reduction_pairs,
)
from .symmetry import is_distinguishing
from .transfer import DE, DV, PE, PV, ds_transfer_trace, transfer_pipeline

# exhaustive triple checks stay cheap below this chain size
CHAIN_AUDIT_LIMIT = 60

CHECKS = ("degree_formula", "orbits", "transfer_pipeline", "choice_bound", "double_star", "chain_order")


def instance_key(spec: AcceptableFamilySpec) -> str:
    return f"sizes={'-'.join(map(str, spec.sizes))};tail={spec.tail_length}"


def _row(check, spec, ok, detail) -> dict:
    status = "skip" if ok is None else ("pass" if ok else "fail")
    return {"check": check, "instance": instance_key(spec), "status": status, "detail": detail}


def check_degree_formula(spec):
    dg = max_degree(build_GA(spec).graph)
    dh = max_degree(build_HA(spec).graph)
    want = expected_max_degree(spec)
    return _row("degree_formula", spec, dg == dh == want, f"GA={dg} HA={dh} formula={want}")


def check_orbits(spec):
    rg = verify_claim1(build_GA(spec))
    rh = verify_claim1(build_HA(spec))
    detail = f"|Aut(GA)|={rg.group_order} |Aut(HA)|={rh.group_order}"
    extra = rg.spurious() + rh.spurious()
    if extra:
        detail += " spurious=" + ";".join(",".join(o) for o in sorted(set(extra)))
    return _row("orbits", spec, rg.holds and rh.holds, detail)


def check_pipeline(spec):
    k = max(spec.sizes)
    c = construct_distinguishing(spec, ChoiceFunction.index_min(), k)
    stages = transfer_pipeline(build_GA(spec), build_HA(spec), c)
    ok = all(s.ok for s in stages) and all(s.fresh <= 3 for s in stages)
    detail = " ".join(f"{s.name}:{'ok' if s.ok else 'FAIL'}/fresh={s.fresh}" for s in stages)
    return _row("transfer_pipeline", spec, ok, detail)


def check_choice_bound(spec):
    k = max(spec.sizes)
    f = ChoiceFunction.index_min()
    c = construct_distinguishing(spec, f, k)
    G = build_GA(spec).graph
    used = len(c.image())
    dist = is_distinguishing(G, c)
    D = distinguishing_number(G).value
    back = derive_choice(c, spec)
    ok = used <= k and dist and D <= k and back.is_choice_for(spec) and len(f.log) == choice_cost(spec, k)
    detail = f"k={k} colours={used} distinguishing={dist} D={D} choices={len(f.log)}"
    return _row("choice_bound", spec, ok, detail)


def _two_star_sets(spec):
    if spec.n < 2:
        return None
    order = sorted(range(spec.n), key=lambda i: (len(spec.sets[i]), i))
    return spec.sets[order[0]], spec.sets[order[-1]]


def check_double_star(spec):
    sets = _two_star_sets(spec)
    if sets is None:
        return _row("double_star", spec, None, "needs two family sets")
    X, Y = sets
    ts = build_DS(X, Y)
    c = construct_irreducible_DS(X, Y, default_injection(X, Y))
    ok = is_distinguishing(ts.graph, c) and is_irreducible(ts.graph, c, DIST_VERTEX)
    worst = 0
    cur = {DV: c}
    try:
        for a, b in ((DV, PV), (PV, PE), (PE, DE), (DE, PE), (PE, PV), (PV, DV)):
            cur[b], trace = ds_transfer_trace(ts, cur[a], a, b)
            worst = max(worst, trace.max_reductions)
    except ChoiceGraphError as exc:
        return _row("double_star", spec, False, f"|X|={len(X)} |Y|={len(Y)} error={exc}")
    ok = ok and worst <= 3
    return _row("double_star", spec, ok, f"|X|={len(X)} |Y|={len(Y)} max_reductions={worst}")


def check_chain(spec):
    sets = _two_star_sets(spec)
    if sets is None:
        return _row("chain_order", spec, None, "needs two family sets")
    X, Y = sets
    ts = build_DS(X, Y)
    c = construct_irreducible_DS(X, Y, default_injection(X, Y))
    caps = get_caps()
    if len(c.image()) > caps.chain_image or len(c.assignment) > caps.chain_domain:
        return _row("chain_order", spec, None, "base colouring above chain caps")
    chain = enumerate_chain(c)
    if len(chain) > CHAIN_AUDIT_LIMIT:
        return _row("chain_order", spec, None, f"|C_c|={len(chain)} above audit limit")
    axioms = is_total_order_on(chain, c)
    least = find_least_in_chain(ts.graph, c, DIST_VERTEX).colouring
    no_red = not any(DIST_VERTEX.holds(ts.graph, reduce(least, b, a)) for b, a in reduction_pairs(least))
    ok = all(axioms.values()) and no_red
    detail = f"|C_c|={len(chain)} " + " ".join(f"{k}={v}" for k, v in axioms.items())
    return _row("chain_order", spec, ok, detail + f" least_irreducible={no_red}")


_RUNNERS = {
    "degree_formula": check_degree_formula,
    "orbits": check_orbits,
    "transfer_pipeline": check_pipeline,
    "choice_bound": check_choice_bound,
    "double_star": check_double_star,
    "chain_order": check_chain,
}


def verify_spec(spec: AcceptableFamilySpec) -> list[dict]:
    rows = []
    for name in CHECKS:
        try:
            rows.append(_RUNNERS[name](spec))
        except ChoiceGraphError as exc:
            rows.append(_row(name, spec, False, f"{type(exc).__name__}: {exc}"))
    return rows


def fuzz_specs(count: int, seed: int, max_n: int = 3, max_size: int = 3) -> list[AcceptableFamilySpec]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        out.append(spec_from_sizes([rng.randint(1, max_size) for _ in range(n)], rng.choice([2, 3])))
    return out


def build_report(specs: list[AcceptableFamilySpec], seed: int | None = None) -> dict[str, Any]:
    rows = [row for spec in specs for row in verify_spec(spec)]
    rows.sort(key=lambda r: (r["instance"], CHECKS.index(r["check"])))
    report: dict[str, Any] = {"schema": SCHEMA}
    if seed is not None:
        report["seed"] = seed
    report["passed"] = all(r["status"] != "fail" for r in rows)
    report["checks"] = rows
    return report


def report_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["instance", "check", "status", "detail"], lineterminator="\n")
    writer.writeheader()
    for row in report["checks"]:
        writer.writerow({k: row[k] for k in writer.fieldnames})
    return buf.getvalue()
