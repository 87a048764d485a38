"""Command-line front end.

Every subcommand reads UTF-8 JSON files and writes JSON to stdout (or ``-o``).
Exit status: 0 on success, 1 when a check or verification fails, 2 on usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import jsonio
from .choice import ChoiceFunction, construct_distinguishing, construct_irreducible_DS, derive_choice
from .errors import ChoiceGraphError
from .families import DC, DS, GA, HA, build_DC, build_DS, build_GA, build_HA, spec_from_sizes, verify_claim1
from .graph import KINDS, VERTEX, check_domain, is_proper
from .oracle import chromatic_index, chromatic_number, distinguishing_index, distinguishing_number
from .reduction import (
    DISTINGUISHING,
    PROPER,
    PropertyTag,
    enumerate_chain,
    find_least_in_chain,
    greedy_trace,
    is_irreducible,
    reduce,
    sort_chain,
)
from .symmetry import automorphisms, is_distinguishing, orbit_partition, preserving_automorphisms
from .transfer import KINDS as DS_KINDS
from .transfer import de_to_pe, ds_transfer_trace, dv_to_de, pe_to_pv, pv_to_dv
from .verify import build_report, fuzz_specs, report_csv

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else jsonio.dumps(payload)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _family(args):
    if args.family:
        return jsonio.family_from_json(jsonio.load(args.family))
    if args.sizes:
        return spec_from_sizes([int(s) for s in args.sizes.split(",")], args.tail)
    raise _UsageError("give --family FILE or --sizes N,N,...")


def _graph(args):
    return jsonio.graph_from_json(jsonio.load(args.graph))


def _colouring(path):
    return jsonio.colouring_from_json(jsonio.load(path))


# ---------------------------------------------------------------------------
# subcommands


def cmd_build(args) -> int:
    if args.variant in (GA, HA):
        spec = _family(args)
        fg = (build_GA if args.variant == GA else build_HA)(spec)
        _emit(args, jsonio.graph_to_json(fg.graph))
    else:
        if not args.stars:
            raise _UsageError(f"--variant {args.variant} needs --stars FILE")
        d = jsonio.load(args.stars)
        ts = (build_DS if args.variant == DS else build_DC)(d["X"], d["Y"])
        _emit(args, jsonio.graph_to_json(ts.graph))
    return EXIT_OK


def cmd_aut(args) -> int:
    G = _graph(args)
    if args.colouring:
        c = _colouring(args.colouring)
        check_domain(G, c)
        group = preserving_automorphisms(G, c)
    else:
        group = automorphisms(G)
    out = jsonio.group_to_json(group)
    out["orbits"] = [list(o) for o in orbit_partition(group)]
    _emit(args, out)
    return EXIT_OK


def cmd_check(args) -> int:
    G = _graph(args)
    c = _colouring(args.colouring)
    check_domain(G, c)
    if args.phi == PROPER:
        holds = is_proper(G, c)
    else:
        holds = is_distinguishing(G, c)
    out = {"phi": f"{args.phi}-{c.kind}", "holds": holds, "colours": len(c.image())}
    if args.irreducible and holds:
        out["irreducible"] = is_irreducible(G, c, PropertyTag(args.phi, c.kind))
    if args.orbits:
        spec = _family(args)
        for variant, build in ((GA, build_GA), (HA, build_HA)):
            rep = verify_claim1(build(spec))
            out[f"orbits_{variant}"] = {
                "holds": rep.holds,
                "group_order": rep.group_order,
                "orbits": [list(o) for o in rep.orbit_partition],
            }
    _emit(args, out)
    ok = holds and out.get("irreducible", True)
    return EXIT_OK if ok else EXIT_FAIL


_FAMILY_STEPS = {("dv", "de"), ("de", "pe"), ("pe", "pv"), ("pv", "dv")}


def cmd_transfer(args) -> int:
    c = _colouring(args.colouring)
    if args.stars:
        d = jsonio.load(args.stars)
        ts = build_DS(d["X"], d["Y"])
        out, trace = ds_transfer_trace(ts, c, args.src, args.dst)
        _emit(args, jsonio.colouring_to_json(out, build_DC(ts.X, ts.Y).graph if args.dst == "pv" else ts.graph))
        return EXIT_OK
    spec = _family(args)
    if (args.src, args.dst) not in _FAMILY_STEPS:
        raise _UsageError(f"family transfers are dv->de, de->pe, pe->pv, pv->dv; got {args.src}->{args.dst}")
    fg, fh = build_GA(spec), build_HA(spec)
    if args.src == "dv":
        out = dv_to_de(fg, c)
    elif args.src == "de":
        out = de_to_pe(fg, c)
    elif args.src == "pe":
        out = pe_to_pv(fg, fh, c)
    else:
        out = pv_to_dv(fh, fg, c)
    _emit(args, jsonio.colouring_to_json(out, fg.graph))
    return EXIT_OK


def cmd_choice(args) -> int:
    spec = _family(args)
    G = build_GA(spec).graph
    if args.derive:
        f = derive_choice(_colouring(args.derive), spec)
        _emit(args, jsonio.choice_to_json(f))
        return EXIT_OK
    if args.choice:
        f = jsonio.choice_from_json(jsonio.load(args.choice))
        if args.fallback:
            f.rule = ChoiceFunction.index_min().rule
    else:
        f = ChoiceFunction.index_min()
    k = args.k if args.k is not None else max(spec.sizes)
    c = construct_distinguishing(spec, f, k)
    _emit(args, {"colouring": jsonio.colouring_to_json(c, G), "choice": jsonio.choice_to_json(f)})
    return EXIT_OK


def cmd_stars(args) -> int:
    d = jsonio.load(args.stars)
    ts = build_DS(d["X"], d["Y"])
    f = d.get("f") or dict(zip(ts.X, ts.Y))
    c = construct_irreducible_DS(ts.X, ts.Y, f)
    _emit(args, jsonio.colouring_to_json(c, ts.graph))
    return EXIT_OK


def cmd_reduce(args) -> int:
    c = _colouring(args.colouring)
    _emit(args, jsonio.colouring_to_json(reduce(c, args.b, args.a)))
    return EXIT_OK


def cmd_chain(args) -> int:
    c = _colouring(args.colouring)
    chain = enumerate_chain(c)
    if args.sorted:
        chain = sort_chain(chain, c)
    _emit(args, {"size": len(chain), "elements": [jsonio.chain_element_to_json(e) for e in chain]})
    return EXIT_OK


def cmd_irreducible(args) -> int:
    G = _graph(args)
    c = _colouring(args.colouring)
    if c.kind != args.kind:
        raise _UsageError(f"colouring is a {c.kind} colouring, --kind says {args.kind}")
    check_domain(G, c)
    phi = PropertyTag(args.phi, args.kind)
    if args.mode == "greedy":
        d, steps = greedy_trace(G, c, phi)
        out = {"colouring": jsonio.colouring_to_json(d, G), "steps": [list(s) for s in steps]}
    else:
        e = find_least_in_chain(G, c, phi)
        out = jsonio.chain_element_to_json(e, G)
    _emit(args, out)
    return EXIT_OK


_PARAMS = {
    "D": lambda G, m: distinguishing_number(G, m),
    "Dprime": lambda G, m: distinguishing_index(G, m),
    "chi": lambda G, m: chromatic_number(G),
    "chiprime": lambda G, m: chromatic_index(G),
}


def cmd_oracle(args) -> int:
    G = _graph(args)
    res = _PARAMS[args.param](G, args.method)
    _emit(args, {"param": args.param, "value": res.value, "witness": jsonio.colouring_to_json(res.witness, G)})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.fuzz:
        report = build_report(fuzz_specs(args.fuzz, args.seed), seed=args.seed)
    else:
        report = build_report([_family(args)])
    _emit(args, report_csv(report) if args.format == "csv" else report)
    return EXIT_OK if report["passed"] else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def _family_args(p):
    p.add_argument("--family", help="family spec JSON: {\"sets\": [[...], ...], \"tail_length\": 3}")
    p.add_argument("--sizes", help="shorthand: comma-separated set sizes, ids generated")
    p.add_argument("--tail", type=int, default=3, help="tail length with --sizes (default 3)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="choicegraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("build", cmd_build, "build G_A, H_A, DS or DC as graph JSON")
    _family_args(p)
    p.add_argument("--stars", help="two-star JSON: {\"X\": [...], \"Y\": [...]}")
    p.add_argument("--variant", choices=[GA, HA, DS, DC], default=GA)

    p = add("aut", cmd_aut, "automorphism group and orbits")
    p.add_argument("--graph", required=True)
    p.add_argument("--colouring", help="restrict to automorphisms preserving this colouring")

    p = add("check", cmd_check, "test a colouring for a property (exit 1 if it fails)")
    p.add_argument("--graph", required=True)
    p.add_argument("--colouring", required=True)
    p.add_argument("--phi", choices=[PROPER, DISTINGUISHING], required=True)
    p.add_argument("--irreducible", action="store_true", help="also test irreducibility")
    p.add_argument("--orbits", action="store_true", help="also report the orbit structure of the family")
    _family_args(p)

    p = add("transfer", cmd_transfer, "move a colouring between problems")
    p.add_argument("--from", dest="src", choices=DS_KINDS, required=True)
    p.add_argument("--to", dest="dst", choices=DS_KINDS, required=True)
    p.add_argument("--colouring", required=True)
    p.add_argument("--stars", help="two-star JSON; without it the family graphs are used")
    _family_args(p)

    p = add("choice", cmd_choice, "distinguishing colouring of G_A from a choice function")
    _family_args(p)
    p.add_argument("--k", type=int, help="colour budget (default: largest set size)")
    p.add_argument("--choice", help="choice JSON {\"mapping\": {\"0\": id, ...}}; default index-min")
    p.add_argument("--fallback", action="store_true", help="use index-min where --choice has no entry")
    p.add_argument("--derive", metavar="COLOURING", help="read a choice function off a G_A colouring")

    p = add("stars", cmd_stars, "irreducible distinguishing colouring of DS from an injection")
    p.add_argument("--stars", required=True, help="{\"X\": [...], \"Y\": [...], \"f\": {x: y}}")

    p = add("reduce", cmd_reduce, "recolour colour b with colour a")
    p.add_argument("--colouring", required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--a", type=int, required=True)

    p = add("chain", cmd_chain, "closure of a colouring under reductions")
    p.add_argument("--colouring", required=True)
    p.add_argument("--sorted", action="store_true", help="list in increasing comparator order")

    p = add("irreducible", cmd_irreducible, "reduce a colouring to an irreducible one")
    p.add_argument("--graph", required=True)
    p.add_argument("--colouring", required=True)
    p.add_argument("--mode", choices=["greedy", "least"], default="greedy")
    p.add_argument("--phi", choices=[PROPER, DISTINGUISHING], required=True)
    p.add_argument("--kind", choices=list(KINDS), default=VERTEX)

    p = add("oracle", cmd_oracle, "exact D, D', chi or chi' with a witness")
    p.add_argument("--param", choices=list(_PARAMS), required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--method", choices=["auto", "pruned", "exhaustive"], default="auto")

    p = add("verify", cmd_verify, "instance-level claim suite")
    _family_args(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--fuzz", type=int, metavar="N", help="check N random specs instead")
    p.add_argument("--seed", type=int, default=0, help="seed for --fuzz (echoed in the report)")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"choicegraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ChoiceGraphError, OSError, KeyError, ValueError, TypeError, json.JSONDecodeError) as exc:
        print(f"choicegraph: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "build_parser"]
