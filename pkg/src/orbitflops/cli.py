"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (a JSON error object goes to
stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import orbitdata
from .diagram import DynkinType, parse_diagram
from .errors import OrbitFlopsError
from .flops import classify_single, equivalence_class, moves_from, pivot_component
from .orbitdata import OrbitRecord, Unassigned
from .partitions import (
    Partition,
    codim2_witness,
    collapse,
    degree_one_parity,
    is_very_even,
    levi_type,
    orbit_dim,
    parse_family,
    parse_partition,
)
from .render import SCHEMA, dumps, graph_dot, graph_json, graph_text, move_json
from .reproduce import EXAMPLES, reproduce


def _partition_json(p: Partition) -> dict:
    return {"parts": list(p.parts), "exponent": p.exponent_form()}


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        sys.stdout.write(dumps(payload))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_classify(args):
    d = parse_diagram(args.diagram)
    rows, lines = [], []
    for v in d.sorted_marks:
        comp = pivot_component(d, v)
        fc = classify_single(comp)
        rows.append({
            "pivot": v,
            "component": str(comp.dtype),
            "component_vertices": sorted(comp.vertices),
            "flop": fc.label if fc else None,
            "dual_mark": fc.dual_mark if fc else None,
        })
        where = f"{comp.dtype} on {{{','.join(map(str, sorted(comp.vertices)))}}}"
        if fc:
            lines.append(f"pivot {v}: {where}: {fc.label}, dual mark {fc.dual_mark}")
        else:
            lines.append(f"pivot {v}: {where}: NOT_FLIPPABLE")
    _emit(args, {"diagram": d.to_json(), "pivots": rows}, "\n".join(lines))


def cmd_moves(args):
    d = parse_diagram(args.diagram)
    ms = moves_from(d)
    lines = [f"{m.source} --{m.pivot}--> {m.target}  {m.flop_type}" for m in ms] or [f"{d}: no moves"]
    _emit(args, {"diagram": d.to_json(), "moves": [move_json(m) for m in ms]}, "\n".join(lines))


def cmd_graph(args):
    g = equivalence_class(parse_diagram(args.diagram))
    if args.format == "json":
        sys.stdout.write(dumps(graph_json(g)))
    elif args.format == "dot":
        sys.stdout.write(graph_dot(g))
    else:
        sys.stdout.write(graph_text(g, color=os.environ.get("ORBITFLOPS_COLOR") == "1"))


def cmd_richardson(args):
    d = parse_diagram(args.diagram)
    r = orbitdata.richardson(d)
    payload: dict = {"diagram": d.to_json(), "dim": orbitdata.richardson_dim(d)}
    if isinstance(r, Partition):
        payload["jordan_type"] = _partition_json(r)
        if d.dtype.family == "D":
            payload["very_even"] = is_very_even(r)
        text = str(r)
    elif isinstance(r, Unassigned):
        payload.update(r.to_json())
        payload["diagram"] = d.to_json()
        text = f"{orbitdata.UNASSIGNED}: one of {', '.join(o.label for o in r.candidates)} (dim {r.dim})"
    else:
        payload["orbit"] = r.to_json()
        text = f"{r.label} (dim {r.dim})"
    _emit(args, payload, text)


def cmd_collapse(args):
    fam, p = parse_family(args.family), parse_partition(args.partition)
    c = collapse(fam, p)
    _emit(args, {"algebra": fam.name, "input": _partition_json(p), "collapse": _partition_json(c)}, str(c))


def cmd_dim(args):
    fam, p = parse_family(args.family), parse_partition(args.partition)
    dim = orbit_dim(fam, p)
    _emit(args, {"algebra": fam.name, "jordan_type": _partition_json(p), "dim": dim}, str(dim))


def cmd_levi(args):
    fam = parse_family(args.family)
    p = levi_type(fam, args.k)
    deg = degree_one_parity(fam, args.k)
    payload = {"algebra": fam.name, "k": args.k, "levi_type": _partition_json(p), "degree": deg.value}
    _emit(args, payload, f"{p}  {deg.value}")


def cmd_witness(args):
    fam = parse_family(args.family)
    w = codim2_witness(fam, args.k)
    dr, dw = orbit_dim(fam, w.richardson), orbit_dim(fam, w.witness)
    payload = {
        "algebra": fam.name,
        "k": args.k,
        "richardson": {**_partition_json(w.richardson), "dim": dr},
        "witness": {**_partition_json(w.witness), "dim": dw},
        "codim": dr - dw,
    }
    _emit(args, payload, f"richardson {w.richardson} (dim {dr})  witness {w.witness} (dim {dw})")


def cmd_db(args):
    if args.action == "dump":
        sys.stdout.write(dumps(orbitdata.dump()))
        return
    if not args.algebra:
        raise OrbitFlopsError("db springer-resolvable needs an algebra, e.g. E6")
    alg = DynkinType.parse(args.algebra)
    rows: list[OrbitRecord] = orbitdata.springer_resolvable(alg)
    lines = [f"{o.label}" + (f"  dim {o.dim}" if o.dim is not None else "") for o in rows]
    _emit(args, {"algebra": str(alg), "orbits": [o.to_json() for o in rows]}, "\n".join(lines))


def cmd_reproduce(args) -> int:
    outcomes = reproduce(args.example)
    if args.format == "json":
        sys.stdout.write(dumps({"results": [o.__dict__ for o in outcomes]}))
    else:
        for o in outcomes:
            sys.stdout.write(f"{'PASS' if o.passed else 'FAIL'} {o.example}: {o.detail}\n")
    return 0 if all(o.passed for o in outcomes) else 1


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "dot", "text"), default="text")

    parser = argparse.ArgumentParser(prog="orbitflops", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("classify", cmd_classify, "classify each mark's component"),
        ("moves", cmd_moves, "list adjacency moves"),
        ("orbit-class", cmd_graph, "equivalence class as a flop graph"),
        ("graph", cmd_graph, "alias of orbit-class"),
        ("richardson", cmd_richardson, "Richardson orbit of a single-marked diagram"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=help_)
        p.add_argument("diagram")
        p.set_defaults(func=fn)

    for name, fn, help_ in (
        ("collapse", cmd_collapse, "largest B/C/D-valid partition below a partition"),
        ("dim", cmd_dim, "nilpotent orbit dimension of a Jordan type"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=help_)
        p.add_argument("family", help="so9, sp6, sl6, B4, C3, D5, ...")
        p.add_argument("partition", help="[3^2,1^3] or [3,3,1,1,1]")
        p.set_defaults(func=fn)

    for name, fn, help_ in (
        ("levi", cmd_levi, "Levi type and Springer degree of a (k, q, k) flag"),
        ("witness", cmd_witness, "Richardson orbit and a codimension-two orbit in its closure"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=help_)
        p.add_argument("family")
        p.add_argument("k", type=int)
        p.set_defaults(func=fn)

    p = sub.add_parser("db", parents=[fmt], help="embedded orbit tables")
    p.add_argument("action", choices=("dump", "springer-resolvable"))
    p.add_argument("algebra", nargs="?")
    p.set_defaults(func=cmd_db)

    p = sub.add_parser("reproduce", parents=[fmt], help="rerun the worked examples against their expected answers")
    p.add_argument("example", choices=(*EXAMPLES, "all"))
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.format == "dot" and args.func is not cmd_graph:
        build_parser().error("--format dot is only available for orbit-class/graph")
    try:
        status = args.func(args)
    except OrbitFlopsError as exc:
        err = {"schema": SCHEMA, "error": {"type": type(exc).__name__, "message": str(exc)}}
        sys.stderr.write(json.dumps(err) + "\n")
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
