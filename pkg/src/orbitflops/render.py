"""JSON, DOT and text renderings. All output is deterministic."""

from __future__ import annotations

import json

from .flops import DIVISORIAL, AdjacencyMove, FlopGraph, chamber_report

SCHEMA = "orbitflops/1"


def dumps(obj: dict) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, indent=2, sort_keys=False) + "\n"


def move_json(m: AdjacencyMove) -> dict:
    return {
        "source": m.source.to_json(),
        "pivot": m.pivot,
        "target": m.target.to_json(),
        "dual_pivot": m.dual_pivot,
        "type": m.flop_type,
        "component": str(m.component.dtype),
        "component_vertices": sorted(m.component.vertices),
        "contraction": m.contraction.to_json(),
    }


def graph_json(g: FlopGraph) -> dict:
    return {
        "nodes": [
            {
                "label": str(d),
                "diagram": d.to_json(),
                "walls": [{"pivot": w.pivot, "kind": w.kind} for w in g.walls[i]],
            }
            for i, d in enumerate(g.nodes)
        ],
        "edges": [
            {"from": e.source, "to": e.target, "pivot": e.pivot, "type": e.flop_type}
            for e in g.edges
        ],
        "report": {k: v for k, v in chamber_report(g).items() if k != "chambers"},
    }


def _q(s: str) -> str:
    return '"' + s.replace('"', r"\"") + '"'


def graph_dot(g: FlopGraph) -> str:
    lines = [f"graph {_q(str(g.seed))} {{"]
    for i, d in enumerate(g.nodes):
        div = g.divisorial_count(i)
        extra = f", divisorial={div}" if div else ""
        lines.append(f"  n{i} [label={_q(str(d))}{extra}];")
    for e in g.edges:
        lines.append(f"  n{e.source} -- n{e.target} [label={_q(e.flop_type)}, pivot={e.pivot}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_text(g: FlopGraph, color: bool = False) -> str:
    def paint(kind: str) -> str:
        if not color:
            return kind
        code = "31" if kind == DIVISORIAL else "32"
        return f"\x1b[{code}m{kind}\x1b[0m"

    rep = chamber_report(g)
    out = [
        f"equivalence class of {g.seed}: {rep['nodes']} chambers, "
        f"{rep['edges']} flops, shape {rep['shape']}"
    ]
    for i, d in enumerate(g.nodes):
        walls = ", ".join(f"{w.pivot}:{paint(w.kind)}" for w in g.walls[i])
        out.append(f"  [{i}] {d}  walls {walls}")
    for e in g.edges:
        out.append(f"  [{e.source}] -- [{e.target}]  pivot {e.pivot}  {e.flop_type}")
    return "\n".join(out) + "\n"
