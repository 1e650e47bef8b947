"""Golden reproductions of the worked examples, runnable from the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .diagram import parse_diagram
from .flops import FlopGraph, equivalence_class, graph_shape, moves_from


@dataclass
class Outcome:
    example: str
    passed: bool
    detail: str


def _marks(g: FlopGraph) -> set[frozenset[int]]:
    return g.mark_sets()


def path_walk(g: FlopGraph) -> tuple[list[int], list[str]]:
    """Nodes and edge labels along a path-shaped graph, starting from its lower-index end."""
    adj: dict[int, list[tuple[int, str]]] = {i: [] for i in range(len(g.nodes))}
    for e in g.edges:
        adj[e.source].append((e.target, e.flop_type))
        adj[e.target].append((e.source, e.flop_type))
    ends = [i for i, nb in adj.items() if len(nb) <= 1]
    order, labels = [min(ends)], []
    while True:
        step = [(j, t) for j, t in adj[order[-1]] if j not in order]
        if not step:
            return order, labels
        order.append(step[0][0])
        labels.append(step[0][1])


def _ex37() -> Outcome:
    d = parse_diagram("B3[2,3]")
    want = parse_diagram("B3[1,3]")
    hits = [m for m in moves_from(d) if m.pivot == 2 and m.target == want]
    detail = f"moves from {d}: " + ", ".join(f"{m.pivot}->{m.target}" for m in moves_from(d))
    return Outcome("example-3.7", bool(hits), detail)


def _ex46() -> Outcome:
    g = equivalence_class(parse_diagram("A5[1,3]"))
    want = {frozenset(s) for s in ({1, 3}, {1, 4}, {3, 4}, {3, 5}, {2, 5}, {2, 3})}
    div = sum(g.divisorial_count(i) for i in range(len(g.nodes)))
    ok = _marks(g) == want and graph_shape(g) == "cycle" and div == 0
    return Outcome("example-4.6", ok, f"{len(g.nodes)} chambers, shape {graph_shape(g)}, {div} divisorial walls")


def _ex47() -> Outcome:
    g = equivalence_class(parse_diagram("D5[5,3]"))
    want = {frozenset(s) for s in ({5, 3}, {5, 2}, {4, 2}, {4, 3})}
    ok = _marks(g) == want and graph_shape(g) == "path"
    if ok:
        order, _ = path_walk(g)
        divs = [g.divisorial_count(i) for i in order]
        ok = divs == [1] + [0] * (len(order) - 2) + [1]
    else:
        divs = []
    return Outcome("example-4.7", ok, f"{len(g.nodes)} chambers, shape {graph_shape(g)}, divisorial along path {divs}")


def _ex48() -> Outcome:
    g = equivalence_class(parse_diagram("E6[1,3]"))
    want = {frozenset(s) for s in ({1, 3}, {1, 2}, {2, 6}, {5, 6})}
    ok = _marks(g) == want and graph_shape(g) == "path"
    labels: list[str] = []
    if ok:
        order, labels = path_walk(g)
        ok = [g.nodes[i].marks for i in order] == [frozenset(s) for s in ({1, 3}, {1, 2}, {2, 6}, {5, 6})]
        ok = ok and labels == ["D5", "A(6,1)", "D5"]
    return Outcome("example-4.8", ok, f"{len(g.nodes)} chambers, shape {graph_shape(g)}, flops {labels}")


EXAMPLES: dict[str, Callable[[], Outcome]] = {
    "example-3.7": _ex37,
    "example-4.6": _ex46,
    "example-4.7": _ex47,
    "example-4.8": _ex48,
}


def reproduce(which: str = "all") -> list[Outcome]:
    if which == "all":
        return [f() for f in EXAMPLES.values()]
    return [EXAMPLES[which]()]
