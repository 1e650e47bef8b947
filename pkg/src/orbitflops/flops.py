"""Adjacency moves between marked diagrams and the flop graph of an equivalence class."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .diagram import Component, MarkedDiagram, component_involution, component_of

FLOP = "FLOP"
DIVISORIAL = "DIVISORIAL"


@dataclass(frozen=True)
class FlipClass:
    """A single-marked diagram admitting a Mukai flop, with its dual marking.

    ``kind`` is ``"A"``, ``"D"``, ``"E6_I"`` or ``"E6_II"``. For ``"A"`` the
    component is ``A_{n-1}`` and ``k`` is the mark's standard position.
    """

    kind: str
    n: int
    mark: int
    dual_mark: int
    k: int | None = None

    @property
    def label(self) -> str:
        """Flop type, independent of which member of the dual pair is marked."""
        if self.kind == "A":
            return f"A({self.n},{min(self.k, self.n - self.k)})"
        if self.kind == "D":
            return f"D{self.n}"
        return {"E6_I": "E6,I", "E6_II": "E6,II"}[self.kind]

    def __str__(self):
        return self.label


def classify_single(c: Component) -> FlipClass | None:
    """Return the flip class of a single-marked component, or ``None`` if it does not flop."""
    mark = c.mark
    pos = c.standard(mark)
    f, r = c.dtype.family, c.dtype.rank
    kind = n = k = None
    if f == "A" and 2 * pos != r + 1:
        kind, n, k = "A", r + 1, pos
    elif f == "D" and r % 2 == 1 and pos >= r - 1:
        kind, n = "D", r
    elif str(c.dtype) == "E6" and pos in (1, 6):
        kind, n = "E6_I", 6
    elif str(c.dtype) == "E6" and pos in (3, 5):
        kind, n = "E6_II", 6
    if kind is None:
        return None
    return FlipClass(kind, n, mark, component_involution(c)[mark], k)


@dataclass(frozen=True)
class AdjacencyMove:
    source: MarkedDiagram
    pivot: int
    target: MarkedDiagram
    flip: FlipClass
    component: Component

    @property
    def flop_type(self) -> str:
        return self.flip.label

    @property
    def dual_pivot(self) -> int:
        return self.flip.dual_mark

    @property
    def contraction(self) -> MarkedDiagram:
        """The source with the pivot unmarked; shared by both ends of the move."""
        return self.source.unmark(self.pivot)


def pivot_component(d: MarkedDiagram, v: int) -> Component:
    """Component of ``v`` once the other marked vertices are deleted."""
    return component_of(d, v, d.marks - {v})


def moves_from(d: MarkedDiagram) -> list[AdjacencyMove]:
    """All adjacency moves out of ``d``, by ascending pivot."""
    out = []
    for v in d.sorted_marks:
        comp = pivot_component(d, v)
        fc = classify_single(comp)
        if fc is None:
            continue
        target = MarkedDiagram(d.dtype, (d.marks - {v}) | {fc.dual_mark})
        out.append(AdjacencyMove(d, v, target, fc, comp))
    return out


@dataclass(frozen=True)
class Wall:
    pivot: int
    kind: str
    edge: int | None = None


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    move: AdjacencyMove

    @property
    def pivot(self) -> int:
        return self.move.pivot

    @property
    def flop_type(self) -> str:
        return self.move.flop_type


@dataclass(frozen=True)
class FlopGraph:
    nodes: tuple[MarkedDiagram, ...]
    edges: tuple[Edge, ...]
    walls: tuple[tuple[Wall, ...], ...]

    @property
    def seed(self) -> MarkedDiagram:
        return self.nodes[0]

    def index(self, d: MarkedDiagram) -> int:
        return self.nodes.index(d)

    def mark_sets(self) -> set[frozenset[int]]:
        return {d.marks for d in self.nodes}

    def degree(self, i: int) -> int:
        return sum((e.source == i) + (e.target == i) for e in self.edges)

    def divisorial_count(self, i: int) -> int:
        return sum(w.kind == DIVISORIAL for w in self.walls[i])


def equivalence_class(seed: MarkedDiagram) -> FlopGraph:
    """Breadth-first closure of ``seed`` under adjacency moves.

    Nodes appear in discovery order; an edge is recorded once, in the direction
    it was first traversed, and identified with its reverse by the shared
    contraction.
    """
    index = {seed: 0}
    nodes = [seed]
    moves: list[list[AdjacencyMove]] = []
    queue = deque([seed])
    while queue:
        d = queue.popleft()
        ms = moves_from(d)
        moves.append(ms)
        for m in ms:
            if m.target not in index:
                index[m.target] = len(nodes)
                nodes.append(m.target)
                queue.append(m.target)

    edges: list[Edge] = []
    edge_by_key: dict[tuple, int] = {}
    walls = []
    for i, d in enumerate(nodes):
        by_pivot = {m.pivot: m for m in moves[i]}
        row = []
        for v in d.sorted_marks:
            m = by_pivot.get(v)
            if m is None:
                row.append(Wall(v, DIVISORIAL))
                continue
            j = index[m.target]
            key = (frozenset((i, j)), m.contraction)
            if key not in edge_by_key:
                edge_by_key[key] = len(edges)
                edges.append(Edge(i, j, m))
            row.append(Wall(v, FLOP, edge_by_key[key]))
        walls.append(tuple(row))
    return FlopGraph(tuple(nodes), tuple(edges), tuple(walls))


def graph_shape(g: FlopGraph) -> str:
    """``cycle``, ``path``, ``tree`` or ``other``; a single node counts as a path."""
    n, e = len(g.nodes), len(g.edges)
    degrees = [g.degree(i) for i in range(n)]
    if e == n and n >= 3 and all(x == 2 for x in degrees):
        return "cycle"
    if e == n - 1:
        return "path" if max(degrees, default=0) <= 2 else "tree"
    return "other"


def chamber_report(g: FlopGraph) -> dict:
    """Combinatorial summary of the chamber decomposition of the movable cone."""
    types = Counter(e.flop_type for e in g.edges)
    return {
        "seed": str(g.seed),
        "nodes": len(g.nodes),
        "edges": len(g.edges),
        "shape": graph_shape(g),
        "flop_types": dict(sorted(types.items())),
        "divisorial_walls": sum(g.divisorial_count(i) for i in range(len(g.nodes))),
        "chambers": [
            {
                "diagram": str(d),
                "faces": len(d.marks),
                "walls": [{"pivot": w.pivot, "kind": w.kind} for w in g.walls[i]],
            }
            for i, d in enumerate(g.nodes)
        ],
        "assumption": "DIVISORIAL walls presume the Springer map of the seed has degree one",
    }


def is_equivalent(a: MarkedDiagram, b: MarkedDiagram) -> bool:
    return a.dtype == b.dtype and b in equivalence_class(a).nodes


def all_marked_diagrams(dtype, max_marks: int | None = None) -> Iterable[MarkedDiagram]:
    """Every marked diagram of ``dtype`` with between 1 and ``max_marks`` marks."""
    r = dtype.rank
    top = r if max_marks is None else min(r, max_marks)
    for size in range(1, top + 1):
        for marks in combinations(range(1, r + 1), size):
            yield MarkedDiagram(dtype, frozenset(marks))
