"""Dynkin diagrams, marked diagrams and connected components.

Vertex ids follow Bourbaki numbering throughout:

* ``A_n``: chain ``1 - 2 - ... - n``.
* ``B_n`` / ``C_n``: chain ``1 .. n``, double bond between ``n-1`` and ``n``
  (vertex ``n`` is short for ``B``, long for ``C``).
* ``D_n``: chain ``1 .. n-2``; fork vertices ``n-1`` and ``n`` hang off ``n-2``.
* ``E_6/E_7/E_8``: chain ``1 - 3 - 4 - 5 - ...`` with ``2`` attached to ``4``.
* ``F_4``: ``1 - 2 => 3 - 4`` (``1, 2`` long).
* ``G_2``: triple bond ``1 - 2`` (``1`` short, ``2`` long).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import NoDualError, ParseError

FAMILIES = "ABCDEFG"


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        if f not in FAMILIES or len(f) != 1:
            raise ParseError(f"unknown family {f!r}")
        if not isinstance(r, int) or r < 1:
            raise ParseError(f"rank must be a positive integer, got {r!r}")
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 4,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[f]
        if not ok:
            raise ParseError(f"rank {r} out of range for family {f}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> DynkinType:
        m = re.fullmatch(r"([A-G])(\d+)", "".join(text.split()))
        if not m:
            raise ParseError(f"malformed Dynkin type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    @property
    def positive_roots(self) -> int:
        """Number of positive roots (= complex dimension of G/B)."""
        n = self.rank
        if self.family == "A":
            return n * (n + 1) // 2
        if self.family in "BC":
            return n * n
        if self.family == "D":
            return n * (n - 1)
        return {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}[str(self)]

    @property
    def dimension(self) -> int:
        """Dimension of the simple Lie algebra."""
        return 2 * self.positive_roots + self.rank


def all_types(max_rank: int = 8) -> list[DynkinType]:
    """Every simple type of rank at most ``max_rank``."""
    out = []
    for f in FAMILIES:
        for r in range(1, max_rank + 1):
            try:
                out.append(DynkinType(f, r))
            except ParseError:
                pass
    return out


@dataclass(frozen=True)
class Bond:
    """An edge of a Dynkin diagram. ``long`` is the long-root end of a multiple bond."""

    u: int
    v: int
    multiplicity: int = 1
    long: int | None = None

    @property
    def ends(self) -> frozenset[int]:
        return frozenset((self.u, self.v))


@dataclass(frozen=True)
class DiagramGraph:
    dtype: DynkinType
    vertices: tuple[int, ...]
    bonds: tuple[Bond, ...]

    def neighbours(self, v: int) -> list[int]:
        out = []
        for b in self.bonds:
            if b.u == v:
                out.append(b.v)
            elif b.v == v:
                out.append(b.u)
        return sorted(out)

    def bond(self, u: int, v: int) -> Bond | None:
        key = frozenset((u, v))
        for b in self.bonds:
            if b.ends == key:
                return b
        return None

    def induced_bonds(self, keep: Iterable[int]) -> tuple[Bond, ...]:
        keep = set(keep)
        return tuple(b for b in self.bonds if b.u in keep and b.v in keep)


@lru_cache(maxsize=None)
def diagram_graph(dtype: DynkinType) -> DiagramGraph:
    """The Bourbaki-numbered diagram of ``dtype``."""
    f, n = dtype.family, dtype.rank
    bonds: list[Bond] = []
    if f == "A":
        bonds = [Bond(i, i + 1) for i in range(1, n)]
    elif f in "BC":
        bonds = [Bond(i, i + 1) for i in range(1, n - 1)]
        bonds.append(Bond(n - 1, n, 2, n - 1 if f == "B" else n))
    elif f == "D":
        bonds = [Bond(i, i + 1) for i in range(1, n - 2)]
        bonds += [Bond(n - 2, n - 1), Bond(n - 2, n)]
    elif f == "E":
        bonds = [Bond(1, 3), Bond(2, 4)] + [Bond(i, i + 1) for i in range(3, n)]
    elif f == "F":
        bonds = [Bond(1, 2), Bond(2, 3, 2, 2), Bond(3, 4)]
    elif f == "G":
        bonds = [Bond(1, 2, 3, 2)]
    return DiagramGraph(dtype, tuple(range(1, n + 1)), tuple(bonds))


@dataclass(frozen=True)
class MarkedDiagram:
    """A Dynkin diagram with marked vertices (the complement of the Levi's simple roots).

    Parsed and user-facing diagrams always carry at least one mark; the
    contraction of a single-marked diagram is the only unmarked instance.
    """

    dtype: DynkinType
    marks: frozenset[int]

    def __post_init__(self):
        marks = frozenset(self.marks)
        object.__setattr__(self, "marks", marks)
        for v in marks:
            if not isinstance(v, int) or not 1 <= v <= self.dtype.rank:
                raise ParseError(f"mark {v!r} out of range for {self.dtype}")

    @classmethod
    def of(cls, family: str, rank: int, marks: Iterable[int]) -> MarkedDiagram:
        marks = list(marks)
        if len(set(marks)) != len(marks):
            raise ParseError(f"duplicate marks in {marks}")
        return cls(DynkinType(family, rank), frozenset(marks))

    @property
    def graph(self) -> DiagramGraph:
        return diagram_graph(self.dtype)

    @property
    def sorted_marks(self) -> list[int]:
        return sorted(self.marks)

    def __str__(self):
        return f"{self.dtype}[{','.join(map(str, self.sorted_marks))}]"

    def to_json(self) -> dict:
        return {
            "family": self.dtype.family,
            "rank": self.dtype.rank,
            "marks": self.sorted_marks,
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> MarkedDiagram:
        return cls.of(obj["family"], obj["rank"], obj["marks"])

    def unmark(self, v: int) -> MarkedDiagram:
        return MarkedDiagram(self.dtype, self.marks - {v})


_DIAGRAM_RE = re.compile(r"([A-G])(\d+)\[(\d+(?:,\d+)*)\]")


def parse_diagram(text: str) -> MarkedDiagram:
    """Parse ``FAMILY RANK '[' id (',' id)* ']'``, e.g. ``A5[1,3]``.

    Whitespace is ignored anywhere in the text.
    """
    compact = "".join(text.split())
    m = _DIAGRAM_RE.fullmatch(compact)
    if not m:
        raise ParseError(f"malformed diagram {text!r}; expected e.g. 'A5[1,3]'")
    marks = [int(x) for x in m.group(3).split(",")]
    return MarkedDiagram.of(m.group(1), int(m.group(2)), marks)


@dataclass(frozen=True)
class Component:
    """A connected piece of a diagram after vertex deletion.

    ``vertices[i]`` is the ambient id of standard (Bourbaki) vertex ``i + 1``
    of ``dtype``; ``marks`` holds the surviving marks as ambient ids.
    """

    dtype: DynkinType
    vertices: tuple[int, ...]
    marks: frozenset[int] = field(default_factory=frozenset)

    def standard(self, ambient: int) -> int:
        return self.vertices.index(ambient) + 1

    def ambient(self, standard: int) -> int:
        return self.vertices[standard - 1]

    @property
    def is_single_marked(self) -> bool:
        return len(self.marks) == 1

    @property
    def mark(self) -> int:
        if len(self.marks) != 1:
            raise ValueError(f"component {self} carries {len(self.marks)} marks, not one")
        return next(iter(self.marks))

    def __contains__(self, v):
        return v in self.vertices

    def __str__(self):
        ids = ",".join(map(str, sorted(self.vertices)))
        marks = ",".join(map(str, sorted(self.marks)))
        return f"{self.dtype}{{{ids}}}[{marks}]"


def _adjacency(vertices: set[int], bonds: Iterable[Bond]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for b in bonds:
        adj[b.u].append(b.v)
        adj[b.v].append(b.u)
    for v in adj:
        adj[v].sort()
    return adj


def _walk(adj: Mapping[int, list[int]], start: int, prev: int) -> list[int]:
    """Follow an unbranched arm from ``start`` away from ``prev``."""
    arm = [start]
    while True:
        nxt = [w for w in adj[arm[-1]] if w != prev]
        if not nxt:
            return arm
        prev = arm[-1]
        arm.append(nxt[0])


def _path_order(adj: Mapping[int, list[int]], first: int) -> list[int]:
    return _walk(adj, first, -1)


def classify_component(vertices: Iterable[int], bonds: Iterable[Bond]) -> tuple[DynkinType, tuple[int, ...]]:
    """Classify a connected sub-diagram and put its vertices in Bourbaki order.

    Ties between symmetric choices go to the smaller ambient id, so the full
    diagram of any type maps to itself by the identity.
    """
    vs = set(vertices)
    bonds = tuple(bonds)
    n = len(vs)
    adj = _adjacency(vs, bonds)
    if n == 1:
        return DynkinType("A", 1), (next(iter(vs)),)

    multiple = [b for b in bonds if b.multiplicity > 1]
    if len(multiple) > 1 or any(len(adj[v]) > 3 for v in vs):
        raise ValueError(f"not a Dynkin diagram: {sorted(vs)}")
    ends = [v for v in vs if len(adj[v]) == 1]

    if multiple:
        b = multiple[0]
        short = b.v if b.long == b.u else b.u
        if b.multiplicity == 3:
            if n != 2:
                raise ValueError("triple bond outside G2")
            return DynkinType("G", 2), (short, b.long)
        if n == 2:
            # B2 = C2; named after whichever has its standard order ascending.
            if b.long < short:
                return DynkinType("B", 2), (b.long, short)
            return DynkinType("C", 2), (short, b.long)
        if b.u in ends or b.v in ends:
            end = b.u if b.u in ends else b.v
            start = next(e for e in ends if e != end)
            order = _path_order(adj, start)
            family = "B" if end == short else "C"
            return DynkinType(family, n), tuple(order)
        if n != 4:
            raise ValueError(f"interior double bond in a {n}-vertex diagram")
        start = next(e for e in ends if b.long in adj[e])
        return DynkinType("F", 4), tuple(_path_order(adj, start))

    branch = [v for v in vs if len(adj[v]) == 3]
    if not branch:
        return DynkinType("A", n), tuple(_path_order(adj, min(ends)))
    if len(branch) > 1:
        raise ValueError(f"two branch points in {sorted(vs)}")
    c = branch[0]
    arms = sorted((_walk(adj, w, c) for w in adj[c]), key=lambda a: (len(a), a[-1]))
    lengths = tuple(len(a) for a in arms)
    if lengths[:2] == (1, 1):
        if lengths[2] == 1:
            # D4: the smallest leaf starts the chain.
            chain, fork = arms[0], sorted(arms[1] + arms[2])
        else:
            chain, fork = arms[2], sorted(arms[0] + arms[1])
        order = list(reversed(chain)) + [c] + fork
        return DynkinType("D", n), tuple(order)
    if lengths[:2] == (1, 2) and lengths[2] in (2, 3, 4):
        leaf, a2, a3 = arms
        if lengths[2] == 2:
            a2, a3 = sorted((a2, a3), key=lambda a: a[-1])
        order = [a2[1], leaf[0], a2[0], c] + a3
        return DynkinType("E", n), tuple(order)
    raise ValueError(f"not a Dynkin diagram: {sorted(vs)}")


def components(graph: DiagramGraph, keep: Iterable[int], marks: Iterable[int] = ()) -> list[Component]:
    """Connected components of the sub-diagram induced on ``keep``, ordered by smallest id."""
    keep = set(keep)
    marks = frozenset(marks)
    bonds = graph.induced_bonds(keep)
    adj = _adjacency(keep, bonds)
    seen: set[int] = set()
    out = []
    for v in sorted(keep):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            for w in adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        dtype, order = classify_component(comp, [b for b in bonds if b.u in comp])
        out.append(Component(dtype, order, marks & comp))
    return out


def delete_vertices(d: MarkedDiagram, removed: Iterable[int]) -> list[Component]:
    """Remove vertices (and their bonds) and return what is left, component by component."""
    removed = set(removed)
    bad = removed - set(d.graph.vertices)
    if bad:
        raise ParseError(f"vertices {sorted(bad)} not in {d.dtype}")
    keep = set(d.graph.vertices) - removed
    return components(d.graph, keep, d.marks - removed)


def component_of(d: MarkedDiagram, v: int, removed: Iterable[int]) -> Component:
    for comp in delete_vertices(d, removed):
        if v in comp:
            return comp
    raise ValueError(f"vertex {v} was removed")


def standard_involution(dtype: DynkinType) -> dict[int, int]:
    """The nontrivial diagram automorphism of ``dtype`` on standard ids.

    For ``D4`` the fork swap ``3 <-> 4`` is returned.
    """
    f, n = dtype.family, dtype.rank
    if f == "A" and n >= 2:
        return {i: n + 1 - i for i in range(1, n + 1)}
    if f == "D":
        perm = {i: i for i in range(1, n + 1)}
        perm[n - 1], perm[n] = n, n - 1
        return perm
    if str(dtype) == "E6":
        return {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}
    raise NoDualError(f"{dtype} has no nontrivial diagram automorphism")


def component_involution(c: Component) -> dict[int, int]:
    """The nontrivial automorphism of ``c`` as a map on ambient ids."""
    perm = standard_involution(c.dtype)
    return {c.ambient(i): c.ambient(j) for i, j in perm.items()}


# Flag types. Only type A (any marks) and the single-mark (k, q, k) shapes of
# B/C/D are modelled.

def marks_from_flag(flag: Iterable[int]) -> MarkedDiagram:
    """SL(n) flag type ``(n_1, ..., n_l)`` -> marks at the cumulative sums."""
    flag = list(flag)
    if not flag or any(not isinstance(x, int) or x < 1 for x in flag):
        raise ParseError(f"flag type must be positive integers, got {flag}")
    n = sum(flag)
    if len(flag) < 2:
        raise ParseError("a proper flag type needs at least two parts")
    marks, s = [], 0
    for x in flag[:-1]:
        s += x
        marks.append(s)
    return MarkedDiagram.of("A", n - 1, marks)


def flag_type(d: MarkedDiagram) -> tuple[int, ...]:
    """Flag type of the parabolic attached to ``d``.

    Type A: consecutive differences of the marks. B/C/D with one mark:
    ``(k, q, k)`` of an isotropic flag; both D fork vertices give ``(n, 0, n)``.
    """
    f, n = d.dtype.family, d.dtype.rank
    if f == "A":
        cuts = [0] + d.sorted_marks + [n + 1]
        return tuple(b - a for a, b in zip(cuts, cuts[1:]))
    if f not in "BCD" or len(d.marks) != 1:
        raise ParseError(f"flag types are modelled only for type A and single-marked B/C/D, not {d}")
    k = next(iter(d.marks))
    if f == "B":
        return (k, 2 * n + 1 - 2 * k, k)
    if f == "D" and k >= n - 1:
        return (n, 0, n)
    return (k, 2 * n - 2 * k, k)
