"""Nilpotent orbit facts used by the flop calculus, plus a Richardson orbit resolver.

Exceptional orbits are keyed by ASCII Bala-Carter labels: a tilde becomes a
``~`` prefix (``~A2``), primes become apostrophes (``(3A1)''``) and
parenthesised arguments are kept (``F4(a3)``).

Every row carries a ``source`` tag:

``richardson``
    named as the Richardson orbit of a single-marked parabolic;
``boundary``
    named as the maximal (or a codimension-two) orbit in a closure boundary;
``springer-resolvable``
    listed among the orbits whose closures admit Springer resolutions;
``stated``
    dimension or fundamental group stated alongside the orbit;
``cm-table``
    dimension taken from the Collingwood-McGovern orbit tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import DynkinType, MarkedDiagram, delete_vertices
from .errors import OrbitFlopsError, TableMissError
from .partitions import ClassicalFamily, Partition, collapse, dual, levi_type

UNASSIGNED = "UNASSIGNED"


@dataclass(frozen=True)
class OrbitRecord:
    algebra: DynkinType
    label: str
    dim: int | None = None
    pi1_trivial: bool | None = None
    special: bool | None = None
    source: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "algebra": str(self.algebra),
            "label": self.label,
            "dim": self.dim,
            "pi1_trivial": self.pi1_trivial,
            "special": self.special,
            "source": list(self.source),
        }


@dataclass(frozen=True)
class Unassigned:
    """A single-mark parabolic whose Richardson orbit is known only up to a candidate set."""

    diagram: MarkedDiagram
    candidates: tuple[OrbitRecord, ...]
    dim: int

    def to_json(self) -> dict:
        return {
            "diagram": str(self.diagram),
            "orbit": UNASSIGNED,
            "candidates": [o.label for o in self.candidates],
            "dim": self.dim,
        }


@dataclass(frozen=True)
class RichardsonEntry:
    diagram: MarkedDiagram
    orbit: OrbitRecord | None
    candidates: tuple[OrbitRecord, ...] = ()
    codim2_boundary: OrbitRecord | None = None
    source: tuple[str, ...] = field(default=("richardson",))


def _t(name: str) -> DynkinType:
    return DynkinType(name[0], int(name[1:]))


# (label, dim, pi1_trivial, sources)
_ORBITS: dict[str, list[tuple[str, int | None, bool | None, tuple[str, ...]]]] = {
    "G2": [
        ("G2", 12, None, ("springer-resolvable", "cm-table")),
        ("G2(a1)", 10, None, ("richardson", "springer-resolvable", "stated")),
        ("~A1", 8, None, ("boundary", "stated")),
    ],
    "F4": [
        ("A2", 30, None, ("richardson", "springer-resolvable", "cm-table")),
        ("~A2", 30, None, ("richardson", "springer-resolvable", "cm-table")),
        ("F4(a3)", 40, None, ("richardson", "springer-resolvable", "cm-table")),
        ("B3", 42, None, ("springer-resolvable", "cm-table")),
        ("C3", 42, None, ("springer-resolvable", "cm-table")),
        ("F4(a2)", 44, None, ("springer-resolvable", "cm-table")),
        ("F4(a1)", 46, None, ("springer-resolvable", "cm-table")),
        ("F4", 48, None, ("springer-resolvable", "cm-table")),
    ],
    "E6": [
        ("A1", 22, None, ("boundary", "stated")),
        ("2A1", 32, True, ("richardson", "springer-resolvable", "stated")),
        ("3A1", 40, None, ("boundary", "cm-table")),
        ("A2", 42, None, ("richardson", "springer-resolvable", "cm-table")),
        ("A2+A1", 46, None, ("boundary", "stated")),
        ("2A2", 48, None, ("springer-resolvable", "cm-table")),
        ("A2+2A1", 50, True, ("richardson", "springer-resolvable", "stated")),
        ("A3", 52, True, ("springer-resolvable", "stated")),
        ("A3+A1", 56, None, ("boundary", "cm-table")),
        ("D4(a1)", 58, None, ("richardson", "springer-resolvable", "cm-table")),
        ("A4", 60, None, ("springer-resolvable", "cm-table")),
        ("D4", 60, None, ("springer-resolvable", "cm-table")),
        ("A4+A1", 62, None, ("springer-resolvable", "cm-table")),
        ("D5(a1)", 64, None, ("springer-resolvable", "cm-table")),
        ("E6(a3)", 66, None, ("springer-resolvable", "cm-table")),
        ("D5", 68, None, ("springer-resolvable", "cm-table")),
        ("E6(a1)", 70, None, ("springer-resolvable", "cm-table")),
        ("E6", 72, None, ("springer-resolvable", "cm-table")),
    ],
    "E7": [
        (label, None, None, ("richardson",))
        for label in ("(3A1)''", "A2", "2A2", "A2+3A1", "D4(a1)", "A3+A2+A1", "A4+A2")
    ],
    "E8": [
        (label, None, None, ("richardson",))
        for label in ("A2", "2A2", "D4(a1)", "D4(a1)+A2", "A4+A2", "A4+A2+A1", "E8(a7)", "A6+A1")
    ],
}

ORBITS: dict[tuple[str, str], OrbitRecord] = {
    (alg, label): OrbitRecord(_t(alg), label, dim, pi1, None, src)
    for alg, rows in _ORBITS.items()
    for label, dim, pi1, src in rows
}

_SPRINGER_RESOLVABLE = {
    "G2": ("G2", "G2(a1)"),
    "F4": ("A2", "~A2", "F4(a3)", "B3", "C3", "F4(a2)", "F4(a1)", "F4"),
    "E6": (
        "2A1", "A2", "2A2", "A2+2A1", "A3", "D4(a1)", "A4",
        "D4", "A4+A1", "D5(a1)", "E6(a3)", "D5", "E6(a1)", "E6",
    ),
}

# Single-mark Richardson orbits: mark -> label, or a tuple of candidate labels
# when only the unordered set over several marks is known.
_RICHARDSON: dict[str, dict[int, str | tuple[str, ...]]] = {
    "G2": {1: "G2(a1)", 2: "G2(a1)"},
    # Marks 2, 3 both give 2 dim G/P = 40 = dim F4(a3); 1 and 4 give 30.
    "F4": {1: ("A2", "~A2"), 2: "F4(a3)", 3: "F4(a3)", 4: ("A2", "~A2")},
    "E6": {1: "2A1", 6: "2A1", 3: "A2+2A1", 5: "A2+2A1", 2: ("A2", "D4(a1)"), 4: ("A2", "D4(a1)")},
    "E7": {v: tuple(r[0] for r in _ORBITS["E7"]) for v in range(1, 8)},
    "E8": {v: tuple(r[0] for r in _ORBITS["E8"]) for v in range(1, 9)},
}

# outer -> (maximal or codimension-two boundary orbit, codimension)
_BOUNDARY: dict[tuple[str, str], tuple[str, int]] = {
    ("E6", "2A1"): ("A1", 10),
    ("E6", "A2+2A1"): ("A2+A1", 4),
    ("E6", "A2"): ("3A1", 2),
    ("E6", "D4(a1)"): ("A3+A1", 2),
    ("G2", "G2(a1)"): ("~A1", 2),
}


def orbit(algebra: DynkinType | str, label: str) -> OrbitRecord:
    key = (str(algebra), label)
    if key not in ORBITS:
        raise TableMissError(f"orbit {label!r} of {algebra} is not tabulated")
    return ORBITS[key]


def richardson_dim(d: MarkedDiagram) -> int:
    """``2 dim G/P``: the Richardson orbit dimension of the parabolic of ``d``."""
    levi = sum(c.dtype.positive_roots for c in delete_vertices(d, d.marks))
    return 2 * (d.dtype.positive_roots - levi)


def classical_family(dtype: DynkinType) -> ClassicalFamily:
    f, n = dtype.family, dtype.rank
    if f == "A":
        return ClassicalFamily("A", n + 1)
    if f in "BCD":
        return ClassicalFamily(f, n)
    raise OrbitFlopsError(f"{dtype} is exceptional")


def richardson(d: MarkedDiagram) -> Partition | OrbitRecord | Unassigned:
    """Richardson orbit of a single-marked diagram.

    Classical types give a Jordan-type partition; exceptional types give a
    table record, or :class:`Unassigned` where only a candidate set is known.
    """
    if len(d.marks) != 1:
        raise OrbitFlopsError(f"{d} must carry exactly one mark")
    v = next(iter(d.marks))
    f, n = d.dtype.family, d.dtype.rank
    if f == "A":
        return dual(Partition.of((v, n + 1 - v)))
    if f in "BCD":
        fam = ClassicalFamily(f, n)
        k = n if (f == "D" and v >= n - 1) else v
        return collapse(fam, levi_type(fam, k))
    row = _RICHARDSON[str(d.dtype)][v]
    if isinstance(row, str):
        return orbit(d.dtype, row)
    return Unassigned(d, tuple(orbit(d.dtype, x) for x in row), richardson_dim(d))


def richardson_table() -> list[RichardsonEntry]:
    out = []
    for alg, rows in _RICHARDSON.items():
        dtype = _t(alg)
        for v in sorted(rows):
            d = MarkedDiagram(dtype, frozenset({v}))
            row = rows[v]
            if isinstance(row, str):
                o = orbit(dtype, row)
                b = _BOUNDARY.get((alg, row))
                out.append(RichardsonEntry(d, o, (), orbit(dtype, b[0]) if b else None))
            else:
                out.append(RichardsonEntry(d, None, tuple(orbit(dtype, x) for x in row)))
    return out


def boundary_codim2(o: OrbitRecord) -> OrbitRecord:
    """The boundary orbit recorded for ``o`` (maximal in the boundary, or of codimension two)."""
    key = (str(o.algebra), o.label)
    if key not in _BOUNDARY:
        raise TableMissError(f"no boundary orbit recorded for {o.label} in {o.algebra}")
    return orbit(o.algebra, _BOUNDARY[key][0])


def boundary_codim(o: OrbitRecord) -> int:
    key = (str(o.algebra), o.label)
    if key not in _BOUNDARY:
        raise TableMissError(f"no boundary orbit recorded for {o.label} in {o.algebra}")
    return _BOUNDARY[key][1]


def springer_resolvable(algebra: DynkinType | str) -> list[OrbitRecord]:
    """Orbits whose closures admit a Springer resolution (G2, F4, E6 only)."""
    alg = str(algebra)
    if alg not in _SPRINGER_RESOLVABLE:
        raise TableMissError(f"Springer-resolvable orbits of {alg} are not tabulated")
    return [orbit(alg, label) for label in _SPRINGER_RESOLVABLE[alg]]


def dump() -> dict:
    """All embedded tables as plain JSON-ready data."""
    return {
        "orbits": [o.to_json() for o in ORBITS.values()],
        "richardson": [
            {
                "diagram": str(e.diagram),
                "orbit": e.orbit.label if e.orbit else UNASSIGNED,
                "candidates": [c.label for c in e.candidates],
                "codim2_boundary": e.codim2_boundary.label if e.codim2_boundary else None,
                "source": list(e.source),
            }
            for e in richardson_table()
        ],
        "boundary": [
            {"algebra": alg, "orbit": label, "boundary": b, "codim": c, "source": ["boundary"]}
            for (alg, label), (b, c) in _BOUNDARY.items()
        ],
        "springer_resolvable": {
            alg: {"orbits": list(labels), "source": ["springer-resolvable"]}
            for alg, labels in _SPRINGER_RESOLVABLE.items()
        },
    }
