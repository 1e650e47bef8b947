import pytest

from orbitflops import orbitdata as od
from orbitflops.diagram import DynkinType, MarkedDiagram, all_types, parse_diagram
from orbitflops.errors import OrbitFlopsError, TableMissError
from orbitflops.partitions import Partition, orbit_dim


def test_g2():
    for mark in (1, 2):
        r = od.richardson(parse_diagram(f"G2[{mark}]"))
        assert (r.label, r.dim) == ("G2(a1)", 10)
    b = od.boundary_codim2(od.orbit("G2", "G2(a1)"))
    assert (b.label, b.dim) == ("~A1", 8)


def test_e6_mark1():
    r = od.richardson(parse_diagram("E6[1]"))
    assert (r.label, r.dim, r.pi1_trivial) == ("2A1", 32, True)
    b = od.boundary_codim2(r)
    assert (b.label, b.dim) == ("A1", 22)
    assert od.boundary_codim(r) == 10 == r.dim - b.dim


def test_e6_mark3():
    r = od.richardson(parse_diagram("E6[3]"))
    assert (r.label, r.dim) == ("A2+2A1", 50)
    b = od.boundary_codim2(r)
    assert (b.label, b.dim) == ("A2+A1", 46)
    assert od.richardson(parse_diagram("E6[5]")) == r
    assert od.richardson(parse_diagram("E6[6]")) == od.richardson(parse_diagram("E6[1]"))


def test_unassigned():
    r = od.richardson(parse_diagram("E6[2]"))
    assert isinstance(r, od.Unassigned)
    assert {o.label for o in r.candidates} == {"A2", "D4(a1)"} and r.dim == 42
    assert r.to_json()["orbit"] == od.UNASSIGNED
    assert isinstance(od.richardson(parse_diagram("E7[4]")), od.Unassigned)
    assert isinstance(od.richardson(parse_diagram("F4[1]")), od.Unassigned)


def test_f4():
    hits = [v for v in range(1, 5) if not isinstance(od.richardson(MarkedDiagram.of("F", 4, [v])), od.Unassigned)]
    assert hits == [2, 3]
    assert all(od.richardson(MarkedDiagram.of("F", 4, [v])).label == "F4(a3)" for v in hits)


def test_springer_resolvable():
    counts = {a: len(od.springer_resolvable(a)) for a in ("G2", "F4", "E6")}
    assert counts == {"G2": 2, "F4": 8, "E6": 14}
    e6 = {o.label: o for o in od.springer_resolvable("E6")}
    assert e6["A3"].dim == 52
    for a in ("E7", "E8", "B4", DynkinType("A", 3)):
        with pytest.raises(TableMissError):
            od.springer_resolvable(a)


def test_richardson_orbits_are_resolvable():
    for alg in ("G2", "F4", "E6"):
        labels = {o.label for o in od.springer_resolvable(alg)}
        for e in od.richardson_table():
            if str(e.diagram.dtype) == alg:
                assert {e.orbit} - {None} <= {od.orbit(alg, x) for x in labels}
                assert {c.label for c in e.candidates} <= labels


def test_table_dims():
    for o in od.ORBITS.values():
        assert o.dim is None or (o.dim % 2 == 0 and 0 < o.dim <= o.algebra.dimension - o.algebra.rank)
        assert o.source


def test_table_agrees_with_root_count():
    for e in od.richardson_table():
        dim = od.richardson_dim(e.diagram)
        if e.orbit is not None:
            assert e.orbit.dim == dim
        known = [c.dim for c in e.candidates if c.dim is not None]
        assert not known or dim in known
        if e.codim2_boundary is not None:
            assert e.codim2_boundary.dim < dim


def test_classical_richardson():
    assert od.richardson(parse_diagram("B4[2]")) == Partition.of([3, 3, 1, 1, 1])
    assert od.richardson(parse_diagram("A5[2]")) == Partition.of([2, 2, 1, 1])
    assert od.richardson(parse_diagram("D5[4]")) == od.richardson(parse_diagram("D5[5]"))


def test_classical_dimension_matches_root_count():
    for t in all_types(12):
        if t.family not in "ABCD":
            continue
        fam = od.classical_family(t)
        for v in range(1, t.rank + 1):
            d = MarkedDiagram(t, frozenset({v}))
            assert orbit_dim(fam, od.richardson(d)) == od.richardson_dim(d), d


def test_errors():
    with pytest.raises(OrbitFlopsError):
        od.richardson(parse_diagram("A5[1,3]"))
    with pytest.raises(TableMissError):
        od.orbit("E6", "Z9")
    with pytest.raises(TableMissError):
        od.boundary_codim2(od.orbit("E6", "E6"))


def test_dump_sources():
    data = od.dump()
    assert all(row["source"] for row in data["orbits"])
    assert all(row["source"] == ["richardson"] for row in data["richardson"])
    assert set(data["springer_resolvable"]) == {"G2", "F4", "E6"}
