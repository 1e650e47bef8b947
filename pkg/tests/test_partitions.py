import pytest
from hypothesis import given, strategies as st

from oracles import brute_collapse, leq, orbit_dim_numeric, partitions_of, transpose, valid
from orbitflops.errors import OrbitFlopsError, ParseError
from orbitflops.partitions import (
    ClassicalFamily,
    Degree,
    Partition,
    codim2_witness,
    collapse,
    degree_one_parity,
    dominates,
    dual,
    is_type_valid,
    is_very_even,
    levi_type,
    ord_levi,
    orbit_dim,
    parse_family,
    parse_partition,
)

P = Partition.of
fam = parse_family


def test_parse_partition_notations():
    assert parse_partition("[3^2,1^3]") == parse_partition("3,3,1,1,1") == P([3, 3, 1, 1, 1])
    assert parse_partition("[1,3,1,3,1]").parts == (3, 3, 1, 1, 1)
    assert P([3, 3, 1, 1, 1]).exponent_form() == "[3^2,1^3]"
    assert str(P([2, 2, 2])) == "[2,2,2]"


def test_empty_partition():
    assert parse_partition("[]") == parse_partition("") == P([])
    assert P([]).total == 0


@pytest.mark.parametrize("text", ["[3^-1]", "[a]", "[3,,1]", "[0^2]", "[3^2^1]"])
def test_parse_partition_errors(text):
    with pytest.raises(ParseError):
        parse_partition(text)


def test_parse_family():
    assert fam("so9") == ClassicalFamily("B", 4)
    assert fam("so10") == ClassicalFamily("D", 5)
    assert fam("sp6") == ClassicalFamily("C", 3)
    assert fam("sl6") == ClassicalFamily("A", 6)
    assert fam("A5") == fam("sl6")
    assert fam("D5").algebra_dim == 45
    for bad in ("sp7", "so", "gl3", "E6", "B"):
        with pytest.raises(ParseError):
            fam(bad)


def test_dual_examples():
    assert dual(P([3, 3, 1, 1, 1])) == P([5, 2, 2])
    assert dual(P([1, 1, 1])) == P([3])
    assert dual(P([4, 2, 1])) == P([3, 2, 1, 1])


partitions = st.lists(st.integers(1, 12), min_size=1, max_size=12).map(P)


@given(partitions)
def test_dual_involution_and_oracle(p):
    assert dual(dual(p)) == p
    assert dual(p).parts == transpose(p.parts)


@given(partitions, partitions)
def test_dominance_matches_oracle(p, q):
    if p.total == q.total:
        assert dominates(p, q) == leq(q.parts, p.parts)
        # transpose reverses dominance
        assert dominates(p, q) == dominates(dual(q), dual(p))


def test_levi_examples():
    assert levi_type(fam("B4"), 2) == P([3, 3, 1, 1, 1])
    assert levi_type(fam("B4"), 4) == P([3, 2, 2, 2])
    assert levi_type(fam("C3"), 3) == P([2, 2, 2])
    assert levi_type(fam("D5"), 5) == P([2] * 5)
    assert levi_type(fam("D6"), 2) == P([3, 3, 1, 1, 1, 1, 1, 1])


def test_levi_is_ord_of_flag():
    for kind in "BCD":
        for n in range(1, 21):
            f = ClassicalFamily(kind, n)
            for k in range(1, f.vector_dim // 2 + 1):
                q = f.vector_dim - 2 * k
                if kind == "B" and q == 0 or kind == "D" and k == n:
                    continue
                lt = levi_type(f, k)
                assert lt == ord_levi((k, q, k)) if q else lt == dual(P([k, k]))
                assert lt.total == f.vector_dim


def test_flag_errors():
    for f, k in [(fam("B4"), 5), (fam("C3"), 4), (fam("D5"), 6), (fam("C3"), 0), (fam("sl6"), 1)]:
        with pytest.raises(OrbitFlopsError):
            levi_type(f, k)


def test_degree_examples():
    assert degree_one_parity(fam("B4"), 4) is Degree.DEGREE_GT_ONE
    assert degree_one_parity(fam("B4"), 3) is Degree.DEGREE_ONE
    assert degree_one_parity(fam("C6"), 4) is Degree.DEGREE_ONE
    assert degree_one_parity(fam("C6"), 3) is Degree.DEGREE_GT_ONE
    assert degree_one_parity(fam("C6"), 5) is Degree.DEGREE_ONE
    assert degree_one_parity(fam("D7"), 5) is Degree.DEGREE_GT_ONE
    assert degree_one_parity(fam("D7"), 6) is Degree.DEGREE_ONE
    assert degree_one_parity(fam("D5"), 5) is Degree.DEGREE_ONE


def test_collapse_examples():
    assert collapse(fam("sp6"), P([3, 1, 1, 1])) == P([2, 2, 1, 1])
    assert collapse(fam("so9"), P([3, 2, 2, 2])) == P([3, 2, 2, 1, 1])
    assert collapse(fam("so8"), P([4, 4])) == P([4, 4])
    assert collapse(fam("so7"), P([4, 3])) == P([3, 3, 1])
    with pytest.raises(OrbitFlopsError):
        collapse(fam("sp6"), P([3, 3, 1]))


def families_for(total):
    """so(total) and sp(total) where they exist, so(1) aside."""
    if total < 2:
        return
    if total % 2:
        yield ClassicalFamily("B", total // 2)
    else:
        yield ClassicalFamily("C", total // 2)
        yield ClassicalFamily("D", total // 2)


@pytest.mark.parametrize("total", range(1, 15))
def test_collapse_matches_brute_force(total):
    for f in families_for(total):
        for parts in partitions_of(total):
            (best,) = brute_collapse(f.kind, parts)
            c = collapse(f, P(parts))
            assert c.parts == best
            assert collapse(f, c) == c
            assert dominates(P(parts), c)
            assert (c == P(parts)) == valid(f.kind, parts)


@pytest.mark.parametrize("total", range(1, 11))
def test_orbit_dim_matches_matrix_oracle(total):
    for f in families_for(total):
        for parts in partitions_of(total):
            if not valid(f.kind, parts):
                with pytest.raises(OrbitFlopsError):
                    orbit_dim(f, P(parts))
                continue
            assert orbit_dim(f, P(parts)) == orbit_dim_numeric(f.kind, parts)


@pytest.mark.parametrize("n", range(1, 8))
def test_orbit_dim_type_a(n):
    for parts in partitions_of(n):
        d = orbit_dim(ClassicalFamily("A", n), P(parts))
        assert d == n * n - sum(x * x for x in transpose(parts)) == orbit_dim_numeric("A", parts)


def test_orbit_dim_values():
    assert orbit_dim(fam("so9"), P([3, 3, 1, 1, 1])) == 22
    assert orbit_dim(fam("so9"), P([3, 2, 2, 1, 1])) == 20
    assert orbit_dim(fam("sp6"), P([2, 2, 2])) == 12
    assert orbit_dim(fam("sl6"), P([6])) == 30


def test_orbit_dim_monotone_and_even():
    for f in (fam("so11"), fam("sp10"), fam("so12")):
        ok = [P(p) for p in partitions_of(f.vector_dim) if valid(f.kind, p)]
        dims = {p: orbit_dim(f, p) for p in ok}
        assert all(d % 2 == 0 for d in dims.values())
        for p in ok:
            for q in ok:
                if p != q and dominates(p, q):
                    assert dims[p] > dims[q]


def test_very_even():
    assert is_very_even(P([2, 2, 4, 4]))
    assert not is_very_even(P([2, 2, 2]))
    assert not is_very_even(P([3, 3, 1, 1]))


def test_witness_examples():
    w = codim2_witness(fam("C6"), 4)
    assert w.richardson == P([3, 3, 3, 3]) and w.witness == P([3, 3, 2, 2, 2])
    w = codim2_witness(fam("B4"), 2)
    assert w.witness == P([3, 2, 2, 1, 1])
    assert orbit_dim(fam("B4"), w.richardson) - orbit_dim(fam("B4"), w.witness) == 2
    with pytest.raises(OrbitFlopsError):
        codim2_witness(fam("B4"), 4)
    with pytest.raises(OrbitFlopsError):
        codim2_witness(fam("D6"), 6)


def legal_witness_cases(max_n=12):
    for kind in "BCD":
        for n in range(1, max_n + 1):
            f = ClassicalFamily(kind, n)
            for k in range(1, n + 1):
                if kind == "D" and k == n:
                    continue
                if degree_one_parity(f, k) is not Degree.DEGREE_GT_ONE:
                    yield f, k


def test_witness_codim_two_everywhere():
    cases = list(legal_witness_cases())
    assert len(cases) > 50
    for f, k in cases:
        w = codim2_witness(f, k)
        assert is_type_valid(f, w.witness)
        assert orbit_dim(f, w.richardson) - orbit_dim(f, w.witness) == 2, (f, k)
        assert dominates(w.richardson, w.witness)
