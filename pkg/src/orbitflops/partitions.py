"""Partition calculus for the classical Lie algebras.

Jordan types of nilpotent orbits, Levi types of ``(k, q, k)`` isotropic
flags, B/C/D collapses, orbit dimensions and the codimension-two orbits
sitting in the boundary of a Richardson orbit closure.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import OrbitFlopsError, ParseError


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(not isinstance(x, int) or x < 1 for x in parts):
            raise ParseError(f"partition parts must be positive integers: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ParseError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> Partition:
        """Build from parts in any order; zeros are dropped."""
        return cls(tuple(sorted((x for x in parts if x != 0), reverse=True)))

    @classmethod
    def from_exponents(cls, *pairs: tuple[int, int]) -> Partition:
        """``from_exponents((3, 2), (1, 3))`` is ``[3^2, 1^3]``; zero exponents vanish."""
        parts = []
        for part, mult in pairs:
            if mult < 0:
                raise OrbitFlopsError(f"negative multiplicity {mult} for part {part}")
            parts += [part] * mult
        return cls.of(parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.parts).items(), reverse=True))

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"

    def exponent_form(self) -> str:
        terms = [f"{p}^{m}" if m > 1 else str(p) for p, m in self.multiplicities().items()]
        return "[" + ",".join(terms) + "]"


def parse_partition(text: str) -> Partition:
    """Accept ``[3^2,1^3]``, ``[3,3,1,1,1]`` or a mix; brackets optional."""
    compact = "".join(text.split())
    if compact.startswith("[") and compact.endswith("]"):
        compact = compact[1:-1]
    if not compact:
        return Partition(())
    parts = []
    for term in compact.split(","):
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", term)
        if not m:
            raise ParseError(f"malformed partition term {term!r} in {text!r}")
        part, mult = int(m.group(1)), int(m.group(2) or 1)
        if part == 0:
            raise ParseError(f"zero part in {text!r}")
        parts += [part] * mult
    return Partition.of(parts)


def dual(p: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not p.parts:
        return p
    return Partition(tuple(sum(1 for x in p.parts if x > i) for i in range(p.parts[0])))


def dominates(p: Partition, q: Partition) -> bool:
    """``q <= p`` in dominance order (same total required)."""
    if p.total != q.total:
        return False
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p.parts[i] if i < len(p) else 0
        sq += q.parts[i] if i < len(q) else 0
        if sq > sp:
            return False
    return True


def ord_levi(flag: Iterable[int]) -> Partition:
    """Dual of the flag type sorted decreasingly with zeros dropped."""
    return dual(Partition.of(flag))


@dataclass(frozen=True)
class ClassicalFamily:
    """``A(n)`` = sl(n), ``B(n)`` = so(2n+1), ``C(n)`` = sp(2n), ``D(n)`` = so(2n)."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in "ABCD" or len(self.kind) != 1:
            raise ParseError(f"classical family must be one of A, B, C, D; got {self.kind!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ParseError(f"classical family needs n >= 1, got {self.n!r}")

    @property
    def vector_dim(self) -> int:
        """Dimension of the natural representation."""
        return {"A": self.n, "B": 2 * self.n + 1, "C": 2 * self.n, "D": 2 * self.n}[self.kind]

    @property
    def algebra_dim(self) -> int:
        m = self.vector_dim
        if self.kind == "A":
            return m * m - 1
        if self.kind == "C":
            return m * (m + 1) // 2
        return m * (m - 1) // 2

    @property
    def name(self) -> str:
        return {"A": "sl", "B": "so", "C": "sp", "D": "so"}[self.kind] + str(self.vector_dim)

    def __str__(self):
        return f"{self.kind}({self.n})"


def parse_family(text: str) -> ClassicalFamily:
    """``sl6``, ``so9``, ``so10``, ``sp6`` or Dynkin labels ``A5``, ``B4``, ``C3``, ``D5``.

    A Dynkin label ``A_r`` denotes sl(r+1).
    """
    t = "".join(text.split())
    m = re.fullmatch(r"(sl|so|sp)(\d+)", t, flags=re.IGNORECASE)
    if m:
        alg, dim = m.group(1).lower(), int(m.group(2))
        if alg == "sl":
            return ClassicalFamily("A", dim)
        if alg == "sp":
            if dim % 2:
                raise ParseError(f"sp needs an even dimension, got {dim}")
            return ClassicalFamily("C", dim // 2)
        if dim % 2:
            return ClassicalFamily("B", (dim - 1) // 2)
        return ClassicalFamily("D", dim // 2)
    m = re.fullmatch(r"([ABCD])(\d+)", t)
    if m:
        kind, r = m.group(1), int(m.group(2))
        return ClassicalFamily(kind, r + 1 if kind == "A" else r)
    raise ParseError(f"malformed classical family {text!r}; expected e.g. so9, sp6, B4")


def is_type_valid(fam: ClassicalFamily, p: Partition) -> bool:
    """Jordan-type condition: B/D even parts, C odd parts, occur with even multiplicity."""
    if fam.kind == "A":
        return True
    bad = 0 if fam.kind in "BD" else 1
    return all(m % 2 == 0 for part, m in Counter(p.parts).items() if part % 2 == bad)


def is_very_even(p: Partition) -> bool:
    """All parts even with even multiplicity (two D-orbits share such a partition)."""
    return bool(p.parts) and all(x % 2 == 0 for x in p.parts) and all(
        m % 2 == 0 for m in Counter(p.parts).values()
    )


def _check_total(fam: ClassicalFamily, p: Partition):
    if p.total != fam.vector_dim:
        raise OrbitFlopsError(f"{p} has total {p.total}, {fam.name} needs {fam.vector_dim}")


def collapse(fam: ClassicalFamily, p: Partition) -> Partition:
    """Largest partition of the right B/C/D type dominated by ``p``.

    Repeatedly take the largest part of the wrong parity occurring an odd
    number of times, lower its last occurrence by one and raise the first
    later part that is smaller than the lowered value.
    """
    if fam.kind == "A":
        raise OrbitFlopsError("collapse is defined for families B, C, D only")
    _check_total(fam, p)
    bad = 0 if fam.kind in "BD" else 1
    parts = list(p.parts)
    while True:
        counts = Counter(parts)
        wrong = [x for x, m in counts.items() if x % 2 == bad and m % 2]
        if not wrong:
            return Partition.of(parts)
        q = max(wrong)
        i = len(parts) - 1 - parts[::-1].index(q)
        parts[i] -= 1
        for j in range(i + 1, len(parts)):
            if parts[j] < q - 1:
                parts[j] += 1
                break
        else:
            parts.append(1)
        parts = sorted((x for x in parts if x), reverse=True)


def orbit_dim(fam: ClassicalFamily, jordan: Partition) -> int:
    """Dimension of the nilpotent orbit with the given Jordan type."""
    _check_total(fam, jordan)
    if not is_type_valid(fam, jordan):
        raise OrbitFlopsError(f"{jordan} is not a Jordan type for {fam.name}")
    s2 = sum(x * x for x in dual(jordan).parts)
    odd = sum(1 for x in jordan.parts if x % 2)
    m = fam.vector_dim
    if fam.kind == "A":
        return m * m - s2
    if fam.kind == "C":
        value = Fraction(fam.algebra_dim) - Fraction(s2, 2) - Fraction(odd, 2)
    else:
        value = Fraction(fam.algebra_dim) - Fraction(s2, 2) + Fraction(odd, 2)
    if value.denominator != 1 or value < 0:
        raise OrbitFlopsError(f"non-integral orbit dimension {value} for {jordan} in {fam.name}")
    return int(value)


def _check_flag(fam: ClassicalFamily, k: int) -> int:
    """Validate ``(k, q, k)`` and return ``q``."""
    if fam.kind == "A":
        raise OrbitFlopsError("(k, q, k) flags are defined for families B, C, D only")
    if not isinstance(k, int) or k < 1:
        raise OrbitFlopsError(f"k must be a positive integer, got {k!r}")
    q = fam.vector_dim - 2 * k
    if q < 0 or (fam.kind == "B" and q == 0):
        raise OrbitFlopsError(f"no isotropic flag ({k}, {q}, {k}) for {fam.name}")
    return q


def levi_type(fam: ClassicalFamily, k: int) -> Partition:
    """Levi type of the parabolic stabilising a ``(k, q, k)`` isotropic flag."""
    _check_flag(fam, k)
    n = fam.n
    if fam.kind == "B":
        if 3 * k > 2 * n + 1:
            return Partition.from_exponents((3, 2 * n + 1 - 2 * k), (2, 3 * k - 2 * n - 1))
        return Partition.from_exponents((3, k), (1, 2 * n - 3 * k + 1))
    if fam.kind == "D" and k == n:
        return Partition.from_exponents((2, k))
    if 3 * k > 2 * n:
        return Partition.from_exponents((3, 2 * n - 2 * k), (2, 3 * k - 2 * n))
    return Partition.from_exponents((3, k), (1, 2 * n - 3 * k))


class Degree(enum.Enum):
    DEGREE_ONE = "DEGREE_ONE"
    DEGREE_GT_ONE = "DEGREE_GT_ONE"
    UNSPECIFIED = "UNSPECIFIED"


def degree_one_parity(fam: ClassicalFamily, k: int) -> Degree:
    """Degree of the Springer map for a ``(k, q, k)`` parabolic, where parity decides it.

    Only the parity rules are encoded: B with ``3k > 2n+1`` needs ``k`` odd,
    C with ``3k <= 2n`` needs ``k`` even, D with ``n > k`` and ``3k > 2n``
    needs ``k`` even. The remaining cases have ``S(pi) = pi`` and are degree one.
    The general criterion is not implemented; ``UNSPECIFIED`` is reserved for it.
    """
    _check_flag(fam, k)
    n = fam.n
    if fam.kind == "B" and 3 * k > 2 * n + 1:
        return Degree.DEGREE_ONE if k % 2 else Degree.DEGREE_GT_ONE
    if fam.kind == "C" and 3 * k <= 2 * n:
        return Degree.DEGREE_ONE if k % 2 == 0 else Degree.DEGREE_GT_ONE
    if fam.kind == "D" and n > k and 3 * k > 2 * n:
        return Degree.DEGREE_ONE if k % 2 == 0 else Degree.DEGREE_GT_ONE
    return Degree.DEGREE_ONE


@dataclass(frozen=True)
class Witness:
    richardson: Partition
    witness: Partition


def codim2_witness(fam: ClassicalFamily, k: int) -> Witness:
    """Richardson Jordan type and an explicit orbit two dimensions below it in its closure."""
    if degree_one_parity(fam, k) is Degree.DEGREE_GT_ONE:
        raise OrbitFlopsError(f"Springer map of ({k}, q, {k}) in {fam.name} has degree > 1")
    n = fam.n
    X = Partition.from_exponents
    if fam.kind == "B":
        t = Fraction(2 * n + 1, 3)
        if k > t:
            w = X((3, 2 * n + 1 - 2 * k), (2, 3 * k - 2 * n - 3), (1, 4))
        elif k < t:
            w = X((3, k - 1), (2, 2), (1, 2 * n - 3 * k))
        else:
            w = X((3, k - 1), (1, 3))
    elif fam.kind == "C":
        t = Fraction(2 * n, 3)
        if k > t:
            w = X((3, 2 * n - 2 * k), (2, 3 * k - 2 * n - 1), (1, 2))
        elif k < t:
            w = X((3, k - 2), (2, 4), (1, 2 * n - 3 * k - 2))
        else:
            w = X((3, k - 2), (2, 3))
    else:
        if k == n:
            raise OrbitFlopsError("no codimension-two witness is tabulated for the (n, 0, n) flag of D(n)")
        t = Fraction(2 * n, 3)
        if k > t:
            w = X((3, 2 * n - 2 * k), (2, 3 * k - 2 * n - 2), (1, 4))
        elif k < t:
            w = X((3, k - 1), (2, 2), (1, 2 * n - 3 * k - 1))
        else:
            w = X((3, k - 1), (1, 3))
    return Witness(collapse(fam, levi_type(fam, k)), w)
