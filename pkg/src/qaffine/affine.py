"""Static data for the fourteen affine families.

Everything downstream consumes only I_0-level data: the index set, the
identification exponents m_i, the duality shift p*, the involution i -> i*,
the finite simply-laced type of the associated root system, and the graph
distance on the Dynkin diagram of g_0.  The affine node 0 is never
materialized.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .roots import FinRootSystem, graph_distance, root_system
from .scalars import (
    MINUS_ONE,
    MINUS_Q,
    MINUS_QS,
    MINUS_QT,
    ONE,
    I_UNIT,
    Q,
    QS,
    SpectralScalar,
    scalar,
)


class RankOutOfRange(ValueError):
    """Rank parameter outside the family's legal range."""


class Family(str, Enum):
    A1 = "A1"
    B1 = "B1"
    C1 = "C1"
    D1 = "D1"
    E6_1 = "E6_1"
    E7_1 = "E7_1"
    E8_1 = "E8_1"
    F4_1 = "F4_1"
    G2_1 = "G2_1"
    A2_EVEN = "A2_even"
    A2_ODD = "A2_odd"
    D2 = "D2"
    E6_2 = "E6_2"
    D4_3 = "D4_3"


_MIN_RANK = {
    Family.A1: 1,
    Family.B1: 2,
    Family.C1: 3,
    Family.D1: 4,
    Family.A2_EVEN: 1,
    Family.A2_ODD: 2,
    Family.D2: 3,
}

_FIXED_RANK = {
    Family.E6_1: 6,
    Family.E7_1: 7,
    Family.E8_1: 8,
    Family.F4_1: 4,
    Family.G2_1: 2,
    Family.E6_2: 4,
    Family.D4_3: 2,
}

TWISTED = {Family.A2_EVEN, Family.A2_ODD, Family.D2, Family.E6_2, Family.D4_3}


@dataclass(frozen=True)
class AffineType:
    family: Family
    n: int

    def __post_init__(self):
        if self.family in _FIXED_RANK:
            if self.n != _FIXED_RANK[self.family]:
                raise RankOutOfRange(f"{self.family.value} has fixed rank {_FIXED_RANK[self.family]}")
        elif self.n < _MIN_RANK[self.family]:
            raise RankOutOfRange(f"{self.family.value} needs n >= {_MIN_RANK[self.family]}, got {self.n}")

    def __str__(self) -> str:
        return format_type_string(self)


def affine_type(family: Family, n: int | None = None) -> AffineType:
    if n is None:
        if family not in _FIXED_RANK:
            raise RankOutOfRange(f"{family.value} needs an explicit rank")
        n = _FIXED_RANK[family]
    return AffineType(family, n)


_TYPE_RE = re.compile(r"^([A-G])([0-9]+)-([123])$")


def parse_type_string(text: str) -> AffineType:
    """Parse `<family><N>-<twist>`, e.g. A5-1, B3-1, D5-2, A4-2, E6-2, D4-3."""
    m = _TYPE_RE.match(text.strip())
    if not m:
        raise RankOutOfRange(f"malformed type string {text!r}")
    letter, num, twist = m.group(1), int(m.group(2)), int(m.group(3))
    key = (letter, twist)
    if key == ("A", 1):
        return AffineType(Family.A1, num)
    if key == ("B", 1):
        return AffineType(Family.B1, num)
    if key == ("C", 1):
        return AffineType(Family.C1, num)
    if key == ("D", 1):
        return AffineType(Family.D1, num)
    if key == ("E", 1) and num in (6, 7, 8):
        return AffineType({6: Family.E6_1, 7: Family.E7_1, 8: Family.E8_1}[num], num)
    if key == ("F", 1) and num == 4:
        return AffineType(Family.F4_1, 4)
    if key == ("G", 1) and num == 2:
        return AffineType(Family.G2_1, 2)
    if key == ("A", 2):
        if num % 2 == 0:
            return AffineType(Family.A2_EVEN, num // 2)
        return AffineType(Family.A2_ODD, (num + 1) // 2)
    if key == ("D", 2):
        return AffineType(Family.D2, num - 1)
    if key == ("E", 2) and num == 6:
        return AffineType(Family.E6_2, 4)
    if key == ("D", 3) and num == 4:
        return AffineType(Family.D4_3, 2)
    raise RankOutOfRange(f"unknown affine type {text!r}")


def format_type_string(t: AffineType) -> str:
    f, n = t.family, t.n
    if f == Family.A1:
        return f"A{n}-1"
    if f == Family.B1:
        return f"B{n}-1"
    if f == Family.C1:
        return f"C{n}-1"
    if f == Family.D1:
        return f"D{n}-1"
    if f == Family.E6_1:
        return "E6-1"
    if f == Family.E7_1:
        return "E7-1"
    if f == Family.E8_1:
        return "E8-1"
    if f == Family.F4_1:
        return "F4-1"
    if f == Family.G2_1:
        return "G2-1"
    if f == Family.A2_EVEN:
        return f"A{2 * n}-2"
    if f == Family.A2_ODD:
        return f"A{2 * n - 1}-2"
    if f == Family.D2:
        return f"D{n + 1}-2"
    if f == Family.E6_2:
        return "E6-2"
    return "D4-3"


def _chain_adj(size: int) -> tuple[tuple[int, ...], ...]:
    adj: list[list[int]] = [[] for _ in range(size + 1)]
    for i in range(1, size):
        adj[i].append(i + 1)
        adj[i + 1].append(i)
    return tuple(tuple(x) for x in adj)


@dataclass(eq=False)
class AffineData:
    """All I_0-level constants of one affine family at one rank.

    Instances are shared via `build()` and treated as immutable; the private
    dicts are append-only memo caches (single-writer initialization).
    """

    type: AffineType
    i0: tuple[int, ...]
    m: dict[int, int]
    pstar: SpectralScalar
    ptilde: SpectralScalar
    istar: dict[int, int]
    gfin: FinRootSystem
    hvee: int
    g0_adj: tuple[tuple[int, ...], ...]
    # stabilizer subgroup of sigma_Z, as reduction data on (phase, 6*qexp):
    # generator (phase_step, e_step) plus an optional pure-phase generator
    k0_e_step: int
    k0_phase_step: int
    k0_phase_mod: int
    sigma0_base: dict[int, SpectralScalar]
    _denom_cache: dict = field(default_factory=dict, repr=False)
    _sfunc_cache: dict = field(default_factory=dict, repr=False)
    _misc_cache: dict = field(default_factory=dict, repr=False)

    @property
    def family(self) -> Family:
        return self.type.family

    @property
    def n(self) -> int:
        return self.type.n

    @property
    def twisted(self) -> bool:
        return self.family in TWISTED

    def dd(self, i: int, j: int) -> int:
        return graph_distance(self.g0_adj, i, j)

    def check_node(self, i: int) -> None:
        if not 1 <= i <= len(self.i0):
            raise ValueError(f"node {i} outside I0 of {self.type}")

    def __str__(self) -> str:
        return format_type_string(self.type)


def _mq(k: int) -> SpectralScalar:
    return MINUS_Q ** k


def _untwisted_all_one(size: int) -> dict[int, int]:
    return {i: 1 for i in range(1, size + 1)}


def _build_m(family: Family, n: int, size: int) -> dict[int, int]:
    if family == Family.A2_ODD:
        return {i: (2 if i == n else 1) for i in range(1, size + 1)}
    if family == Family.D2:
        return {i: (1 if i == n else 2) for i in range(1, size + 1)}
    if family == Family.E6_2:
        return {1: 1, 2: 1, 3: 2, 4: 2}
    if family == Family.D4_3:
        return {1: 1, 2: 3}
    # all untwisted families; A_{2n}^{(2)} defaults to 1 as well
    return _untwisted_all_one(size)


def _build_pstar(family: Family, n: int) -> SpectralScalar:
    if family == Family.A1:
        return _mq(n + 1)
    if family == Family.B1:
        return scalar(0, 2 * n - 1)
    if family == Family.C1:
        return scalar(0, n + 1)
    if family == Family.D1:
        return scalar(0, 2 * n - 2)
    if family == Family.A2_EVEN:
        return scalar(12, 2 * n + 1)
    if family == Family.A2_ODD:
        return scalar(12, 2 * n)
    if family == Family.D2:
        return scalar(12 * (n + 1), 2 * n)
    return {
        Family.E6_1: scalar(0, 12),
        Family.E7_1: scalar(0, 18),
        Family.E8_1: scalar(0, 30),
        Family.F4_1: scalar(0, 9),
        Family.G2_1: scalar(0, 4),
        Family.E6_2: scalar(12, 12),
        Family.D4_3: scalar(0, 6),
    }[family]


def _build_istar(family: Family, n: int, size: int) -> dict[int, int]:
    ident = {i: i for i in range(1, size + 1)}
    if family == Family.A1:
        return {i: n + 1 - i for i in range(1, n + 1)}
    if family == Family.D1 and n % 2 == 1:
        ident[n - 1], ident[n] = n, n - 1
        return ident
    if family == Family.E6_1:
        ident.update({1: 6, 6: 1, 3: 5, 5: 3})
        return ident
    return ident


def _build_gfin(family: Family, n: int) -> FinRootSystem:
    if family == Family.A1:
        return root_system("A", n)
    if family == Family.B1:
        return root_system("A", 2 * n - 1)
    if family == Family.C1:
        return root_system("D", n + 1)
    if family == Family.D1:
        return root_system("D", n)
    if family == Family.A2_EVEN:
        return root_system("A", 2 * n)
    if family == Family.A2_ODD:
        return root_system("A", 2 * n - 1)
    if family == Family.D2:
        return root_system("D", n + 1)
    return {
        Family.E6_1: root_system("E", 6),
        Family.E7_1: root_system("E", 7),
        Family.E8_1: root_system("E", 8),
        Family.F4_1: root_system("E", 6),
        Family.G2_1: root_system("D", 4),
        Family.E6_2: root_system("E", 6),
        Family.D4_3: root_system("D", 4),
    }[family]


def _build_g0_adj(family: Family, n: int, size: int) -> tuple[tuple[int, ...], ...]:
    if family == Family.D1:
        return root_system("D", n).adj
    if family in (Family.E6_1, Family.E7_1, Family.E8_1):
        return root_system("E", size).adj
    return _chain_adj(size)


def _build_k0(family: Family) -> tuple[int, int, int]:
    """(e_step, phase_step, phase_mod) generating the stabilizer of sigma_Z."""
    if family in (Family.A1, Family.D1, Family.E6_1, Family.E7_1, Family.E8_1):
        return 12, 0, 0  # <q^2>
    if family in (Family.B1, Family.C1, Family.F4_1):
        return 6, 0, 0  # <q>
    if family == Family.G2_1:
        return 4, 0, 0  # <q_t^2>
    if family == Family.A2_EVEN:
        return 6, 12, 0  # <-q>
    if family == Family.D4_3:
        return 12, 0, 8  # <omega, q^2>
    return 12, 0, 12  # <-1, q^2> for A2_odd, D2, E6_2


def _build_sigma0_base(family: Family, n: int, size: int, dd) -> dict[int, SpectralScalar]:
    base: dict[int, SpectralScalar] = {}
    for i in range(1, size + 1):
        if family in (Family.A1, Family.D1, Family.E6_1, Family.E7_1, Family.E8_1):
            base[i] = _mq(dd(1, i))
        elif family == Family.B1:
            base[i] = ONE if i == n else (MINUS_ONE ** (n + i)) * QS
        elif family == Family.C1:
            base[i] = MINUS_QS ** (i - 1)
        elif family == Family.F4_1:
            base[i] = (MINUS_ONE ** i) * (QS ** (-1 if i == 3 else 0))
        elif family == Family.G2_1:
            base[i] = MINUS_QT ** dd(2, i)
        elif family == Family.A2_EVEN:
            base[i] = ONE
        elif family == Family.A2_ODD:
            base[i] = _mq(i + 1)
        elif family == Family.D2:
            base[i] = _mq(i + 1) if i == n else (I_UNIT ** (n + 1 - i)) * _mq(i + 1)
        elif family == Family.E6_2:
            base[i] = Q ** (i + 1) if i in (1, 2) else I_UNIT * _mq(i + 1)
        else:  # D4_3
            base[i] = ONE if i == 1 else MINUS_Q
    return base


_I0_SIZE = {
    Family.A1: lambda n: n,
    Family.B1: lambda n: n,
    Family.C1: lambda n: n,
    Family.D1: lambda n: n,
    Family.E6_1: lambda n: 6,
    Family.E7_1: lambda n: 7,
    Family.E8_1: lambda n: 8,
    Family.F4_1: lambda n: 4,
    Family.G2_1: lambda n: 2,
    Family.A2_EVEN: lambda n: n,
    Family.A2_ODD: lambda n: n,
    Family.D2: lambda n: n,
    Family.E6_2: lambda n: 4,
    Family.D4_3: lambda n: 2,
}


@lru_cache(maxsize=None)
def build(t: AffineType) -> AffineData:
    """Populate every static table for one affine family instance."""
    family, n = t.family, t.n
    size = _I0_SIZE[family](n)
    g0_adj = _build_g0_adj(family, n, size)

    def dd(i: int, j: int) -> int:
        return graph_distance(g0_adj, i, j)

    pstar = _build_pstar(family, n)
    assert pstar.den == 1
    return AffineData(
        type=t,
        i0=tuple(range(1, size + 1)),
        m=_build_m(family, n, size),
        pstar=pstar,
        ptilde=pstar * pstar,
        istar=_build_istar(family, n, size),
        gfin=_build_gfin(family, n),
        hvee=pstar.num,
        g0_adj=g0_adj,
        k0_e_step=_build_k0(family)[0],
        k0_phase_step=_build_k0(family)[1],
        k0_phase_mod=_build_k0(family)[2],
        sigma0_base=_build_sigma0_base(family, n, size, dd),
    )


def build_type(family: Family, n: int | None = None) -> AffineData:
    return build(affine_type(family, n))


def untwisted_partner(d: AffineData) -> AffineData:
    """The untwisted family whose Q-data drive the twisted sigma_Q."""
    f, n = d.family, d.n
    if f == Family.A2_EVEN:
        return build(AffineType(Family.A1, 2 * n))
    if f == Family.A2_ODD:
        return build(AffineType(Family.A1, 2 * n - 1))
    if f == Family.D2:
        return build(AffineType(Family.D1, n + 1))
    if f == Family.E6_2:
        return build(AffineType(Family.E6_1, 6))
    if f == Family.D4_3:
        return build(AffineType(Family.D1, 4))
    return d


def canonical_param(d: AffineData, i: int, x: SpectralScalar) -> SpectralScalar:
    """Reduce the phase modulo the sigma-equivalence at node i."""
    mod = 24 // d.m[i]
    return SpectralScalar(x.phase % mod, x.num, x.den)


def sigma_eq(d: AffineData, p1: tuple[int, SpectralScalar], p2: tuple[int, SpectralScalar]) -> bool:
    """(i,x) ~ (j,y) iff i = j and x^{m_i} = y^{m_i}."""
    (i, x), (j, y) = p1, p2
    d.check_node(i)
    d.check_node(j)
    if i != j or (x.num, x.den) != (y.num, y.den):
        return False
    return (d.m[i] * (x.phase - y.phase)) % 24 == 0


def _e6(x: SpectralScalar) -> int:
    return x.num * (6 // x.den)


def component_class(d: AffineData, i: int, x: SpectralScalar) -> SpectralScalar:
    """Canonical translation datum of the sigma_Z-translate containing (i, x).

    Two points lie in the same connected component of sigma(g) iff their
    classes coincide; the class of sigma_Z itself is the scalar 1.
    """
    d.check_node(i)
    c = x / d.sigma0_base[i]
    e = _e6(c)
    k, e_red = divmod(e, d.k0_e_step)
    phase = (c.phase - k * d.k0_phase_step) % 24
    if d.k0_phase_mod:
        phase %= d.k0_phase_mod
    return scalar(phase, Fraction(e_red, 6))


def in_sigma_z(d: AffineData, i: int, x: SpectralScalar) -> bool:
    """Membership of (i, x) in the reference component sigma_Z = sigma_0."""
    return component_class(d, i, x).is_one
