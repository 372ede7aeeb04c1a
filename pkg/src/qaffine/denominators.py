"""Denominator polynomials d_{i,j}(z) between fundamental representations.

A denominator is stored as the multiset of its roots inside the exact
scalar domain; z^2- and z^3-factors are expanded into linear roots at
construction time so zero-order queries are plain multiset lookups.
d_{j,i} is taken equal to d_{i,j} throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .affine import AffineData, Family
from .qcartan import ade_quiver, ctilde_formula
from .scalars import (
    MINUS_ONE,
    MINUS_Q,
    MINUS_QS,
    OMEGA,
    QS,
    QT,
    SpectralScalar,
    nth_roots,
    scalar,
)

# one factor (z^deg - value)^mult of a denominator polynomial
Factor = tuple[int, SpectralScalar, int]


@dataclass(frozen=True)
class RootMultiset:
    """Monic polynomial prod (z - r), as a finite multiset of roots."""

    mults: tuple[tuple[SpectralScalar, int], ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[SpectralScalar, int]]) -> "RootMultiset":
        acc: dict[SpectralScalar, int] = {}
        for r, m in pairs:
            acc[r] = acc.get(r, 0) + m
        return cls(tuple(sorted(acc.items())))

    def mult(self, x: SpectralScalar) -> int:
        return dict(self.mults).get(x, 0)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.mults)

    def __iter__(self) -> Iterator[tuple[SpectralScalar, int]]:
        return iter(self.mults)


def zero_order(p: RootMultiset, x: SpectralScalar) -> int:
    """Order of vanishing of the polynomial at z = x."""
    return p.mult(x)


def _mq(k: int) -> SpectralScalar:
    return MINUS_Q ** k


def _qs(k: int) -> SpectralScalar:
    return QS ** k


def _qt(k: int) -> SpectralScalar:
    return QT ** k


def _mq2(k: int) -> SpectralScalar:
    return scalar(12 * k, 2 * k)  # (-q^2)^k


def _neg(x: SpectralScalar) -> SpectralScalar:
    return MINUS_ONE * x


def _ade_factors(d: AffineData, i: int, j: int) -> list[Factor]:
    quiver = ade_quiver(d.gfin.letter, d.gfin.rank)
    out = []
    for k in range(1, quiver.h):
        m = ctilde_formula(quiver, i, j, k)
        if m:
            out.append((1, _mq(k + 1), m))
    return out


def _b1_factors(d: AffineData, k: int, l: int) -> list[Factor]:
    n = d.n
    if k == n and l == n:
        return [(1, _qs(4 * s - 2), 1) for s in range(1, n + 1)]
    if l == n or k == n:
        k = min(k, l)
        sign = MINUS_ONE ** (n + k)
        return [(1, sign * _qs(2 * n - 2 * k - 1 + 4 * s), 1) for s in range(1, k + 1)]
    out: list[Factor] = []
    for s in range(1, min(k, l) + 1):
        out.append((1, _mq(abs(k - l) + 2 * s), 1))
        out.append((1, _neg(_mq(2 * n - k - l - 1 + 2 * s)), 1))
    return out


def _c1_factors(d: AffineData, k: int, l: int) -> list[Factor]:
    n = d.n
    out: list[Factor] = []
    for s in range(1, min(k, l, n - k, n - l) + 1):
        out.append((1, MINUS_QS ** (abs(k - l) + 2 * s), 1))
    for s in range(1, min(k, l) + 1):
        out.append((1, MINUS_QS ** (2 * n + 2 - k - l + 2 * s), 1))
    return out


def _a2odd_factors(d: AffineData, k: int, l: int) -> list[Factor]:
    n = d.n
    out: list[Factor] = []
    for s in range(1, min(k, l) + 1):
        out.append((1, _mq(abs(k - l) + 2 * s), 1))
        out.append((1, _neg(_mq(2 * n - k - l + 2 * s)), 1))
    return out


def _a2even_factors(d: AffineData, k: int, l: int) -> list[Factor]:
    n = d.n
    out: list[Factor] = []
    for s in range(1, min(k, l) + 1):
        out.append((1, _mq(abs(k - l) + 2 * s), 1))
        out.append((1, _mq(2 * n + 1 - k - l + 2 * s), 1))
    return out


def _d2_factors(d: AffineData, k: int, l: int) -> list[Factor]:
    n = d.n
    if k == n and l == n:
        return [(1, _neg(_mq2(s)), 1) for s in range(1, n + 1)]
    if l == n or k == n:
        k = min(k, l)
        return [(2, _neg(_mq2(n - k + 2 * s)), 1) for s in range(1, k + 1)]
    out: list[Factor] = []
    for s in range(1, min(k, l) + 1):
        out.append((2, _mq2(abs(k - l) + 2 * s), 1))
        out.append((2, _mq2(2 * n - k - l + 2 * s), 1))
    return out


_G2_TABLE = {
    (1, 1): [(1, "-", [6, 8, 10, 12], [1, 1, 1, 1])],
    (1, 2): [(1, "+", [7, 11], [1, 1])],
    (2, 2): [(1, "-", [2, 8, 12], [1, 1, 1])],
}

_F4_TABLE = {
    (1, 1): [(1, "-", [4, 10, 12, 18], [1, 1, 1, 1])],
    (1, 2): [(1, "+", [6, 8, 10, 12, 14, 16], [1] * 6)],
    (1, 3): [(1, "-", [7, 9, 13, 15], [1] * 4)],
    (1, 4): [(1, "+", [8, 14], [1, 1])],
    (2, 2): [(1, "-", [4, 6, 8, 10, 12, 14, 16, 18], [1, 1, 2, 2, 2, 2, 1, 1])],
    (2, 3): [(1, "+", [5, 7, 9, 11, 13, 15, 17], [1, 1, 1, 2, 1, 1, 1])],
    (2, 4): [(1, "-", [6, 10, 12, 16], [1] * 4)],
    (3, 3): [(1, "-", [2, 6, 8, 10, 12, 16, 18], [1, 1, 1, 1, 2, 1, 1])],
    (3, 4): [(1, "+", [3, 7, 11, 13, 17], [1] * 5)],
    (4, 4): [(1, "-", [2, 8, 12, 18], [1] * 4)],
}

_D43_TABLE = {
    (1, 1): None,  # special-cased: mixed omega phases
    (1, 2): [(3, "+", [9, 15], [1, 1])],
    (2, 2): [(3, "-", [6, 12, 18], [1, 2, 1])],
}

_E62_TABLE = {
    (1, 1): [(1, "-", [2, 8], [1, 1]), (1, "+", [6, 12], [1, 1])],
    (1, 2): [(1, "+", [3, 7, 9], [1, 1, 1]), (1, "-", [5, 7, 11], [1, 1, 1])],
    (1, 3): [(2, "+", [8, 12, 16, 20], [1] * 4)],
    (1, 4): [(2, "+", [10, 18], [1, 1])],
    (2, 2): [
        (1, "-", [2, 4, 6, 8, 10], [1, 1, 1, 2, 1]),
        (1, "+", [4, 6, 8, 10, 12], [1, 2, 1, 1, 1]),
    ],
    (2, 3): [(2, "+", [6, 10, 14, 18, 22], [1, 2, 2, 2, 1])],
    (2, 4): [(2, "+", [8, 12, 16, 20], [1] * 4)],
    (3, 3): [(2, "-", [4, 8, 12, 16, 20, 24], [1, 2, 3, 3, 2, 1])],
    (3, 4): [(2, "-", [6, 10, 14, 18, 22], [1, 1, 2, 2, 1])],
    (4, 4): [(2, "-", [4, 12, 16, 24], [1] * 4)],
}


def _q_pow(k: int) -> SpectralScalar:
    return scalar(0, k)


def _table_factors(table_entry, base) -> list[Factor]:
    out: list[Factor] = []
    for deg, sign, exps, mults in table_entry:
        for e, m in zip(exps, mults):
            val = base(e)
            out.append((deg, val if sign == "-" else _neg(val), m))
    return out


def denominator_factors(d: AffineData, i: int, j: int) -> list[Factor]:
    """d_{i,j}(z) as a product of (z^deg - value)^mult factors."""
    d.check_node(i)
    d.check_node(j)
    i, j = min(i, j), max(i, j)
    fam = d.family
    if fam in (Family.A1, Family.D1, Family.E6_1, Family.E7_1, Family.E8_1):
        return _ade_factors(d, i, j)
    if fam == Family.B1:
        return _b1_factors(d, i, j)
    if fam == Family.C1:
        return _c1_factors(d, i, j)
    if fam == Family.A2_ODD:
        return _a2odd_factors(d, i, j)
    if fam == Family.A2_EVEN:
        return _a2even_factors(d, i, j)
    if fam == Family.D2:
        return _d2_factors(d, i, j)
    if fam == Family.G2_1:
        return _table_factors(_G2_TABLE[(i, j)], _qt)
    if fam == Family.F4_1:
        return _table_factors(_F4_TABLE[(i, j)], _qs)
    if fam == Family.E6_2:
        return _table_factors(_E62_TABLE[(i, j)], _q_pow)
    # D_4^{(3)}
    if (i, j) == (1, 1):
        return [
            (1, _q_pow(2), 1),
            (1, _q_pow(6), 1),
            (1, OMEGA * _q_pow(4), 1),
            (1, OMEGA * OMEGA * _q_pow(4), 1),
        ]
    return _table_factors(_D43_TABLE[(i, j)], _q_pow)


def expand_factors(factors: Iterable[Factor]) -> RootMultiset:
    pairs: list[tuple[SpectralScalar, int]] = []
    for deg, value, mult in factors:
        if deg == 1:
            pairs.append((value, mult))
        else:
            for r in nth_roots(value, deg):
                pairs.append((r, mult))
    return RootMultiset.from_pairs(pairs)


def denominator(d: AffineData, i: int, j: int) -> RootMultiset:
    """The full root multiset of d_{i,j}(z) (symmetric in i and j, cached)."""
    d.check_node(i)
    d.check_node(j)
    key = (min(i, j), max(i, j))
    cached = d._denom_cache.get(key)
    if cached is None:
        cached = expand_factors(denominator_factors(d, *key))
        d._denom_cache[key] = cached
    return cached
