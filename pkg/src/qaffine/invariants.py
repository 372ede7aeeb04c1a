"""The combinatorial R-matrix invariants between fundamental representations.

Everything reduces to zero orders of denominator polynomials: de counts
collisions between two (parameter-shifted) fundamental modules, and the
alternating sums of de over the dual orbit give the block invariants.  The
functions produced by `s_func` are the roots of the hidden simply-laced
root system.

A subtle point governs the whole module: applying the duality identity
s_{i,a} = -s_{i*, a p*} twice shows s_{i, a ptilde} = s_{i,a}, so these
functions are periodic along each component with period ptilde = (p*)^2
and are NOT finitely supported.  They are stored exactly by their values
on representatives modulo the ptilde-shift, which is a faithful finite
encoding for every Z-combination of s-generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Union

from .affine import AffineData, canonical_param
from .denominators import denominator
from .scalars import ParseError, SpectralScalar, parse_scalar, print_scalar

# the dual-orbit sum is evaluated on a window of half-width SUM_WINDOW
# centered on the only region that can carry nonzero terms; nonzero de in
# the outer guard ring means the window arithmetic broke and is an error
SUM_WINDOW = 6
GUARD_LOW = 5
GUARD_HIGH = 8


class SumNotStabilized(RuntimeError):
    """A dual-orbit sum had support outside its stabilization window."""


class DecompositionUnavailable(ValueError):
    """Pairing needs functions that carry their s-generator decomposition."""


class SigmaPoint(NamedTuple):
    """An equivalence class (i, a) in sigma(g), stored by canonical representative."""

    node: int
    param: SpectralScalar

    def __str__(self) -> str:
        return f"{self.node}@{print_scalar(self.param)}"


def sigma_point(d: AffineData, node: int, param: SpectralScalar) -> SigmaPoint:
    d.check_node(node)
    return SigmaPoint(node, canonical_param(d, node, param))


def parse_sigma_point(d: AffineData, text: str) -> SigmaPoint:
    """Parse `i@<scalar>` (e.g. `3@(-q)^5`)."""
    head, sep, tail = text.partition("@")
    if not sep or not head.strip().isdigit():
        raise ParseError("expected point of the form i@<scalar>", 0)
    return sigma_point(d, int(head), parse_scalar(tail.strip()))


def dual_shift(d: AffineData, p: SigmaPoint, k: int = 1) -> SigmaPoint:
    """The k-fold dual: (i, a) -> (i^{*k}, a * (p*)^k)."""
    node = p.node if k % 2 == 0 else d.istar[p.node]
    return sigma_point(d, node, p.param * d.pstar ** k)


def de(d: AffineData, p1: SigmaPoint, p2: SigmaPoint) -> int:
    """Total zero order at z = 1 of d_{M,N}(z) d_{N,M}(1/z)."""
    ratio = p2.param / p1.param
    dmn = denominator(d, p1.node, p2.node)
    return dmn.mult(ratio) + dmn.mult(ratio.inv())


def _e6(x: SpectralScalar) -> int:
    return x.num * (6 // x.den)


def _orbit_values(d: AffineData, p1: SigmaPoint, p2: SigmaPoint) -> dict[int, int]:
    """All nonzero de(p1, D^k p2), keyed by k.

    Nonzero terms force |qexp(ratio) + k hvee| <= 2 hvee, so the window is
    centered there; anything in the guard ring would mean that bound (and
    hence the sum) is wrong, so it raises instead of truncating silently.
    """
    center = round(-_e6(p2.param / p1.param) / (6 * d.hvee))
    values: dict[int, int] = {}
    for off in range(-GUARD_HIGH, GUARD_HIGH + 1):
        k = center + off
        v = de(d, p1, dual_shift(d, p2, k))
        if v:
            if abs(off) >= GUARD_LOW:
                raise SumNotStabilized(
                    f"de({p1}, D^{k} {p2}) = {v} at the window boundary for {d}"
                )
            values[k] = v
    return values


def lambda_inf(d: AffineData, p1: SigmaPoint, p2: SigmaPoint) -> int:
    """Alternating dual-orbit sum sum_k (-1)^k de(M, D^k N)."""
    return sum((v if k % 2 == 0 else -v) for k, v in _orbit_values(d, p1, p2).items())


def lambda_(d: AffineData, p1: SigmaPoint, p2: SigmaPoint) -> int:
    """The invariant sum_k (-1)^{k + delta(k<0)} de(M, D^k N)."""
    total = 0
    for k, v in _orbit_values(d, p1, p2).items():
        total += (-1) ** (k + (1 if k < 0 else 0)) * v
    return total


def reduce_mod_ptilde(d: AffineData, p: SigmaPoint) -> SigmaPoint:
    """Representative of the ptilde-orbit of p, used as a function key."""
    e = _e6(p.param) % (12 * d.hvee)
    g = gcd(e, 6) if e else 6
    return sigma_point(d, p.node, SpectralScalar(p.param.phase, e // g, 6 // g))


@dataclass(frozen=True)
class SigmaFunction:
    """A Z-valued function on sigma(g), periodic under the ptilde-shift.

    `values` holds the nonzero values on ptilde-orbit representatives (the
    function takes the same value on the whole orbit).  `gens` records how
    the function was assembled from s-generators; it is required by the
    bilinear pairing and is None for raw functions.
    """

    values: tuple[tuple[SigmaPoint, int], ...]
    gens: tuple[tuple[SigmaPoint, int], ...] | None = None

    @property
    def support(self) -> tuple[SigmaPoint, ...]:
        return tuple(p for p, _ in self.values)

    @property
    def is_zero(self) -> bool:
        return not self.values

    def value_at(self, d: AffineData, node: int, param: SpectralScalar) -> int:
        key = reduce_mod_ptilde(d, sigma_point(d, node, param))
        return dict(self.values).get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SigmaFunction):
            return NotImplemented
        return frozenset(self.values) == frozenset(other.values)

    def __hash__(self) -> int:
        return hash(frozenset(self.values))

    def __neg__(self) -> "SigmaFunction":
        return SigmaFunction(
            tuple((p, -v) for p, v in self.values),
            None if self.gens is None else tuple((p, -c) for p, c in self.gens),
        )


def _support_candidates(d: AffineData, p: SigmaPoint) -> set[SigmaPoint]:
    """ptilde-orbit representatives of every (j, b) that can pair nonzero with p.

    A nonzero dual-orbit term needs b (p*)^k / a to be a denominator root
    for some k; modulo ptilde only the parity of k matters, which leaves
    the roots of d_{i,j} and of d_{i,j*} shifted by (p*)^{-1}.
    """
    i, a = p
    cands: set[SigmaPoint] = set()
    pinv = d.pstar.inv()
    for j in d.i0:
        for jj, shift in ((j, None), (d.istar[j], pinv)):
            for r, _ in denominator(d, i, jj):
                for val in (a * r, a * r.inv()):
                    if shift is not None:
                        val = val * shift
                    cands.add(reduce_mod_ptilde(d, SigmaPoint(j, val)))
    return cands


def s_func(d: AffineData, p: SigmaPoint) -> SigmaFunction:
    """E(V(varpi_i)_a): the function (j, b) -> lambda_inf((i,a), (j,b))."""
    cached = d._sfunc_cache.get(p)
    if cached is not None:
        return cached
    values = []
    for c in sorted(_support_candidates(d, p)):
        v = lambda_inf(d, p, c)
        if v:
            values.append((c, v))
    out = SigmaFunction(values=tuple(values), gens=((p, 1),))
    d._sfunc_cache[p] = out
    return out


AffineWeightList = Iterable[SigmaPoint]


def e_of(d: AffineData, weights: AffineWeightList) -> SigmaFunction:
    """E of a module with the given affine weight: the sum of its s-functions."""
    total: dict[SigmaPoint, int] = {}
    gens: dict[SigmaPoint, int] = {}
    for p in weights:
        gens[p] = gens.get(p, 0) + 1
        for q, v in s_func(d, p).values:
            total[q] = total.get(q, 0) + v
    values = tuple(sorted((q, v) for q, v in total.items() if v))
    return SigmaFunction(values=values, gens=tuple(sorted(gens.items())))


PairingArg = Union[SigmaPoint, SigmaFunction]


def _as_gens(x: PairingArg) -> tuple[tuple[SigmaPoint, int], ...]:
    if isinstance(x, SigmaPoint):
        return ((x, 1),)
    if x.gens is None:
        raise DecompositionUnavailable(
            "function has no s-generator decomposition; build it via s_func/e_of"
        )
    return x.gens


def pairing(d: AffineData, f: PairingArg, g: PairingArg) -> int:
    """The symmetric bilinear form with (s_{i,a}, s_{j,b}) = -lambda_inf."""
    total = 0
    for p, cp in _as_gens(f):
        for q, cq in _as_gens(g):
            total -= cp * cq * lambda_inf(d, p, q)
    return total
