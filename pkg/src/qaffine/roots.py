"""Simply-laced finite root systems: reflections, words, folding automorphisms.

Roots are integer vectors in simple-root coordinates (index 0 unused so the
code matches the usual 1-based node labels).  Weights use the
fundamental-weight basis.  Inner products always go through the Cartan
matrix; there is no Euclidean embedding anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Vec = tuple[int, ...]
# a word entry is a node index, or a diagram automorphism given as an
# image tuple (perm[i] = image of node i, perm[0] unused)
WordEntry = Union[int, tuple[int, ...]]


def _chain_edges(rank: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, rank)]


def dynkin_edges(letter: str, rank: int) -> list[tuple[int, int]]:
    """Edges of the ADE diagram in Bourbaki labels (E: branch node 2 on 4)."""
    if letter == "A":
        return _chain_edges(rank)
    if letter == "D":
        if rank < 3:
            raise ValueError("D rank must be >= 3")
        return _chain_edges(rank - 1) + [(rank - 2, rank)]
    if letter == "E":
        if rank not in (6, 7, 8):
            raise ValueError("E rank must be 6, 7 or 8")
        chain = [(1, 3)] + [(i, i + 1) for i in range(3, rank)]
        return chain + [(2, 4)]
    raise ValueError(f"unknown simply-laced letter {letter!r}")


def graph_distance(adj: Sequence[Sequence[int]], i: int, j: int) -> int:
    """BFS distance between nodes of a Dynkin diagram."""
    if i == j:
        return 0
    seen = {i}
    frontier = [i]
    dist = 0
    while frontier:
        dist += 1
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v == j:
                    return dist
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    raise ValueError(f"nodes {i} and {j} are not connected")


@dataclass(frozen=True)
class FinWeight:
    """Integer vector in the fundamental-weight basis (1-based)."""

    coords: Vec

    def __add__(self, other: "FinWeight") -> "FinWeight":
        return FinWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "FinWeight") -> "FinWeight":
        return FinWeight(tuple(a - b for a, b in zip(self.coords, other.coords)))


class FinRootSystem:
    """An ADE root system of given rank, all data exact and immutable."""

    def __init__(self, letter: str, rank: int):
        self.letter = letter
        self.rank = rank
        self.edges = dynkin_edges(letter, rank)
        adj: list[list[int]] = [[] for _ in range(rank + 1)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        self.adj = tuple(tuple(x) for x in adj)
        cartan = [[0] * (rank + 1) for _ in range(rank + 1)]
        for i in range(1, rank + 1):
            cartan[i][i] = 2
        for a, b in self.edges:
            cartan[a][b] = cartan[b][a] = -1
        self.cartan = tuple(tuple(row[1:]) for row in cartan[1:])
        self.positive_roots = self._enumerate_positive_roots()
        self._positive_set = frozenset(self.positive_roots)

    def __repr__(self) -> str:
        return f"FinRootSystem({self.letter}{self.rank})"

    @property
    def type_name(self) -> str:
        return f"{self.letter}{self.rank}"

    def cartan_entry(self, i: int, j: int) -> int:
        return self.cartan[i - 1][j - 1]

    def simple_root(self, i: int) -> Vec:
        return tuple(1 if k == i else 0 for k in range(1, self.rank + 1))

    def _enumerate_positive_roots(self) -> tuple[Vec, ...]:
        simples = [self.simple_root(i) for i in range(1, self.rank + 1)]
        found = set(simples)
        frontier = list(simples)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(1, self.rank + 1):
                    w = self.reflect_root(i, v)
                    if all(c >= 0 for c in w) and w not in found:
                        found.add(w)
                        nxt.append(w)
            frontier = nxt
        rest = sorted(found - set(simples), key=lambda v: (sum(v), v))
        return tuple(simples + rest)

    def reflect_root(self, i: int, v: Vec) -> Vec:
        """Simple reflection s_i on simple-root coordinates."""
        pairing = sum(self.cartan[i - 1][j] * v[j] for j in range(self.rank))
        out = list(v)
        out[i - 1] -= pairing
        return tuple(out)

    def is_positive_root(self, v: Vec) -> bool:
        return v in self._positive_set

    def root_inner(self, v: Vec, w: Vec) -> int:
        """(v, w) for root-coordinate vectors, via the Cartan matrix."""
        n = self.rank
        return sum(v[i] * self.cartan[i][j] * w[j] for i in range(n) for j in range(n))

    def dd(self, i: int, j: int) -> int:
        return graph_distance(self.adj, i, j)

    def istar(self, i: int) -> int:
        """The involution alpha_{i*} = -w0(alpha_i)."""
        if self.letter == "A":
            return self.rank + 1 - i
        if self.letter == "D" and self.rank % 2 == 1 and i >= self.rank - 1:
            return 2 * self.rank - 1 - i
        if self.letter == "E" and self.rank == 6:
            return {1: 6, 6: 1, 3: 5, 5: 3}.get(i, i)
        return i

    # weight-basis helpers ------------------------------------------------

    def fundamental_weight(self, i: int) -> FinWeight:
        return FinWeight(tuple(1 if k == i else 0 for k in range(1, self.rank + 1)))

    def root_to_weight(self, v: Vec) -> FinWeight:
        n = self.rank
        return FinWeight(tuple(sum(self.cartan[j][i] * v[i] for i in range(n)) for j in range(n)))

    def weight_to_root(self, w: FinWeight) -> Vec:
        """Exact solve C x = w; raises if w is not in the root lattice."""
        n = self.rank
        aug = [[Fraction(self.cartan[r][c]) for c in range(n)] + [Fraction(w.coords[r])] for r in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            scale = aug[col][col]
            aug[col] = [x / scale for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        sol = [row[n] for row in aug]
        if any(x.denominator != 1 for x in sol):
            raise ValueError(f"{w} is not in the root lattice")
        return tuple(int(x) for x in sol)

    def reflect_weight(self, i: int, w: FinWeight) -> FinWeight:
        out = list(w.coords)
        c = w.coords[i - 1]
        for j in range(self.rank):
            out[j] -= c * self.cartan[j][i - 1]
        return FinWeight(tuple(out))


def identity_perm(rank: int) -> tuple[int, ...]:
    return tuple(range(rank + 1))


def perm_from_map(rank: int, mapping: dict[int, int]) -> tuple[int, ...]:
    return tuple(mapping.get(i, i) for i in range(rank + 1))


def perm_order(perm: tuple[int, ...]) -> int:
    order = 1
    cur = perm
    ident = identity_perm(len(perm) - 1)
    while cur != ident:
        cur = tuple(perm[c] for c in cur)
        order += 1
    return order


def perm_root(perm: tuple[int, ...], v: Vec) -> Vec:
    """Diagram automorphism on root coordinates: alpha_i -> alpha_{perm(i)}."""
    out = [0] * len(v)
    for i, c in enumerate(v, start=1):
        out[perm[i] - 1] = c
    return tuple(out)


def perm_weight(perm: tuple[int, ...], w: FinWeight) -> FinWeight:
    out = [0] * len(w.coords)
    for i, c in enumerate(w.coords, start=1):
        out[perm[i] - 1] = c
    return FinWeight(tuple(out))


def reflect(rs: FinRootSystem, i: int, w: FinWeight) -> FinWeight:
    return rs.reflect_weight(i, w)


def apply_word(rs: FinRootSystem, word: Iterable[WordEntry], w: FinWeight) -> FinWeight:
    """Apply a word in W_fin x Aut right-to-left (rightmost entry acts first)."""
    for entry in reversed(tuple(word)):
        if isinstance(entry, int):
            w = rs.reflect_weight(entry, w)
        else:
            w = perm_weight(entry, w)
    return w


def apply_word_root(rs: FinRootSystem, word: Iterable[WordEntry], v: Vec) -> Vec:
    for entry in reversed(tuple(word)):
        if isinstance(entry, int):
            v = rs.reflect_root(entry, v)
        else:
            v = perm_root(entry, v)
    return v


def word_matrix(rs: FinRootSystem, word: Iterable[WordEntry]) -> tuple[Vec, ...]:
    """The word's action on root coordinates as column-applied matrix rows.

    Row k of the result is the image of alpha_{k+1}; applying the matrix to
    a coordinate vector is a plain linear combination of the rows.
    """
    return tuple(apply_word_root(rs, word, rs.simple_root(i)) for i in range(1, rs.rank + 1))


def mat_apply(mat: tuple[Vec, ...], v: Vec) -> Vec:
    n = len(v)
    out = [0] * n
    for k in range(n):
        c = v[k]
        if c:
            row = mat[k]
            for j in range(n):
                out[j] += c * row[j]
    return tuple(out)


def mat_mul(a: tuple[Vec, ...], b: tuple[Vec, ...]) -> tuple[Vec, ...]:
    """Composition so that mat_apply(mat_mul(a, b), v) == mat_apply(b, mat_apply(a, v))."""
    return tuple(mat_apply(b, row) for row in a)


def enumerate_positive_roots(rs: FinRootSystem) -> tuple[Vec, ...]:
    return rs.positive_roots


@lru_cache(maxsize=None)
def root_system(letter: str, rank: int) -> FinRootSystem:
    return FinRootSystem(letter, rank)
