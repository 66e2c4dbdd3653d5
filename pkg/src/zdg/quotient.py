"""Divisor-class model of Gamma(Z_n).

Class d (a divisor with 1 < d < n) holds every x with gcd(n, x) = d; it has
phi(n/d) members. Write x = d*k with gcd(k, n/d) = 1. Then n | x*y iff
(n/d) | y, so every member of class d sees exactly the d - 1 nonzero
multiples of n/d, itself included iff (n/d) | d. Degrees, parities, edge
counts and connectivity therefore only need the tau(n) classes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import NamedTuple

from zdg.convention import Convention
from zdg.errors import DomainError, EmptyGraphError, InconsistencyError
from zdg.explicit import Complete, CompleteBipartite, Other, Structure
from zdg.numtheory import Factorization, divisor_table, factorize


class ClassNode(NamedTuple):
    d: int
    size: int
    self_square: bool


@dataclass(frozen=True)
class DivisorClassGraph:
    n: int
    factorization: Factorization
    classes: tuple[ClassNode, ...]
    # smallest prime factor of each class representative, parallel to classes
    spf: tuple[int, ...]

    def __len__(self):
        return len(self.classes)

    @cached_property
    def index(self) -> dict[int, int]:
        return {c.d: i for i, c in enumerate(self.classes)}

    def adjacent(self, i: int, j: int) -> bool:
        """Class adjacency (i == j allowed: the class is self-adjacent)."""
        return (self.classes[i].d * self.classes[j].d) % self.n == 0

    def neighbors(self, i: int) -> list[int]:
        """Indices of classes adjacent to class i, i itself included if self-square."""
        step = self.n // self.classes[i].d
        return [j for j, c in enumerate(self.classes) if c.d % step == 0]

    def class_adjacency(self) -> list[tuple[int, int]]:
        """All adjacent index pairs (i <= j). Quadratic in tau(n)."""
        return [(i, j) for i in range(len(self)) for j in self.neighbors(i) if j >= i]

    @property
    def vertex_count(self) -> int:
        return sum(c.size for c in self.classes)

    def to_dict(self, include_adjacency: bool | None = None) -> dict:
        if include_adjacency is None:
            include_adjacency = len(self) <= 2048
        out = {
            "n": self.n,
            "factorization": [list(f) for f in self.factorization.factors],
            "classes": [
                {"d": c.d, "size": c.size, "self_square": c.self_square} for c in self.classes
            ],
        }
        out["class_adjacency"] = (
            [list(p) for p in self.class_adjacency()] if include_adjacency else None
        )
        return out


def build_quotient(n: int) -> DivisorClassGraph:
    fac = factorize(n)
    if len(fac) == 1 and fac.exponents[0] == 1:
        raise EmptyGraphError(f"Z_{n} has no zero divisors (n is prime)")
    rows = divisor_table(n)[1:-1]
    classes = tuple(ClassNode(d, size, d % (n // d) == 0) for d, size, _ in rows)
    return DivisorClassGraph(n, fac, classes, tuple(s for _, _, s in rows))


def _check_proper(n: int, d: int) -> None:
    if not (1 < d < n) or n % d:
        raise DomainError(f"{d} is not a proper divisor of {n}")


def _degree(n: int, d: int, self_square: bool, convention: Convention) -> int:
    if convention is Convention.NO_LOOPS:
        return d - 1 - self_square
    if convention is Convention.LOOP_COUNTS_2:
        return d - 1 + self_square
    return d - 1


def class_degree(n: int, d: int, convention: Convention = Convention.NO_LOOPS) -> int:
    """Degree shared by every x with gcd(n, x) = d."""
    _check_proper(n, d)
    return _degree(n, d, d % (n // d) == 0, Convention.parse(convention))


class DegreeEntry(NamedTuple):
    d: int
    size: int
    degree: int

    @property
    def parity(self) -> str:
        return "odd" if self.degree % 2 else "even"


@dataclass(frozen=True)
class DegreeProfile:
    n: int
    convention: Convention
    entries: tuple[DegreeEntry, ...]

    @property
    def all_even(self) -> bool:
        return self.odd_class_count == 0

    @property
    def odd_class_count(self) -> int:
        return sum(1 for e in self.entries if e.degree % 2)

    @property
    def odd_vertex_count(self) -> int:
        return sum(e.size for e in self.entries if e.degree % 2)

    def odd_classes(self) -> list[DegreeEntry]:
        return [e for e in self.entries if e.degree % 2]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "convention": self.convention.value,
            "entries": [
                {"d": e.d, "size": e.size, "degree": e.degree, "parity": e.parity}
                for e in self.entries
            ],
            "all_even": self.all_even,
            "odd_class_count": self.odd_class_count,
        }


def degree_profile(
    n: int, convention: Convention = Convention.NO_LOOPS, quotient: DivisorClassGraph | None = None
) -> DegreeProfile:
    convention = Convention.parse(convention)
    q = quotient or build_quotient(n)
    entries = tuple(
        DegreeEntry(c.d, c.size, _degree(n, c.d, c.self_square, convention)) for c in q.classes
    )
    return DegreeProfile(n, convention, entries)


def quotient_edge_count(n: int, quotient: DivisorClassGraph | None = None) -> int:
    """Number of non-loop edges of Gamma(Z_n)."""
    q = quotient or build_quotient(n)
    twice = sum(c.size * (c.d - 1 - c.self_square) for c in q.classes)
    if twice % 2:
        raise InconsistencyError(f"degree sum {twice} of Gamma(Z_{n}) is odd")
    return twice // 2


def quotient_loop_count(n: int, quotient: DivisorClassGraph | None = None) -> int:
    """Number of x with x*x = 0, i.e. loops under the loop conventions."""
    q = quotient or build_quotient(n)
    return sum(c.size for c in q.classes if c.self_square)


# connectivity -------------------------------------------------------------------


class _DSU:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _classes_connected(q: DivisorClassGraph, active: list[int]) -> bool:
    """Are the members of the ``active`` classes one connected component?

    Two adjacent classes are completely joined, so with >= 2 classes the
    members are connected iff the classes are, using inter-class edges only.
    A lone class is connected iff it has one member or is self-square.
    """
    if not active:
        return True
    if len(active) == 1:
        c = q.classes[active[0]]
        return c.size == 1 or c.self_square
    n = q.n
    pos = {i: k for k, i in enumerate(active)}
    dsu = _DSU(len(active))
    # Cheap certificate: class d meets the hub class n/p for p = spf(d), and
    # distinct hubs meet each other. Every union below is a verified edge.
    hubs: list[int] = []
    for i in active:
        p = q.spf[i]
        h = q.index.get(n // p)
        if h is not None and h != i and h in pos and q.adjacent(i, h):
            dsu.union(pos[i], pos[h])
        if h is not None and h in pos and h not in hubs:
            hubs.append(h)
    for a in range(len(hubs)):
        for b in range(a + 1, len(hubs)):
            if q.adjacent(hubs[a], hubs[b]):
                dsu.union(pos[hubs[a]], pos[hubs[b]])
    root = dsu.find(0)
    if all(dsu.find(k) == root for k in range(1, len(active))):
        return True
    # Certificate incomplete: fall back to every inter-class edge.
    for a in range(len(active)):
        for b in range(a + 1, len(active)):
            if q.adjacent(active[a], active[b]):
                dsu.union(a, b)
    root = dsu.find(0)
    return all(dsu.find(k) == root for k in range(1, len(active)))


def quotient_connected(n: int, quotient: DivisorClassGraph | None = None) -> bool:
    q = quotient or build_quotient(n)
    return _classes_connected(q, list(range(len(q))))


def active_connected(
    n: int, convention: Convention = Convention.NO_LOOPS, quotient: DivisorClassGraph | None = None
) -> bool:
    """Connectivity of the subgraph spanned by positive-degree vertices."""
    q = quotient or build_quotient(n)
    convention = Convention.parse(convention)
    active = [
        i for i, c in enumerate(q.classes) if _degree(n, c.d, c.self_square, convention) > 0
    ]
    if len(active) == len(q):
        return quotient_connected(n, q)
    return _classes_connected(q, active)


def expand_class(n: int, d: int, limit: int | None = None) -> list[int]:
    """First ``limit`` members of class d, ascending (all of them if ``limit`` is None)."""
    _check_proper(n, d)
    cof = n // d
    out = []
    for k in range(1, cof):
        if limit is not None and len(out) >= limit:
            break
        if gcd(k, cof) == 1:
            out.append(d * k)
    return out


def recognize_structure_fast(n: int, quotient: DivisorClassGraph | None = None) -> Structure:
    """Structure of Gamma(Z_n) decided on classes; loops ignored.

    Quadratic in tau(n) in the worst case.
    """
    q = quotient or build_quotient(n)
    k = len(q)
    cls = q.classes
    total = q.vertex_count
    if all(
        (c.size == 1 or c.self_square) and all(q.adjacent(i, j) for j in range(i + 1, k))
        for i, c in enumerate(cls)
    ):
        return Complete(total)
    # a bipartite part is independent, so a self-square class must be a singleton
    if any(c.self_square and c.size > 1 for c in cls):
        return Other()
    colour = [-1] * k
    colour[0] = 0
    stack = [0]
    while stack:
        i = stack.pop()
        for j in q.neighbors(i):
            if j == i:
                continue
            if colour[j] < 0:
                colour[j] = 1 - colour[i]
                stack.append(j)
            elif colour[j] == colour[i]:
                return Other()
    if -1 in colour:
        return Other()
    for i in range(k):
        for j in range(i + 1, k):
            if (colour[i] != colour[j]) != q.adjacent(i, j):
                return Other()
    a = sum(c.size for c, col in zip(cls, colour) if col == 0)
    return CompleteBipartite(a, total - a)

