"""Explicit zero-divisor graph of Z_n, built vertex by vertex.

This is the brute-force oracle. It deliberately shares nothing with the
divisor-class model in :mod:`zdg.quotient` beyond elementary arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterator

import numpy as np

from zdg import _kernels
from zdg.convention import Convention
from zdg.errors import DomainError, EmptyGraphError, TooLargeError
from zdg.numtheory import euler_phi

MAX_VERTICES = 200_000
MAX_EDGES = 5_000_000


def zero_divisors(n: int) -> list[int]:
    """Nonzero zero divisors of Z_n, ascending."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    return [x for x in range(1, n) if gcd(n, x) > 1]


@dataclass(frozen=True, eq=False)
class ExplicitGraph:
    n: int
    vertices: np.ndarray
    offsets: np.ndarray
    targets: np.ndarray
    loops: frozenset[int]
    convention: Convention
    _index: dict[int, int] = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        """Non-loop edges."""
        return len(self.targets) // 2

    @property
    def loop_count(self) -> int:
        return len(self.loops)

    def index_of(self, v: int) -> int:
        return self._index[v]

    def __contains__(self, v: int) -> bool:
        return v in self._index

    def neighbors(self, v: int) -> list[int]:
        """Non-loop neighbours of ``v``, ascending."""
        i = self._index[v]
        idx = self.targets[self.offsets[i] : self.offsets[i + 1]]
        return self.vertices[idx].tolist()

    def adjacent(self, u: int, v: int) -> bool:
        if u not in self._index or v not in self._index:
            return False
        if u == v:
            return u in self.loops
        return (u * v) % self.n == 0

    def degree(self, v: int) -> int:
        i = self._index[v]
        base = int(self.offsets[i + 1] - self.offsets[i])
        return base + (self.convention.loop_weight if v in self.loops else 0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Non-loop edges as ``(u, v)`` with u < v, in lexicographic order."""
        verts = self.vertices.tolist()
        off = self.offsets.tolist()
        tgt = self.targets.tolist()
        for i, u in enumerate(verts):
            for k in range(off[i], off[i + 1]):
                j = tgt[k]
                if j > i:
                    yield u, verts[j]


def build_graph(n: int, convention: Convention = Convention.NO_LOOPS) -> ExplicitGraph:
    convention = Convention.parse(convention)
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    # size guard before scanning (0, n)
    count = n - 1 - euler_phi(n)
    if count == 0:
        raise EmptyGraphError(f"Z_{n} has no zero divisors (n is prime)")
    if count > MAX_VERTICES:
        raise TooLargeError(
            f"Gamma(Z_{n}) has {count} vertices (limit {MAX_VERTICES}); use the divisor-class path"
        )
    verts = zero_divisors(n)
    degree_sum = 0
    for x in verts:
        step = n // gcd(n, x)
        degree_sum += (n - 1) // step - (x % step == 0)
    if degree_sum // 2 > MAX_EDGES:
        raise TooLargeError(
            f"Gamma(Z_{n}) has {degree_sum // 2} edges (limit {MAX_EDGES}); use the divisor-class path"
        )
    vertices = np.asarray(verts, dtype=np.int64)
    offsets, targets = _kernels.build_csr(n, vertices)
    loops = frozenset(x for x in verts if (x * x) % n == 0) if convention.has_loops else frozenset()
    return ExplicitGraph(
        n=n,
        vertices=vertices,
        offsets=offsets,
        targets=targets,
        loops=loops,
        convention=convention,
        _index={v: i for i, v in enumerate(verts)},
    )


def degree_sequence(graph: ExplicitGraph) -> dict[int, int]:
    counts = np.diff(graph.offsets).tolist()
    w = graph.convention.loop_weight
    return {
        v: c + (w if v in graph.loops else 0)
        for v, c in zip(graph.vertices.tolist(), counts)
    }


def edge_count(graph: ExplicitGraph) -> int:
    return graph.edge_count


def components(graph: ExplicitGraph) -> np.ndarray:
    """Component label per vertex index."""
    return _kernels.component_labels(graph.offsets, graph.targets)


def is_connected(graph: ExplicitGraph) -> bool:
    labels = components(graph)
    return len(labels) <= 1 or int(labels.max()) == 0


# structure recognition -------------------------------------------------------


@dataclass(frozen=True)
class Complete:
    k: int

    def __str__(self):
        return f"Complete({self.k})"


@dataclass(frozen=True)
class CompleteBipartite:
    """Part sizes are stored ascending so equal graphs compare equal."""

    a: int
    b: int

    def __post_init__(self):
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    def __str__(self):
        return f"CompleteBipartite({self.a},{self.b})"


@dataclass(frozen=True)
class Other:
    def __str__(self):
        return "Other"


Structure = Complete | CompleteBipartite | Other


def recognize_structure(graph: ExplicitGraph) -> Structure:
    """Complete first, then complete bipartite via 2-colouring; loops ignored."""
    nv = graph.vertex_count
    m = graph.edge_count
    if nv == 0:
        raise EmptyGraphError("empty graph")
    if m == nv * (nv - 1) // 2:
        return Complete(nv)
    off = graph.offsets.tolist()
    tgt = graph.targets.tolist()
    colour = [-1] * nv
    colour[0] = 0
    stack = [0]
    seen = 1
    while stack:
        u = stack.pop()
        for k in range(off[u], off[u + 1]):
            w = tgt[k]
            if colour[w] < 0:
                colour[w] = 1 - colour[u]
                seen += 1
                stack.append(w)
            elif colour[w] == colour[u]:
                return Other()
    if seen < nv:
        return Other()
    a = colour.count(0)
    b = nv - a
    # a proper 2-colouring is complete bipartite iff every cross pair is an edge
    if m == a * b:
        return CompleteBipartite(a, b)
    return Other()


# output helpers -----------------------------------------------------------------


def to_dot(graph: ExplicitGraph) -> str:
    lines = [f"graph Z{graph.n} {{"]
    for v in graph.vertices.tolist():
        lines.append(f"  {v};")
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    for v in sorted(graph.loops):
        lines.append(f"  {v} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(graph: ExplicitGraph) -> dict:
    return {
        "n": graph.n,
        "convention": graph.convention.value,
        "vertices": graph.vertices.tolist(),
        "edges": [list(e) for e in graph.edges()],
        "loops": sorted(graph.loops),
    }
