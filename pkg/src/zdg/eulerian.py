"""Euler circuits and trails on Gamma(Z_n).

Two verdict routes: :func:`euler_verdict_explicit` reads the materialised
graph, :func:`euler_verdict_fast` reads only divisor classes. Tours are
built by Hierholzer's algorithm on the explicit graph, always taking the
smallest unused neighbour, so output is reproducible.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from zdg import _kernels
from zdg.convention import Convention
from zdg.errors import NoCircuitError, NoTrailError, UnsupportedConventionError
from zdg.explicit import ExplicitGraph, components, degree_sequence
from zdg import quotient as qt


@dataclass(frozen=True)
class EulerVerdict:
    n: int
    convention: Convention
    vertex_count: int
    edge_count: int
    loop_count: int
    connected: bool
    odd_degree_vertex_count: int
    degenerate: bool
    circuit_exists: bool
    trail_exists: bool

    def to_dict(self) -> dict:
        out = asdict(self)
        out["convention"] = self.convention.value
        return out


def _require_parity_convention(convention: Convention) -> None:
    if convention is Convention.LOOP_COUNTS_1:
        raise UnsupportedConventionError(
            "loop1 gives loops odd weight, so degree parity no longer decides Euler tours"
        )


def _decide(
    n, convention, vertex_count, edge_count, loop_count, connected, active_connected, odd
) -> EulerVerdict:
    degenerate = edge_count + loop_count == 0
    ok = active_connected and not degenerate
    return EulerVerdict(
        n=n,
        convention=convention,
        vertex_count=vertex_count,
        edge_count=edge_count,
        loop_count=loop_count,
        connected=connected,
        odd_degree_vertex_count=odd,
        degenerate=degenerate,
        circuit_exists=ok and odd == 0,
        trail_exists=ok and odd in (0, 2),
    )


def euler_verdict_explicit(graph: ExplicitGraph) -> EulerVerdict:
    conv = graph.convention
    _require_parity_convention(conv)
    degrees = list(degree_sequence(graph).values())
    odd = sum(1 for d in degrees if d % 2)
    labels = components(graph).tolist()
    connected = len(set(labels)) <= 1
    active = {lab for lab, d in zip(labels, degrees) if d > 0}
    return _decide(
        graph.n,
        conv,
        graph.vertex_count,
        graph.edge_count,
        graph.loop_count if conv is Convention.LOOP_COUNTS_2 else 0,
        connected,
        len(active) <= 1,
        odd,
    )


def euler_verdict_fast(n: int, convention: Convention = Convention.NO_LOOPS) -> EulerVerdict:
    conv = Convention.parse(convention)
    _require_parity_convention(conv)
    q = qt.build_quotient(n)
    profile = qt.degree_profile(n, conv, q)
    connected = qt.quotient_connected(n, q)
    if all(e.degree > 0 for e in profile.entries):
        active = connected
    else:
        active = qt.active_connected(n, conv, q)
    return _decide(
        n,
        conv,
        q.vertex_count,
        qt.quotient_edge_count(n, q),
        qt.quotient_loop_count(n, q) if conv is Convention.LOOP_COUNTS_2 else 0,
        connected,
        active,
        profile.odd_vertex_count,
    )


# tours ------------------------------------------------------------------------


@dataclass(frozen=True)
class EulerTour:
    vertices: tuple[int, ...]
    closed: bool

    @property
    def length(self) -> int:
        """Number of edges traversed."""
        return max(len(self.vertices) - 1, 0)

    def to_list(self) -> list[int]:
        return list(self.vertices)

    def __str__(self):
        return " - ".join(map(str, self.vertices))


def _tour_arrays(graph: ExplicitGraph) -> tuple[np.ndarray, np.ndarray]:
    """CSR including loops (loop2 only), each loop in its sorted row position."""
    off, tgt = graph.offsets, graph.targets
    if graph.convention is not Convention.LOOP_COUNTS_2 or not graph.loops:
        return off, tgt
    loop_idx = np.asarray(sorted(graph.index_of(v) for v in graph.loops), dtype=np.int64)
    at = np.asarray(
        [off[i] + np.searchsorted(tgt[off[i] : off[i + 1]], i) for i in loop_idx], dtype=np.int64
    )
    new_tgt = np.insert(tgt, at, loop_idx)
    shift = np.zeros(len(off), dtype=np.int64)
    np.add.at(shift, loop_idx + 1, 1)
    return off + np.cumsum(shift), new_tgt


def _walk(graph: ExplicitGraph, start: int, closed: bool) -> EulerTour:
    off, tgt = _tour_arrays(graph)
    eids, count = _kernels.edge_ids(off, tgt)
    idx = _kernels.hierholzer(off, tgt, eids, count, graph.index_of(start))
    return EulerTour(tuple(graph.vertices[idx].tolist()), closed)


def find_euler_circuit(graph: ExplicitGraph) -> EulerTour:
    verdict = euler_verdict_explicit(graph)
    if not verdict.circuit_exists:
        raise NoCircuitError(f"Gamma(Z_{graph.n}) has no Euler circuit", verdict)
    degrees = degree_sequence(graph)
    start = min(v for v, d in degrees.items() if d > 0)
    return _walk(graph, start, closed=True)


def find_euler_trail(graph: ExplicitGraph) -> EulerTour:
    """Open trail between the two odd vertices, or a circuit when one exists."""
    verdict = euler_verdict_explicit(graph)
    if not verdict.trail_exists:
        raise NoTrailError(f"Gamma(Z_{graph.n}) has no Euler trail", verdict)
    if verdict.circuit_exists:
        return find_euler_circuit(graph)
    start = min(v for v, d in degree_sequence(graph).items() if d % 2)
    return _walk(graph, start, closed=False)


@dataclass(frozen=True)
class TourCheck:
    valid: bool
    diagnostic: str = ""

    def __bool__(self):
        return self.valid


def validate_tour(graph: ExplicitGraph, tour: EulerTour | list[int]) -> TourCheck:
    if isinstance(tour, EulerTour):
        seq, closed = list(tour.vertices), tour.closed
    else:
        seq = list(tour)
        closed = len(seq) > 1 and seq[0] == seq[-1]
    if len(seq) < 2:
        return TourCheck(False, "tour has no edges")
    loops = graph.loops if graph.convention is Convention.LOOP_COUNTS_2 else frozenset()
    used: set[tuple[int, int]] = set()
    for a, b in zip(seq, seq[1:]):
        if a == b:
            if a not in loops:
                return TourCheck(False, f"not an edge: ({a}, {b})")
        elif not graph.adjacent(a, b):
            return TourCheck(False, f"not an edge: ({a}, {b})")
        key = (a, b) if a <= b else (b, a)
        if key in used:
            return TourCheck(False, f"edge used twice: {key}")
        used.add(key)
    if len(used) < graph.edge_count + len(loops):
        missing = next(
            (e for e in graph.edges() if e not in used),
            next(((v, v) for v in sorted(loops) if (v, v) not in used), None),
        )
        return TourCheck(False, f"edge not covered: {missing}")
    if closed != (seq[0] == seq[-1]):
        return TourCheck(False, "closure flag inconsistent with endpoints")
    return TourCheck(True)
