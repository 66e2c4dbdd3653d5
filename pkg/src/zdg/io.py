"""File formats: JSON documents, RFC 4180 CSV, undirected DOT."""
from __future__ import annotations

import csv
import io
import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from pathlib import Path

from zdg import quotient as qt
from zdg.convention import Convention
from zdg.errors import InconsistencyError
from zdg.eulerian import euler_verdict_explicit, euler_verdict_fast
from zdg.explicit import build_graph, recognize_structure
from zdg.numtheory import is_prime


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def emit(text: str, path: "str | Path | None", stdout) -> None:
    """Write to ``path`` (UTF-8) or, when it is None or '-', to ``stdout``."""
    if path is None or str(path) == "-":
        stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="")


def to_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return "" if v is None else v


# sweep ------------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    n: int
    vertex_count: int
    edge_count: int
    odd_degree_vertex_count: int
    connected: bool
    degenerate: bool
    circuit_exists: bool
    trail_exists: bool
    structure: str


SWEEP_HEADER = [f.name for f in fields(SweepRow)]


def sweep_row(n: int, convention: Convention = Convention.NO_LOOPS, mode: str = "fast") -> SweepRow:
    if mode == "oracle":
        g = build_graph(n, convention)
        v = euler_verdict_explicit(g)
        structure = recognize_structure(g)
    else:
        v = euler_verdict_fast(n, convention)
        structure = qt.recognize_structure_fast(n)
        if mode == "both":
            g = build_graph(n, convention)
            slow, slow_structure = euler_verdict_explicit(g), recognize_structure(g)
            if slow != v or slow_structure != structure:
                raise InconsistencyError(f"fast and oracle paths disagree at n={n}")
    return SweepRow(
        n,
        v.vertex_count,
        v.edge_count,
        v.odd_degree_vertex_count,
        v.connected,
        v.degenerate,
        v.circuit_exists,
        v.trail_exists,
        str(structure),
    )


def _row_task(args):
    return sweep_row(*args)


def sweep(
    n_min: int,
    n_max: int,
    convention: Convention = Convention.NO_LOOPS,
    mode: str = "fast",
    jobs: int = 1,
) -> list[SweepRow]:
    """One row per composite n in [n_min, n_max], ascending."""
    ns = [n for n in range(max(n_min, 4), n_max + 1) if not is_prime(n)]
    tasks = [(n, convention, mode) for n in ns]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_row_task, tasks, chunksize=16))
    return [_row_task(t) for t in tasks]


def sweep_csv(rows: list[SweepRow]) -> str:
    return to_csv(SWEEP_HEADER, ([_cell(v) for v in astuple(r)] for r in rows))


# audit ------------------------------------------------------------------------------

AUDIT_HEADER = [
    "claim", "assertion", "instance", "convention", "reading",
    "expected", "computed", "agrees", "witness", "error",
]


def audit_csv(records) -> str:
    return to_csv(
        AUDIT_HEADER,
        ([_cell(r.to_dict()[k]) for k in AUDIT_HEADER] for r in records),
    )


# DOT ------------------------------------------------------------------------------

_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$")


def parse_dot_edges(text: str) -> list[tuple[int, int]]:
    """Edge list of an undirected DOT document as written by :func:`zdg.explicit.to_dot`."""
    return [
        (int(m.group(1)), int(m.group(2)))
        for m in map(_DOT_EDGE.match, text.splitlines())
        if m
    ]
