"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --n 30030 --repeat 5

Each kernel runs on identical inputs under both backends; outputs are
checked for equality before timings are reported.
"""
from __future__ import annotations

import argparse
import random
import sys
import timeit
from dataclasses import dataclass
from typing import Callable

import numpy as np

from zdg import _pykernels
from zdg.explicit import zero_divisors


@dataclass
class Row:
    kernel: str
    python_s: float
    compiled_s: float

    @property
    def speedup(self) -> float:
        return self.python_s / self.compiled_s if self.compiled_s else float("inf")


def _best(fn: Callable[[], object], repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def _same(a, b) -> bool:
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def run(n: int, primes: int, repeat: int, seed: int) -> list[Row]:
    from zdg import _ckernels as ck

    rng = random.Random(seed)
    candidates = [rng.randrange(2**40, 2**63) | 1 for _ in range(primes)]
    semiprimes = [1_000_003 * 1_000_033, (2**31 - 1) * (2**31 + 11), 999_999_937 * 999_999_929]

    verts = np.asarray(zero_divisors(n), dtype=np.int64)
    off, tgt = _pykernels.build_csr(n, verts)
    eids, m = _pykernels.edge_ids(off, tgt)
    start = int(np.argmax(np.diff(off) > 0))

    cases: list[tuple[str, Callable[[object], object]]] = [
        ("is_prime", lambda k: [k.is_prime(c) for c in candidates]),
        ("pollard_brent", lambda k: [k.pollard_brent(s, 1) for s in semiprimes]),
        ("build_csr", lambda k: k.build_csr(n, verts)),
        ("component_labels", lambda k: k.component_labels(off, tgt)),
        ("edge_ids", lambda k: k.edge_ids(off, tgt)),
        ("hierholzer", lambda k: k.hierholzer(off, tgt, eids, m, start)),
    ]
    rows = []
    for name, call in cases:
        if not _same(call(_pykernels), call(ck)):
            raise SystemExit(f"backends disagree on {name}")
        rows.append(
            Row(name, _best(lambda: call(_pykernels), repeat), _best(lambda: call(ck), repeat))
        )
    return rows


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3 * 5 * 7 * 11 * 13 * 2, help="modulus for graph kernels")
    ap.add_argument("--primes", type=int, default=2000, help="random 63-bit primality inputs")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    try:
        rows = run(args.n, args.primes, args.repeat, args.seed)
    except ImportError:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    print(f"n = {args.n}, {len(zero_divisors(args.n))} vertices; best of {args.repeat}")
    print(f"{'kernel':<18}{'python (ms)':>14}{'compiled (ms)':>16}{'speedup':>10}")
    for r in rows:
        print(f"{r.kernel:<18}{r.python_s * 1e3:>14.2f}{r.compiled_s * 1e3:>16.2f}{r.speedup:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
