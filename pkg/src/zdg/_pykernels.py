"""Pure-Python hot kernels.

Same signatures as the compiled ``_ckernels`` module. Graph arrays are CSR
(``offsets``, ``targets``) with targets holding vertex *indices*, each row
sorted ascending.
"""
from __future__ import annotations

from math import gcd

import numpy as np

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pollard_brent(n: int, seed: int = 1) -> int:
    """Return a nontrivial factor of the odd composite ``n`` (Brent's variant)."""
    if n % 2 == 0:
        return 2
    c = seed
    while True:
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def build_csr(n: int, vertices: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Adjacency of the zero-divisor graph on ``vertices`` (no loops).

    u*v = 0 mod n  iff  (n / gcd(n, u)) | v, so the neighbours of u are the
    multiples of that step, all of which are zero divisors themselves.
    """
    verts = vertices.tolist()
    index = {v: i for i, v in enumerate(verts)}
    offsets = [0]
    targets: list[int] = []
    for u in verts:
        step = n // gcd(n, u)
        targets.extend(index[v] for v in range(step, n, step) if v != u)
        offsets.append(len(targets))
    return np.asarray(offsets, dtype=np.int64), np.asarray(targets, dtype=np.int64)


def component_labels(offsets: np.ndarray, targets: np.ndarray) -> np.ndarray:
    off = offsets.tolist()
    tgt = targets.tolist()
    nv = len(off) - 1
    label = [-1] * nv
    comp = 0
    for s in range(nv):
        if label[s] >= 0:
            continue
        label[s] = comp
        stack = [s]
        while stack:
            u = stack.pop()
            for i in range(off[u], off[u + 1]):
                w = tgt[i]
                if label[w] < 0:
                    label[w] = comp
                    stack.append(w)
        comp += 1
    return np.asarray(label, dtype=np.int64)


def edge_ids(offsets: np.ndarray, targets: np.ndarray) -> tuple[np.ndarray, int]:
    """Give both CSR slots of an undirected edge the same id; a loop slot gets its own."""
    off = offsets.tolist()
    tgt = targets.tolist()
    nv = len(off) - 1
    eid = [-1] * len(tgt)
    count = 0
    for u in range(nv):
        for i in range(off[u], off[u + 1]):
            v = tgt[i]
            if v >= u:
                eid[i] = count
                count += 1
            else:
                # twin slot lives in v's row; rows are sorted
                lo, hi = off[v], off[v + 1]
                while lo < hi:
                    mid = (lo + hi) // 2
                    if tgt[mid] < u:
                        lo = mid + 1
                    else:
                        hi = mid
                eid[i] = eid[lo]
    return np.asarray(eid, dtype=np.int64), count


def hierholzer(
    offsets: np.ndarray, targets: np.ndarray, eids: np.ndarray, n_edges: int, start: int
) -> np.ndarray:
    """Hierholzer walk from ``start`` taking the smallest unused neighbour first."""
    off = offsets.tolist()
    tgt = targets.tolist()
    eid = eids.tolist()
    cursor = off[:-1]
    used = [False] * n_edges
    stack = [start]
    out: list[int] = []
    while stack:
        u = stack[-1]
        i = cursor[u]
        end = off[u + 1]
        while i < end and used[eid[i]]:
            i += 1
        cursor[u] = i
        if i < end:
            used[eid[i]] = True
            cursor[u] = i + 1
            stack.append(tgt[i])
        else:
            out.append(stack.pop())
    out.reverse()
    return np.asarray(out, dtype=np.int64)
