# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors ``_pykernels`` exactly."""
import numpy as np
cimport numpy as cnp

from zdg import _pykernels

cnp.import_array()

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    """
    typedef unsigned __int128 zdg_u128;
    """
    ctypedef unsigned long long u128 "zdg_u128"

cdef u64[12] MR_BASES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


cdef inline u64 mulmod(u64 a, u64 b, u64 m) nogil:
    return <u64>((<u128>a * b) % m)


cdef u64 powmod(u64 a, u64 e, u64 m) nogil:
    cdef u64 r = 1
    a %= m
    while e:
        if e & 1:
            r = mulmod(r, a, m)
        a = mulmod(a, a, m)
        e >>= 1
    return r


cdef inline u64 ugcd(u64 a, u64 b) nogil:
    cdef u64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef bint mr_u64(u64 n) nogil:
    cdef int i, r
    cdef u64 d, x, a
    cdef int s = 0
    if n < 2:
        return False
    for i in range(12):
        if n % MR_BASES[i] == 0:
            return n == MR_BASES[i]
    d = n - 1
    while d % 2 == 0:
        d //= 2
        s += 1
    for i in range(12):
        a = MR_BASES[i]
        x = powmod(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for r in range(s - 1):
            x = mulmod(x, x, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n):
    if n < 0 or n >= 2 ** 64:
        return _pykernels.is_prime(n)
    return mr_u64(<u64>n)


cdef u64 brent_u64(u64 n, u64 c) nogil:
    cdef u64 y = 2, x = 2, ys = 2, q = 1, g = 1, diff
    cdef u64 r = 1, k, i, lim
    cdef u64 m = 128
    while g == 1:
        x = y
        for i in range(r):
            y = (mulmod(y, y, n) + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            lim = m if m < r - k else r - k
            for i in range(lim):
                y = (mulmod(y, y, n) + c) % n
                diff = x - y if x > y else y - x
                q = mulmod(q, diff, n)
            g = ugcd(q, n)
            k += m
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (mulmod(ys, ys, n) + c) % n
            diff = x - ys if x > ys else ys - x
            g = ugcd(diff, n)
    return g


def pollard_brent(n, seed=1):
    if n >= 2 ** 63:
        return _pykernels.pollard_brent(n, seed)
    if n % 2 == 0:
        return 2
    cdef u64 nn = n
    cdef u64 c = seed
    cdef u64 g
    while True:
        g = brent_u64(nn, c)
        if g != nn:
            return int(g)
        c += 1


def build_csr(i64 n, cnp.ndarray[i64, ndim=1] vertices):
    cdef Py_ssize_t nv = vertices.shape[0]
    cdef i64[::1] verts = np.ascontiguousarray(vertices)
    cdef cnp.ndarray[i64, ndim=1] offsets = np.zeros(nv + 1, dtype=np.int64)
    cdef Py_ssize_t u, lo, hi, mid, pos
    cdef i64 step, v, total = 0
    for u in range(nv):
        step = n // <i64>ugcd(<u64>n, <u64>verts[u])
        # multiples of step in (0, n), minus u itself when u*u = 0
        total += (n - 1) // step - (verts[u] % step == 0)
        offsets[u + 1] = total
    cdef cnp.ndarray[i64, ndim=1] targets = np.empty(total, dtype=np.int64)
    pos = 0
    for u in range(nv):
        step = n // <i64>ugcd(<u64>n, <u64>verts[u])
        v = step
        lo = 0
        while v < n:
            if v != verts[u]:
                # vertices ascending and v increasing: resume search from lo
                hi = nv
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if verts[mid] < v:
                        lo = mid + 1
                    else:
                        hi = mid
                targets[pos] = lo
                pos += 1
            v += step
    return offsets, targets


def component_labels(cnp.ndarray[i64, ndim=1] offsets, cnp.ndarray[i64, ndim=1] targets):
    cdef Py_ssize_t nv = offsets.shape[0] - 1
    cdef cnp.ndarray[i64, ndim=1] label = np.full(nv, -1, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] stack = np.empty(max(nv, 1), dtype=np.int64)
    cdef Py_ssize_t s, top, i
    cdef i64 u, w, comp = 0
    for s in range(nv):
        if label[s] >= 0:
            continue
        label[s] = comp
        stack[0] = s
        top = 1
        while top:
            top -= 1
            u = stack[top]
            for i in range(offsets[u], offsets[u + 1]):
                w = targets[i]
                if label[w] < 0:
                    label[w] = comp
                    stack[top] = w
                    top += 1
        comp += 1
    return label


def edge_ids(cnp.ndarray[i64, ndim=1] offsets, cnp.ndarray[i64, ndim=1] targets):
    cdef Py_ssize_t nv = offsets.shape[0] - 1
    cdef Py_ssize_t m = targets.shape[0]
    cdef cnp.ndarray[i64, ndim=1] eid = np.full(m, -1, dtype=np.int64)
    cdef Py_ssize_t u, i, lo, hi, mid
    cdef i64 v, count = 0
    for u in range(nv):
        for i in range(offsets[u], offsets[u + 1]):
            v = targets[i]
            if v >= u:
                eid[i] = count
                count += 1
            else:
                lo = offsets[v]
                hi = offsets[v + 1]
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if targets[mid] < u:
                        lo = mid + 1
                    else:
                        hi = mid
                eid[i] = eid[lo]
    return eid, int(count)


def hierholzer(cnp.ndarray[i64, ndim=1] offsets, cnp.ndarray[i64, ndim=1] targets,
               cnp.ndarray[i64, ndim=1] eids, i64 n_edges, i64 start):
    cdef Py_ssize_t nv = offsets.shape[0] - 1
    cdef cnp.ndarray[i64, ndim=1] cursor = offsets[:nv].copy()
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] used = np.zeros(max(n_edges, 1), dtype=np.uint8)
    cdef cnp.ndarray[i64, ndim=1] stack = np.empty(n_edges + 1, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] out = np.empty(n_edges + 1, dtype=np.int64)
    cdef Py_ssize_t top = 1, nout = 0
    cdef i64 u, i, end
    stack[0] = start
    while top:
        u = stack[top - 1]
        i = cursor[u]
        end = offsets[u + 1]
        while i < end and used[eids[i]]:
            i += 1
        if i < end:
            used[eids[i]] = 1
            cursor[u] = i + 1
            stack[top] = targets[i]
            top += 1
        else:
            cursor[u] = i
            top -= 1
            out[nout] = u
            nout += 1
    return out[:nout][::-1].copy()
