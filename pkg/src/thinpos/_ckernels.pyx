# cython: language_level=3
"""Compiled kernels mirroring ``_pykernels``.

The Smith decomposition runs on 64-bit integers with overflow checking; on
overflow it raises ``OverflowError`` and the caller falls back to the exact
Python path.
"""
cimport cython
from libc.stdlib cimport malloc, free
from cython.view cimport array as cvarray

NAME = "cython"


def padded_compare(a, b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, n = max(la, lb)
    cdef object x, y
    for i in range(n):
        x = a[i] if i < la else 0
        y = b[i] if i < lb else 0
        if x != y:
            return -1 if x < y else 1
    return 0


def union_components(p1, p2):
    cdef Py_ssize_t n = len(p1), s, x, y, count = 0, i
    cdef long *q1 = <long *> malloc(n * sizeof(long))
    cdef long *q2 = <long *> malloc(n * sizeof(long))
    cdef char *seen = <char *> malloc(n * sizeof(char))
    if q1 == NULL or q2 == NULL or seen == NULL:
        free(q1); free(q2); free(seen)
        raise MemoryError()
    try:
        for i in range(n):
            q1[i] = p1[i]
            q2[i] = p2[i]
            seen[i] = 0
        for s in range(n):
            if seen[s]:
                continue
            count += 1
            x = s
            while True:
                seen[x] = 1
                y = q1[x]
                seen[y] = 1
                x = q2[y]
                if x == s:
                    break
    finally:
        free(q1); free(q2); free(seen)
    return count


@cython.overflowcheck(True)
@cython.cdivision(False)
cdef inline long long _nearest(long long x, long long p) except? -1:
    cdef long long q = x // p
    cdef long long r = x - q * p
    if 2 * (r if r >= 0 else -r) > (p if p >= 0 else -p):
        q += 1
    return q


@cython.overflowcheck(True)
@cython.cdivision(False)
cdef int _snf(long long[:, ::1] d, long long[:, ::1] u, long long[:, ::1] v) except -1:
    cdef Py_ssize_t m = d.shape[0], n = d.shape[1], t, i, j, pi, pj, bad
    cdef long long best, x, q, p, tmp
    cdef bint clean
    for t in range(min(m, n)):
        while True:
            best = 0
            pi = -1
            pj = -1
            for i in range(t, m):
                for j in range(t, n):
                    x = d[i, j]
                    if x < 0:
                        x = -x
                    if x and (best == 0 or x < best):
                        best = x
                        pi = i
                        pj = j
            if pi < 0:
                return 0
            if pi != t:
                for j in range(n):
                    tmp = d[t, j]; d[t, j] = d[pi, j]; d[pi, j] = tmp
                for j in range(m):
                    tmp = u[t, j]; u[t, j] = u[pi, j]; u[pi, j] = tmp
            if pj != t:
                for i in range(m):
                    tmp = d[i, t]; d[i, t] = d[i, pj]; d[i, pj] = tmp
                for i in range(n):
                    tmp = v[i, t]; v[i, t] = v[i, pj]; v[i, pj] = tmp

            p = d[t, t]
            clean = True
            for i in range(t + 1, m):
                q = _nearest(d[i, t], p)
                if q:
                    for j in range(t, n):
                        d[i, j] = d[i, j] - q * d[t, j]
                    for j in range(m):
                        u[i, j] = u[i, j] - q * u[t, j]
                if d[i, t]:
                    clean = False
            for j in range(t + 1, n):
                q = _nearest(d[t, j], p)
                if q:
                    for i in range(m):
                        d[i, j] = d[i, j] - q * d[i, t]
                    for i in range(n):
                        v[i, j] = v[i, j] - q * v[i, t]
                if d[t, j]:
                    clean = False
            if not clean:
                continue

            bad = -1
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i, j] % p:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad < 0:
                break
            for j in range(t, n):
                d[t, j] = d[t, j] + d[bad, j]
            for j in range(m):
                u[t, j] = u[t, j] + u[bad, j]

        if d[t, t] < 0:
            for j in range(n):
                d[t, j] = -d[t, j]
            for j in range(m):
                u[t, j] = -u[t, j]
    return 0


def smith_decomp(a, Py_ssize_t m, Py_ssize_t n):
    """Same contract as the Python kernel; raises OverflowError past int64."""
    cdef Py_ssize_t i, j
    cdef long long[:, ::1] d, u, v
    if m == 0 or n == 0:
        return ([[int(i == j) for j in range(m)] for i in range(m)],
                [[] for _ in range(m)],
                [[int(i == j) for j in range(n)] for i in range(n)])
    d = _zeros(m, n)
    u = _zeros(m, m)
    v = _zeros(n, n)
    for i in range(m):
        row = a[i]
        for j in range(n):
            d[i, j] = row[j]
        u[i, i] = 1
    for i in range(n):
        v[i, i] = 1
    _snf(d, u, v)
    return _tolist(u), _tolist(d), _tolist(v)


cdef long long[:, ::1] _zeros(Py_ssize_t r, Py_ssize_t c):
    cdef long long[:, ::1] out = cvarray(shape=(r, c), itemsize=sizeof(long long), format="q")
    out[:, :] = 0
    return out


cdef list _tolist(long long[:, ::1] x):
    return [[x[i, j] for j in range(x.shape[1])] for i in range(x.shape[0])]
