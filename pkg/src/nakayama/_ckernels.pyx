# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) elimination kernels; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cdef long long _inv(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_modp(rows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, j, c, r = 0, piv
    cdef long long f, inv, x
    cdef long long *m
    if nrows == 0 or ncols == 0:
        return [], []
    m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    pivots = []
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                x = row[j] % p
                m[i * ncols + j] = x
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if m[i * ncols + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(ncols):
                    x = m[r * ncols + j]
                    m[r * ncols + j] = m[piv * ncols + j]
                    m[piv * ncols + j] = x
            inv = _inv(m[r * ncols + c], p)
            for j in range(c, ncols):
                m[r * ncols + j] = m[r * ncols + j] * inv % p
            for i in range(nrows):
                if i == r:
                    continue
                f = m[i * ncols + c]
                if f == 0:
                    continue
                for j in range(c, ncols):
                    x = (m[i * ncols + j] - f * m[r * ncols + j]) % p
                    if x < 0:
                        x += p
                    m[i * ncols + j] = x
            pivots.append(c)
            r += 1
        out = [[m[i * ncols + j] for j in range(ncols)] for i in range(r)]
    finally:
        free(m)
    return out, pivots


def det_modp(rows, long long p):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, c, piv
    cdef long long det = 1, f, inv, x
    cdef long long *m
    if n == 0:
        return 1 % p
    m = <long long *> malloc(n * n * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            row = rows[i]
            for j in range(n):
                x = row[j] % p
                m[i * n + j] = x
        for c in range(n):
            piv = -1
            for i in range(c, n):
                if m[i * n + c] != 0:
                    piv = i
                    break
            if piv < 0:
                return 0
            if piv != c:
                for j in range(n):
                    x = m[c * n + j]
                    m[c * n + j] = m[piv * n + j]
                    m[piv * n + j] = x
                det = (p - det) % p
            det = det * m[c * n + c] % p
            inv = _inv(m[c * n + c], p)
            for i in range(c + 1, n):
                f = m[i * n + c] * inv % p
                if f == 0:
                    continue
                for j in range(c, n):
                    x = (m[i * n + j] - f * m[c * n + j]) % p
                    if x < 0:
                        x += p
                    m[i * n + j] = x
    finally:
        free(m)
    return det
