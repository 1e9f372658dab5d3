# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of ``_kernels_py``.

Inputs that fit comfortably in 64 bits take a C integer path; anything
larger falls through to Python-int arithmetic with typed loop indices.
"""

from libc.stdlib cimport malloc, free

# |X| < 2**40 and n < 2**20 keep every cross product below 2**62
cdef long long _SMALL = 1LL << 40
cdef Py_ssize_t _MAX_N = 1 << 20


cdef bint _fits(list X):
    cdef Py_ssize_t i, m = len(X)
    if m >= _MAX_N:
        return False
    for i in range(m):
        v = X[i]
        if not (-_SMALL < v < _SMALL):
            return False
    return True


cdef long long* _to_c(list X) except NULL:
    cdef Py_ssize_t i, m = len(X)
    cdef long long* buf = <long long*> malloc(max(m, 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        buf[i] = X[i]
    return buf


def lower_hull(X):
    X = list(X)
    cdef Py_ssize_t m = len(X)
    cdef Py_ssize_t c, a, b, top = 0
    cdef Py_ssize_t* hull = <Py_ssize_t*> malloc(max(m, 1) * sizeof(Py_ssize_t))
    cdef long long* x
    if hull == NULL:
        raise MemoryError()
    try:
        if _fits(X):
            x = _to_c(X)
            try:
                for c in range(m):
                    while top >= 2:
                        a = hull[top - 2]
                        b = hull[top - 1]
                        if (b - a) * (x[c] - x[a]) - (c - a) * (x[b] - x[a]) <= 0:
                            top -= 1
                        else:
                            break
                    hull[top] = c
                    top += 1
            finally:
                free(x)
        else:
            for c in range(m):
                while top >= 2:
                    a = hull[top - 2]
                    b = hull[top - 1]
                    if (b - a) * (X[c] - X[a]) - (c - a) * (X[b] - X[a]) <= 0:
                        top -= 1
                    else:
                        break
                hull[top] = c
                top += 1
        return [hull[i] for i in range(top)]
    finally:
        free(hull)


cdef tuple _minmax_c(long long* x, Py_ssize_t n, Py_ssize_t k):
    cdef Py_ssize_t p, q
    cdef long long tn, td, sn, sd, bn = 0, bd = 0
    cdef bint have = False
    for p in range(k):
        tn = x[p] - x[k]
        td = k - p
        for q in range(k + 1, n + 1):
            sn = x[p] - x[q]
            sd = q - p
            if sn * td > tn * sd:
                tn = sn
                td = sd
        if not have or tn * bd < bn * td:
            bn = tn
            bd = td
            have = True
    return bn, bd


cdef tuple _maxmin_c(long long* x, Py_ssize_t n, Py_ssize_t k):
    cdef Py_ssize_t p, q
    cdef long long rn, rd, sn, sd, bn = 0, bd = 0
    cdef bint have = False
    for q in range(k, n + 1):
        rn = x[0] - x[q]
        rd = q
        for p in range(1, k):
            sn = x[p] - x[q]
            sd = q - p
            if sn * rd < rn * sd:
                rn = sn
                rd = sd
        if not have or rn * bd > bn * rd:
            bn = rn
            bd = rd
            have = True
    return bn, bd


def minmax_slope(X, Py_ssize_t k):
    X = list(X)
    cdef Py_ssize_t p, q, n = len(X) - 1
    cdef long long* x
    if _fits(X):
        x = _to_c(X)
        try:
            return _minmax_c(x, n, k)
        finally:
            free(x)
    best_n = best_d = None
    for p in range(k):
        xp = X[p]
        tn = xp - X[k]
        td = k - p
        for q in range(k + 1, n + 1):
            sn = xp - X[q]
            sd = q - p
            if sn * td > tn * sd:
                tn = sn
                td = sd
        if best_n is None or tn * best_d < best_n * td:
            best_n = tn
            best_d = td
    return best_n, best_d


def maxmin_slope(X, Py_ssize_t k):
    X = list(X)
    cdef Py_ssize_t p, q, n = len(X) - 1
    cdef long long* x
    if _fits(X):
        x = _to_c(X)
        try:
            return _maxmin_c(x, n, k)
        finally:
            free(x)
    best_n = best_d = None
    for q in range(k, n + 1):
        xq = X[q]
        rn = X[0] - xq
        rd = q
        for p in range(1, k):
            sn = X[p] - xq
            sd = q - p
            if sn * rd < rn * sd:
                rn = sn
                rd = sd
        if best_n is None or rn * best_d > best_n * rd:
            best_n = rn
            best_d = rd
    return best_n, best_d


def min_affine(list rows, list consts, X, dx):
    cdef Py_ssize_t i, j, nrows = len(rows), m
    cdef list row
    cdef list xs = list(X)
    m = len(xs)
    best = None
    for i in range(nrows):
        row = rows[i]
        v = consts[i] * dx
        for j in range(m):
            a = row[j]
            if a:
                v += a * xs[j]
        if best is None or v < best:
            best = v
    return best
