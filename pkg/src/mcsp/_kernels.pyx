# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_kernels_py.py`` for the reference semantics."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

IMPLEMENTATION = "cython"


def extension_table(bytes x, bytes y):
    cdef Py_ssize_t n = len(x), m = len(y), i, q
    cdef const unsigned char[:] xa = x
    cdef const unsigned char[:] ya = y
    ext = np.zeros((n + 1, m + 1), dtype=np.int32)
    cdef int[:, ::1] e = ext
    for i in range(n - 1, -1, -1):
        for q in range(m - 1, -1, -1):
            if xa[i] == ya[q]:
                e[i, q] = e[i + 1, q + 1] + 1
    return ext


cdef void _runs(const unsigned char[:] free, int[::1] out) nogil:
    cdef Py_ssize_t n = free.shape[0], q
    out[n] = 0
    for q in range(n - 1, -1, -1):
        if free[q]:
            out[q] = out[q + 1] + 1
        else:
            out[q] = 0


def free_runs(const unsigned char[:] free):
    runs = np.zeros(free.shape[0] + 1, dtype=np.int32)
    _runs(free, runs)
    return runs


def placement_limits(const int[:, ::1] ext, Py_ssize_t p, const unsigned char[:] free_y):
    cdef Py_ssize_t m = free_y.shape[0], q
    runs = np.empty(m + 1, dtype=np.int32)
    cdef int[::1] r = runs
    _runs(free_y, r)
    out = np.empty(m, dtype=np.int32)
    cdef int[::1] o = out
    for q in range(m):
        o[q] = ext[p, q] if ext[p, q] < r[q] else r[q]
    return out


def suffix_bound(const int[:, ::1] ext, Py_ssize_t p, const unsigned char[:] free_y):
    cdef Py_ssize_t n = ext.shape[0] - 1, m = free_y.shape[0], i, q
    cdef int v, best, count_x = 0, count_y = 0
    if p >= n:
        return 0
    runs = np.empty(m + 1, dtype=np.int32)
    reach_y_arr = np.zeros(m, dtype=np.int32)
    reach_x_arr = np.zeros(n - p, dtype=np.int32)
    cdef int[::1] r = runs
    cdef int[::1] ry = reach_y_arr
    cdef int[::1] rx = reach_x_arr
    _runs(free_y, r)
    with nogil:
        for i in range(p, n):
            best = 0
            for q in range(m):
                v = ext[i, q]
                if r[q] < v:
                    v = r[q]
                if v > best:
                    best = v
                if v > ry[q]:
                    ry[q] = v
            rx[i - p] = best
        i = 0
        while i < n - p:
            i += rx[i] if rx[i] > 0 else 1
            count_x += 1
        q = 0
        while q < m:
            if free_y[q]:
                q += ry[q] if ry[q] > 0 else 1
                count_y += 1
            else:
                q += 1
    return count_x if count_x > count_y else count_y


def longest_free_common(const int[:, ::1] ext, const unsigned char[:] free_x,
                        const unsigned char[:] free_y):
    cdef Py_ssize_t n = free_x.shape[0], m = free_y.shape[0], i, q
    cdef int v, best = 0
    cdef Py_ssize_t bi = -1, bq = -1
    rx_arr = np.empty(n + 1, dtype=np.int32)
    ry_arr = np.empty(m + 1, dtype=np.int32)
    cdef int[::1] rx = rx_arr
    cdef int[::1] ry = ry_arr
    _runs(free_x, rx)
    _runs(free_y, ry)
    with nogil:
        for i in range(n):
            if rx[i] <= best:
                continue
            for q in range(m):
                v = ext[i, q]
                if rx[i] < v:
                    v = rx[i]
                if ry[q] < v:
                    v = ry[q]
                if v > best:
                    best = v
                    bi = i
                    bq = q
    if best == 0:
        return 0, -1, -1
    return best, bi, bq
