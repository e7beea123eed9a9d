# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 versions of the kernels in _pykernels.

Callers guarantee that no intermediate exceeds the int64 range.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def left_right(c, Py_ssize_t n):
    cdef cnp.int64_t[::1] cv = np.ascontiguousarray(c, dtype=np.int64)
    cdef Py_ssize_t n2 = n * n, n4 = n * n * n * n
    left_arr = np.zeros(n4, dtype=np.int64)
    right_arr = np.zeros(n4, dtype=np.int64)
    cdef cnp.int64_t[::1] left = left_arr
    cdef cnp.int64_t[::1] right = right_arr
    cdef Py_ssize_t i, j, k, l, m, base, src
    cdef cnp.int64_t a, b
    for i in range(n):
        for j in range(n):
            for m in range(n):
                a = cv[(i * n + j) * n + m]
                if a == 0:
                    continue
                for k in range(n):
                    base = ((i * n + j) * n + k) * n
                    src = m * n2 + k * n
                    for l in range(n):
                        b = cv[src + l]
                        if b != 0:
                            left[base + l] += a * b
                for k in range(n):
                    base = ((k * n + i) * n + j) * n
                    src = k * n2 + m * n
                    for l in range(n):
                        b = cv[src + l]
                        if b != 0:
                            right[base + l] += a * b
    return left_arr.tolist(), right_arr.tolist()


def permuted_rows(t, Py_ssize_t n, perms):
    cdef cnp.int64_t[::1] tv = np.ascontiguousarray(t, dtype=np.int64)
    cdef Py_ssize_t r = len(perms)
    cdef cnp.int64_t[:, ::1] pv = np.ascontiguousarray(perms, dtype=np.int64)
    out_arr = np.zeros(n * n * n * n * r, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    cdef Py_ssize_t i, j, k, l, s, pos = 0
    cdef Py_ssize_t trip[3]
    cdef Py_ssize_t bases[64]
    if r > 64:
        raise ValueError("at most 64 permutations")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                trip[0] = i
                trip[1] = j
                trip[2] = k
                for s in range(r):
                    bases[s] = ((trip[pv[s, 0]] * n + trip[pv[s, 1]]) * n + trip[pv[s, 2]]) * n
                for l in range(n):
                    for s in range(r):
                        out[pos + s] = tv[bases[s] + l]
                    pos += r
    return out_arr.tolist()


def tensor_table(ca, Py_ssize_t na, cb, Py_ssize_t nb):
    cdef cnp.int64_t[::1] av = np.ascontiguousarray(ca, dtype=np.int64)
    cdef cnp.int64_t[::1] bv = np.ascontiguousarray(cb, dtype=np.int64)
    cdef Py_ssize_t n = na * nb
    out_arr = np.zeros(n * n * n, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    cdef Py_ssize_t a1, a2, a3, b1, b2, b3, i, j, l
    cdef cnp.int64_t x, y
    for a1 in range(na):
        for a2 in range(na):
            for a3 in range(na):
                x = av[(a1 * na + a2) * na + a3]
                if x == 0:
                    continue
                for b1 in range(nb):
                    for b2 in range(nb):
                        for b3 in range(nb):
                            y = bv[(b1 * nb + b2) * nb + b3]
                            if y != 0:
                                i = a1 * nb + b1
                                j = a2 * nb + b2
                                l = a3 * nb + b3
                                out[(i * n + j) * n + l] = x * y
    return out_arr.tolist()
