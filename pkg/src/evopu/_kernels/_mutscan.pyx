# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled single-site mutation scan. Same contract as _mutscan_py.scan_mutants."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def scan_mutants(seqs, counts, rates, stop_mask):
    cdef cnp.uint8_t[:, ::1] s = np.ascontiguousarray(seqs, dtype=np.uint8)
    cdef double[::1] c = np.ascontiguousarray(counts, dtype=np.float64)
    cdef double[:, ::1] r = np.ascontiguousarray(rates, dtype=np.float64)
    cdef cnp.uint8_t[::1] stops = np.ascontiguousarray(stop_mask, dtype=np.uint8)

    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t w = s.shape[1]
    out = np.empty((n * w * 3, w), dtype=np.uint8)
    contrib = np.empty(n * w * 3, dtype=np.float64)
    cdef cnp.uint8_t[:, ::1] ov = out
    cdef double[::1] cv = contrib

    cdef Py_ssize_t i, j, k, f0, m = 0
    cdef int b, orig, c0, c1, c2
    for i in range(n):
        for j in range(w):
            f0 = 3 * (j // 3)
            orig = s[i, j]
            for b in range(4):
                if b == orig:
                    continue
                c0 = s[i, f0]
                c1 = s[i, f0 + 1]
                c2 = s[i, f0 + 2]
                if j == f0:
                    c0 = b
                elif j == f0 + 1:
                    c1 = b
                else:
                    c2 = b
                if stops[16 * c0 + 4 * c1 + c2]:
                    continue
                for k in range(w):
                    ov[m, k] = s[i, k]
                ov[m, j] = <cnp.uint8_t> b
                cv[m] = r[orig, b] * c[i]
                m += 1
    return out[:m], contrib[:m]
