# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled filter-bank kernels.

Must stay numerically interchangeable with _kernels_py: same tap order, plain
left-to-right accumulation, no fused multiply-add (the build passes
-ffp-contract=off).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"


def analysis_step(double[:, ::1] ext, double[::1] lo, double[::1] hi, Py_ssize_t out_len):
    cdef Py_ssize_t d = ext.shape[1]
    cdef Py_ssize_t L = lo.shape[0]
    ca_arr = np.zeros((out_len, d), dtype=np.float64)
    cd_arr = np.zeros((out_len, d), dtype=np.float64)
    cdef double[:, ::1] ca = ca_arr
    cdef double[:, ::1] cd = cd_arr
    cdef Py_ssize_t k, c, m
    cdef double a, b, x
    with nogil:
        for k in range(out_len):
            for c in range(d):
                a = 0.0
                b = 0.0
                for m in range(L):
                    x = ext[2 * k + m, c]
                    a = a + lo[m] * x
                    b = b + hi[m] * x
                ca[k, c] = a
                cd[k, c] = b
    return ca_arr, cd_arr


def synthesis_step(double[:, ::1] ua_ext, double[:, ::1] ud_ext,
                   double[::1] rec_lo, double[::1] rec_hi, Py_ssize_t out_len):
    cdef Py_ssize_t d = ua_ext.shape[1]
    cdef Py_ssize_t L = rec_lo.shape[0]
    out_arr = np.zeros((out_len, d), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, c, m
    cdef double s
    with nogil:
        for i in range(out_len):
            for c in range(d):
                s = 0.0
                for m in range(L):
                    s = s + rec_lo[m] * ua_ext[i + m, c]
                for m in range(L):
                    s = s + rec_hi[m] * ud_ext[i + m, c]
                out[i, c] = s
    return out_arr
