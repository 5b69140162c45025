# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for batched octonion-coefficient products.

Same contract as jordanmm._kernels_py; the signed index table is copied
into C arrays once at import.
"""

import numpy as np

from ._table import MUL_INDEX, MUL_SIGN

cdef int SIGN[8][8]
cdef Py_ssize_t IDX[8][8]

for _i in range(8):
    for _j in range(8):
        SIGN[_i][_j] = int(MUL_SIGN[_i, _j])
        IDX[_i][_j] = int(MUL_INDEX[_i, _j])

BACKEND = "compiled"

ctypedef fused scalar:
    double
    double complex


def mul_batch(scalar[:, ::1] a, scalar[:, ::1] b):
    """Octonion-table product of (N, 8) coefficient batches."""
    cdef Py_ssize_t t, i, j
    cdef Py_ssize_t n = a.shape[0]
    cdef scalar av
    if scalar is double:
        out_arr = np.zeros((n, 8), dtype=np.float64)
    else:
        out_arr = np.zeros((n, 8), dtype=np.complex128)
    cdef scalar[:, ::1] out = out_arr
    with nogil:
        for t in range(n):
            for i in range(8):
                av = a[t, i]
                if av == 0:
                    continue
                for j in range(8):
                    out[t, IDX[i][j]] = out[t, IDX[i][j]] + SIGN[i][j] * av * b[t, j]
    return out_arr


def matmul_batch(scalar[:, :, :, ::1] a, scalar[:, :, :, ::1] b):
    """Associative matrix product of (N, n, n, 8) batches over the table."""
    cdef Py_ssize_t t, i, j, k, p, q
    cdef Py_ssize_t nb = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef scalar av
    cdef scalar acc[8]
    if scalar is double:
        out_arr = np.zeros((nb, n, n, 8), dtype=np.float64)
    else:
        out_arr = np.zeros((nb, n, n, 8), dtype=np.complex128)
    cdef scalar[:, :, :, ::1] out = out_arr
    with nogil:
        for t in range(nb):
            for i in range(n):
                for j in range(n):
                    for q in range(8):
                        acc[q] = 0
                    for k in range(n):
                        for p in range(8):
                            av = a[t, i, k, p]
                            if av == 0:
                                continue
                            for q in range(8):
                                acc[IDX[p][q]] = acc[IDX[p][q]] + SIGN[p][q] * av * b[t, k, j, q]
                    for q in range(8):
                        out[t, i, j, q] = acc[q]
    return out_arr


def jordan_batch(scalar[:, :, :, ::1] a, scalar[:, :, :, ::1] b):
    """Symmetrised product (ab + ba)/2 of (N, n, n, 8) batches."""
    ab = matmul_batch(a, b)
    ba = matmul_batch(b, a)
    return 0.5 * (ab + ba)
