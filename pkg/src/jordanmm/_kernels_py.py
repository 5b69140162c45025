"""Pure-NumPy kernels: fallback backend when the compiled extension is absent.

All three entry points share the array layouts of the compiled backend:
coefficient vectors are the trailing axis of length 8, batches lead.
The 8x8 signed index table is unrolled into 64 vectorised accumulations,
so the per-call work is done by BLAS / ufuncs rather than Python loops.
"""

from __future__ import annotations

import numpy as np

from ._table import MUL_INDEX, MUL_SIGN

BACKEND = "python"


def mul_batch(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Octonion-table product of (N, 8) coefficient batches."""
    out = np.zeros_like(a)
    for p in range(8):
        ap = a[:, p]
        for q in range(8):
            term = ap * b[:, q]
            if MUL_SIGN[p, q] > 0:
                out[:, MUL_INDEX[p, q]] += term
            else:
                out[:, MUL_INDEX[p, q]] -= term
    return out


def matmul_batch(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Associative matrix product of (N, n, n, 8) batches over the table."""
    out = np.zeros_like(a)
    for p in range(8):
        ap = a[..., p]
        for q in range(8):
            term = ap @ b[..., q]
            if MUL_SIGN[p, q] > 0:
                out[..., MUL_INDEX[p, q]] += term
            else:
                out[..., MUL_INDEX[p, q]] -= term
    return out


def jordan_batch(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Symmetrised product (ab + ba)/2 of (N, n, n, 8) batches."""
    return 0.5 * (matmul_batch(a, b) + matmul_batch(b, a))
