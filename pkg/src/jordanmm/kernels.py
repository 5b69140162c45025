"""Backend selection and shape/dtype plumbing for the hot product kernels.

The compiled extension (jordanmm._speedups) is preferred; the pure-NumPy
module is the drop-in fallback.  Set JORDANMM_NO_EXT=1 to force the
fallback, e.g. to compare backends or debug a build.
"""

from __future__ import annotations

import os

import numpy as np

if os.environ.get("JORDANMM_NO_EXT"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND


def _prepare(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    dtype = np.promote_types(a.dtype, b.dtype)
    if dtype not in (np.dtype(np.float64), np.dtype(np.complex128)):
        dtype = np.dtype(np.complex128) if np.issubdtype(dtype, np.complexfloating) else np.dtype(np.float64)
    return (np.ascontiguousarray(a, dtype=dtype), np.ascontiguousarray(b, dtype=dtype))


def mul_batch(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of (N, 8) coefficient batches."""
    a, b = _prepare(a, b)
    return _impl.mul_batch(a, b)


def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of two length-8 coefficient vectors."""
    a, b = _prepare(a, b)
    return _impl.mul_batch(a[None, :], b[None, :])[0]


def matmul_batch(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Associative matrix product of (N, n, n, 8) batches."""
    a, b = _prepare(a, b)
    return _impl.matmul_batch(a, b)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Associative matrix product of two (n, n, 8) blocks."""
    a, b = _prepare(a, b)
    return _impl.matmul_batch(a[None], b[None])[0]


def jordan_batch(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Symmetrised product (ab + ba)/2 of (N, n, n, 8) batches."""
    a, b = _prepare(a, b)
    if a is b:  # (aa + aa)/2 = aa, one product suffices
        return _impl.matmul_batch(a, a)
    return _impl.jordan_batch(a, b)


def jordan(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Symmetrised product (ab + ba)/2 of two (n, n, 8) blocks."""
    a, b = _prepare(a, b)
    if a is b:
        return _impl.matmul_batch(a[None], a[None])[0]
    return _impl.jordan_batch(a[None], b[None])[0]
