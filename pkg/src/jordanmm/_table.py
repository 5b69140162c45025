"""Octonion multiplication table, generated from the Cayley-Dickson doubling.

Convention: the doubling rule is (p, q)(r, s) = (pr - conj(s) q, s p + q conj(r)),
applied on top of the quaternions.  Basis index 0 is the real unit, {e1, e2, e3}
span the quaternion block (e1 e2 = e3), e4 is the doubling unit, and
e5 = e1 e4, e6 = e2 e4, e7 = e3 e4.

The recursion below runs once at import and every multiplication elsewhere in
the package reads off the signed index table it produces.  Restricting the
table to indices {0, 1} gives the complex numbers and {0..3} the quaternions,
so one table serves all four division algebras (and the bioctonions, which
reuse it with complex coefficients).
"""

from __future__ import annotations

import numpy as np


def cd_conjugate(x: np.ndarray) -> np.ndarray:
    """Cayley-Dickson conjugation: negate every non-real coordinate."""
    y = np.array(x)
    y[1:] = -y[1:]
    return y


def cd_multiply(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Multiply two coefficient vectors of length 2**k by doubling recursion."""
    x = np.asarray(x)
    y = np.asarray(y)
    n = x.shape[0]
    if n == 1:
        return x * y
    h = n // 2
    p, q = x[:h], x[h:]
    r, s = y[:h], y[h:]
    return np.concatenate([
        cd_multiply(p, r) - cd_multiply(cd_conjugate(s), q),
        cd_multiply(s, p) + cd_multiply(q, cd_conjugate(r)),
    ])


def _build_tables(dim: int = 8) -> tuple[np.ndarray, np.ndarray]:
    sign = np.zeros((dim, dim), dtype=np.int8)
    index = np.zeros((dim, dim), dtype=np.intp)
    eye = np.eye(dim)
    for i in range(dim):
        for j in range(dim):
            prod = cd_multiply(eye[i], eye[j])
            nz = np.flatnonzero(prod)
            if nz.size != 1:
                raise AssertionError("basis product must hit a single basis element")
            k = int(nz[0])
            index[i, j] = k
            sign[i, j] = int(prod[k])
    return sign, index


#: e_i e_j = MUL_SIGN[i, j] * e_{MUL_INDEX[i, j]}
MUL_SIGN, MUL_INDEX = _build_tables()

#: dense structure tensor: (e_i e_j)_k = STRUCTURE_TENSOR[i, j, k]
STRUCTURE_TENSOR = np.zeros((8, 8, 8))
for _i in range(8):
    for _j in range(8):
        STRUCTURE_TENSOR[_i, _j, MUL_INDEX[_i, _j]] = MUL_SIGN[_i, _j]
STRUCTURE_TENSOR.setflags(write=False)
MUL_SIGN.setflags(write=False)
MUL_INDEX.setflags(write=False)
