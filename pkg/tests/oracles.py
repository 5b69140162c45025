"""Independent reference implementations used to fix expected test values.

Nothing here touches jordanmm's kernels or table: multiplication is done by
direct pair recursion on plain tuples, matrices are nested lists, and the
3x3 determinant uses the explicit closed form.  Deliberately slow.
"""

import itertools

import numpy as np


# ---------------------------------------------------------------------------
# octonion arithmetic on plain tuples (real or complex entries)

def oconj(a):
    return (a[0],) + tuple(-x for x in a[1:])


def omul(a, b):
    n = len(a)
    if n == 1:
        return (a[0] * b[0],)
    h = n // 2
    p, q = a[:h], a[h:]
    r, s = b[:h], b[h:]
    left = tuple(x - y for x, y in zip(omul(p, r), omul(oconj(s), q)))
    right = tuple(x + y for x, y in zip(omul(s, p), omul(q, oconj(r))))
    return left + right


def oadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def oscale(c, a):
    return tuple(c * x for x in a)


def onorm(a):
    """Norm form: sum of squared coordinates (complex squares, not moduli)."""
    return sum(x * x for x in a)


def obasis(i, dim=8):
    return tuple(1.0 if j == i else 0.0 for j in range(dim))


OZERO = (0.0,) * 8


# ---------------------------------------------------------------------------
# matrices as nested lists of coefficient tuples

def mat_from_entries(entries):
    return [[tuple(e) for e in row] for row in entries]


def mat_scalar_diag(values):
    n = len(values)
    return [[(float(values[i]),) + (0.0,) * 7 if i == j else OZERO for j in range(n)] for i in range(n)]


def mat_eye(n):
    return mat_scalar_diag([1.0] * n)


def mat_add(a, b):
    return [[oadd(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[oscale(c, x) for x in row] for row in a]


def mat_mul(a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = OZERO
            for k in range(n):
                acc = oadd(acc, omul(a[i][k], b[k][j]))
            row.append(acc)
        out.append(row)
    return out


def jordan(a, b):
    return mat_scale(0.5, mat_add(mat_mul(a, b), mat_mul(b, a)))


def trace(a):
    return sum(a[i][i][0] for i in range(len(a)))


def trilinear(a, b, c):
    return trace(jordan(a, jordan(b, c)))


def det3(a):
    """3x3 Hermitian determinant over octonion-like entries, closed form.

    With x1 = a[1][2], x2 = a[2][0], x3 = a[0][1]:
    det = d1 d2 d3 - d1 N(x1) - d2 N(x2) - d3 N(x3) + 2 Sc(x1 x2 x3).
    """
    d = [a[i][i][0] for i in range(3)]
    x1, x2, x3 = a[1][2], a[2][0], a[0][1]
    sc = omul(omul(x1, x2), x3)[0]
    return (d[0] * d[1] * d[2]
            - d[0] * onorm(x1) - d[1] * onorm(x2) - d[2] * onorm(x3)
            + 2.0 * sc)


def cubic(a, b, c):
    """Full polarization of det3, normalised so cubic(a, a, a) = det3(a)."""
    return (det3(mat_add(mat_add(a, b), c))
            - det3(mat_add(a, b)) - det3(mat_add(b, c)) - det3(mat_add(a, c))
            + det3(a) + det3(b) + det3(c)) / 6.0


def cycle(a):
    """Relabel rows/columns by the 3-cycle 0 -> 1 -> 2 -> 0."""
    perm = (1, 2, 0)
    return [[a[perm[i]][perm[j]] for j in range(3)] for i in range(3)]


# ---------------------------------------------------------------------------
# brute-force action sums (full index loops, no antisymmetry shortcuts)

def smolin_action(mats, f, coupling=1.0):
    dim = len(mats)
    rho1 = [cycle(m) for m in mats]
    rho2 = [cycle(cycle(m)) for m in mats]
    total = 0.0
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                if f[i][j][k] != 0.0:
                    total += f[i][j][k] * trilinear(mats[i], rho1[j], rho2[k])
    return coupling / (4.0 * np.pi) * total


def ohwashi_action(mats, f):
    dim = len(mats)
    rho1 = [cycle(m) for m in mats]
    rho2 = [cycle(cycle(m)) for m in mats]
    total = 0.0
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                if f[i][j][k] == 0.0:
                    continue
                bracket = 0.0
                for (a, b, c), sgn in zip(itertools.permutations((i, j, k)),
                                          (1.0, -1.0, -1.0, 1.0, 1.0, -1.0)):
                    bracket += sgn * cubic(mats[a], rho1[b], rho2[c])
                total += f[i][j][k] * bracket / 6.0
    return total


def epsilon_tensor():
    f = [[[0.0] * 3 for _ in range(3)] for _ in range(3)]
    for (i, j, k), sgn in zip(itertools.permutations((0, 1, 2)),
                              (1.0, -1.0, -1.0, 1.0, 1.0, -1.0)):
        f[i][j][k] = sgn
    return f


# ---------------------------------------------------------------------------
# conventional eigensolvers on scalar-matrix representations

def quaternion_block(q):
    """2x2 complex image of a quaternion (a, b, c, d) = a + bi + cj + dk."""
    z = q[0] + 1j * q[1]
    w = q[2] + 1j * q[3]
    return np.array([[z, w], [-np.conj(w), np.conj(z)]])


def quaternion_matrix_eigenvalues(a):
    """Eigenvalues of a quaternionic Hermitian matrix via its complex image."""
    n = len(a)
    big = np.zeros((2 * n, 2 * n), dtype=complex)
    for i in range(n):
        for j in range(n):
            big[2 * i:2 * i + 2, 2 * j:2 * j + 2] = quaternion_block(a[i][j][:4])
    vals = np.linalg.eigvalsh(big)
    return vals[::2]  # doubled spectrum, sorted ascending
