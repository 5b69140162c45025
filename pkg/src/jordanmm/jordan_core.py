"""Jordan algebra structure on Hermitian matrices and spin factors.

A Hermitian element over ground K in {R, C, H, O, CO} is stored as an
(n, n, 8) coefficient array: every entry is an octonion (bioctonion for CO),
with the smaller grounds occupying the leading 1, 2 or 4 coordinates.  The
lower triangle mirrors the upper under octonionic conjugation and diagonal
entries are scalars (complex scalars for CO, real otherwise).

The Jordan product is a o b = (ab + ba)/2 with the associative matrix
product taken coefficientwise over the multiplication table.  On top of it
sit the trace, the Freudenthal product

    a * b = a o b - (a tr(b) + b tr(a))/2 - I (tr(a o b) - tr(a) tr(b))/2,

the 3x3 characteristic data (trace, sigma, determinant), the trace trilinear
form, and the polarized cubic form.  Spin factors live at the bottom of the
module: pairs (v, alpha) with product (v,a)o(w,b) = (aw + bv, <v,w> + ab).
"""

from __future__ import annotations

import numbers

import numpy as np

from . import kernels
from .division_algebras import Bioctonion, Octonion
from .errors import AlgebraError

#: ground tag -> number of active leading coefficients
GROUND_DIMS = {"R": 1, "C": 2, "H": 4, "O": 8, "CO": 8}

_GROUND_ALIASES = {
    "r": "R", "real": "R",
    "c": "C", "complex": "C",
    "h": "H", "quaternion": "H",
    "o": "O", "octonion": "O",
    "co": "CO", "cxo": "CO", "bioctonion": "CO", "c*o": "CO", "cxo8": "CO",
}


def canonical_ground(ground: str) -> str:
    if ground in GROUND_DIMS:
        return ground
    key = str(ground).lower()
    if key in _GROUND_ALIASES:
        return _GROUND_ALIASES[key]
    raise AlgebraError(f"unknown ground algebra {ground!r}; expected one of {sorted(GROUND_DIMS)}")


def _entry_conj(data: np.ndarray) -> np.ndarray:
    """Octonionic conjugation applied to every entry of a coefficient array."""
    out = data.copy()
    out[..., 1:] = -out[..., 1:]
    return out


def _conj_transpose(data: np.ndarray) -> np.ndarray:
    return _entry_conj(np.swapaxes(data, 0, 1))


class HermitianElement:
    """Hermitian n x n matrix over a ground algebra, under the Jordan product."""

    __slots__ = ("n", "ground", "data")

    def __init__(self, ground: str, data, *, strict: bool = False, tol: float | None = None):
        ground = canonical_ground(ground)
        arr = np.asarray(data)
        if arr.ndim != 3 or arr.shape[0] != arr.shape[1] or arr.shape[2] != 8:
            raise AlgebraError(f"expected (n, n, 8) coefficient array, got shape {arr.shape}")
        n = arr.shape[0]
        if n < 1:
            raise AlgebraError("matrix size must be at least 1")
        if ground in ("O", "CO") and n > 3:
            raise AlgebraError(f"h_n({ground}) is only a Jordan algebra for n <= 3, got n = {n}")

        if ground == "CO":
            arr = arr.astype(np.complex128, copy=True)
        else:
            if np.iscomplexobj(arr):
                if np.max(np.abs(arr.imag)) > _scale_tol(np.max(np.abs(arr)), tol):
                    raise AlgebraError(f"ground {ground} stores real coefficients; found complex residue")
                arr = arr.real
            arr = arr.astype(np.float64, copy=True)
        if not np.all(np.isfinite(arr.view(np.float64) if arr.dtype == np.complex128 else arr)):
            raise AlgebraError("entries must be finite")

        scale = float(np.max(np.abs(arr))) if arr.size else 0.0
        bound = _scale_tol(scale, tol)

        # coefficients outside the ground's span must vanish
        width = GROUND_DIMS[ground]
        if width < 8 and arr.size:
            residue = float(np.max(np.abs(arr[..., width:])))
            if residue > bound:
                raise AlgebraError(
                    f"entries use coefficients outside ground {ground} (residue {residue:.3e})")
            arr[..., width:] = 0.0

        # hermiticity: entry(j, i) = tilde(entry(i, j)); diagonal entries scalar
        residue = float(np.max(np.abs(arr - _conj_transpose(arr))))
        if residue > 2 * bound:
            raise AlgebraError(f"matrix is not Hermitian (residue {residue:.3e})")
        arr = 0.5 * (arr + _conj_transpose(arr))
        idx = np.arange(n)
        arr[idx, idx, 1:] = 0.0
        if ground == "CO" and strict:
            residue = float(np.max(np.abs(arr[idx, idx, 0].imag)))
            if residue > bound:
                raise AlgebraError(
                    f"strict mode requires real diagonal for CO elements (residue {residue:.3e})")
            arr[idx, idx, 0] = arr[idx, idx, 0].real

        self.n = n
        self.ground = ground
        self.data = arr

    @classmethod
    def _trusted(cls, ground: str, data: np.ndarray) -> "HermitianElement":
        """Wrap data already in exact Hermitian form (linear combinations of
        validated elements); skips the validation pass."""
        x = object.__new__(cls)
        x.n = data.shape[0]
        x.ground = ground
        x.data = data
        return x

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, n: int, ground: str) -> "HermitianElement":
        ground = canonical_ground(ground)
        dtype = np.complex128 if ground == "CO" else np.float64
        return cls(ground, np.zeros((n, n, 8), dtype=dtype))

    @classmethod
    def identity(cls, n: int, ground: str) -> "HermitianElement":
        x = cls.zeros(n, ground)
        for i in range(n):
            x.data[i, i, 0] = 1.0
        return x

    @classmethod
    def diagonal(cls, values, ground: str = "R") -> "HermitianElement":
        values = np.asarray(values)
        x = cls.zeros(len(values), canonical_ground(ground))
        for i, v in enumerate(values):
            x.data[i, i, 0] = v
        return x

    @classmethod
    def from_parts(cls, ground: str, diag, upper, *, strict: bool = False) -> "HermitianElement":
        """Build from diagonal scalars and the row-major upper triangle."""
        ground = canonical_ground(ground)
        diag = np.asarray(diag)
        n = diag.shape[0]
        expected = n * (n - 1) // 2
        if len(upper) != expected:
            raise AlgebraError(f"need {expected} upper entries for n = {n}, got {len(upper)}")
        x = cls.zeros(n, ground)
        for i in range(n):
            x.data[i, i, 0] = diag[i]
        pos = 0
        for i in range(n):
            for j in range(i + 1, n):
                c = _entry_coeffs(upper[pos], ground)
                x.data[i, j] = c
                x.data[j, i] = c.copy()
                x.data[j, i, 1:] = -x.data[j, i, 1:]
                pos += 1
        return cls(ground, x.data, strict=strict)

    # -- accessors ----------------------------------------------------------

    def entry(self, i: int, j: int):
        """Entry (i, j) as an Octonion (Bioctonion for ground CO)."""
        if self.ground == "CO":
            return Bioctonion(self.data[i, j])
        return Octonion(self.data[i, j])

    def diag(self) -> np.ndarray:
        """Diagonal scalars (real, or complex for CO)."""
        idx = np.arange(self.n)
        return self.data[idx, idx, 0].copy()

    def upper_entries(self) -> list:
        """Upper-triangle entries in row-major order (1,2), (1,3), ..."""
        return [self.entry(i, j) for i in range(self.n) for j in range(i + 1, self.n)]

    def trace(self):
        t = self.data[np.arange(self.n), np.arange(self.n), 0].sum()
        return complex(t) if self.ground == "CO" else float(t)

    def max_norm(self) -> float:
        return float(np.max(np.abs(self.data)))

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.max_norm() <= tol

    def is_close(self, other: "HermitianElement", tol: float = 1e-12) -> bool:
        self._check_compatible(other)
        return float(np.max(np.abs(self.data - other.data))) <= tol

    def _check_compatible(self, other: "HermitianElement") -> None:
        if not isinstance(other, HermitianElement):
            raise AlgebraError(f"expected HermitianElement, got {type(other).__name__}")
        if self.n != other.n:
            raise AlgebraError(f"size mismatch: {self.n} vs {other.n}")
        if self.ground != other.ground:
            raise AlgebraError(f"ground mismatch: {self.ground} vs {other.ground}")

    # -- linear structure ----------------------------------------------------

    def __add__(self, other):
        self._check_compatible(other)
        return HermitianElement._trusted(self.ground, self.data + other.data)

    def __sub__(self, other):
        self._check_compatible(other)
        return HermitianElement._trusted(self.ground, self.data - other.data)

    def __neg__(self):
        return HermitianElement._trusted(self.ground, -self.data)

    def __mul__(self, other):
        if isinstance(other, numbers.Complex) and not isinstance(other, numbers.Real):
            if self.ground != "CO":
                raise AlgebraError("complex scalars only act on CO elements")
            return HermitianElement._trusted(self.ground, self.data * complex(other))
        if isinstance(other, numbers.Real):
            return HermitianElement._trusted(self.ground, self.data * float(other))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1.0 / other)

    def __repr__(self):
        return f"HermitianElement(n={self.n}, ground={self.ground!r})"

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        if self.ground == "CO":
            diag = [[float(z.real), float(z.imag)] for z in self.diag()]
        else:
            diag = [float(v) for v in self.diag()]
        return {
            "n": self.n,
            "ground": self.ground,
            "diag": diag,
            "upper": [e.to_list() for e in self.upper_entries()],
        }

    @classmethod
    def from_dict(cls, doc: dict, *, strict: bool = False) -> "HermitianElement":
        from .documents import hermitian_from_dict

        return hermitian_from_dict(doc, strict=strict)


def _scale_tol(scale: float, tol: float | None) -> float:
    if tol is not None:
        return tol
    return max(1e-12, 1e-9 * scale)


def _entry_coeffs(entry, ground: str) -> np.ndarray:
    if isinstance(entry, (Octonion, Bioctonion)):
        c = entry.coeffs
    else:
        c = np.asarray(entry)
        if c.ndim == 2 and c.shape == (8, 2):  # [re, im] pairs
            c = c[:, 0] + 1j * c[:, 1]
        if c.shape != (8,):
            raise AlgebraError(f"entry must have 8 coefficients, got shape {c.shape}")
    if ground == "CO":
        return c.astype(np.complex128)
    if np.iscomplexobj(c):
        if np.max(np.abs(c.imag)) > 0:
            raise AlgebraError(f"ground {ground} entries must be real")
        c = c.real
    return c.astype(np.float64)


# ---------------------------------------------------------------------------
# products and forms

def jordan_product(a: HermitianElement, b: HermitianElement) -> HermitianElement:
    """Jordan product (ab + ba)/2."""
    a._check_compatible(b)
    return HermitianElement(a.ground, kernels.jordan(a.data, b.data))


def jordan_square(a: HermitianElement) -> HermitianElement:
    return jordan_product(a, a)


def _require_3x3(x: HermitianElement, what: str) -> None:
    if x.n != 3:
        raise AlgebraError(f"{what} is defined for 3x3 elements only, got n = {x.n}")


def freudenthal_product(a: HermitianElement, b: HermitianElement) -> HermitianElement:
    """Freudenthal product; a * a is the adjugate, vanishing on rank <= 1."""
    a._check_compatible(b)
    _require_3x3(a, "the Freudenthal product")
    ab = kernels.jordan(a.data, b.data)
    ta, tb = a.trace(), b.trace()
    t_ab = ab[np.arange(3), np.arange(3), 0].sum()
    out = ab - 0.5 * (tb * a.data + ta * b.data)
    shift = -0.5 * (t_ab - ta * tb)
    for i in range(3):
        out[i, i, 0] += shift
    return HermitianElement(a.ground, out)


def trace_of_product(a: HermitianElement, b: HermitianElement):
    """tr(a o b), the invariant bilinear trace form."""
    a._check_compatible(b)
    prod = kernels.jordan(a.data, b.data)
    t = prod[np.arange(a.n), np.arange(a.n), 0].sum()
    return complex(t) if a.ground == "CO" else float(t)


def characteristic_coefficients(x: HermitianElement):
    """(trace, sigma, det) of a 3x3 element.

    sigma = tr(x * x) and det = tr((x * x) o x) / 3; on diagonal elements
    these are the elementary symmetric functions of the diagonal.
    """
    _require_3x3(x, "characteristic data")
    adj = freudenthal_product(x, x)
    tr = x.trace()
    sigma = adj.trace()
    det = trace_of_product(adj, x) / 3.0
    return tr, sigma, det


def determinant(x: HermitianElement):
    """Determinant of a 3x3 element, via tr((x * x) o x) / 3."""
    return characteristic_coefficients(x)[2]


def trilinear_form(a: HermitianElement, b: HermitianElement, c: HermitianElement):
    """t(a, b, c) = tr(a o (b o c)); symmetric thanks to trace associativity."""
    a._check_compatible(b)
    a._check_compatible(c)
    _require_3x3(a, "the trilinear form")
    return trace_of_product(a, jordan_product(b, c))


def cubic_form(a: HermitianElement, b: HermitianElement, c: HermitianElement):
    """Full polarization of the determinant: cubic_form(a, a, a) = det(a)."""
    a._check_compatible(b)
    a._check_compatible(c)
    _require_3x3(a, "the cubic form")
    return (determinant(a + b + c)
            - determinant(a + b) - determinant(b + c) - determinant(a + c)
            + determinant(a) + determinant(b) + determinant(c)) / 6.0


# ---------------------------------------------------------------------------
# block decomposition and congruence action

def peel(x: HermitianElement):
    """Split off the last row/column: x -> (corner scalar, block, column).

    Returns (a, block, psi) where a is the (n, n) diagonal scalar, block the
    leading (n-1) x (n-1) element and psi the top part of the last column as
    ground-algebra values.  Inverse of unpeel.
    """
    if x.n < 2:
        raise AlgebraError("peel needs a matrix of size at least 2")
    m = x.n - 1
    a = x.data[m, m, 0]
    a = complex(a) if x.ground == "CO" else float(a)
    block = HermitianElement(x.ground, x.data[:m, :m])
    psi = [x.entry(i, m) for i in range(m)]
    return a, block, psi


def unpeel(a, block: HermitianElement, psi) -> HermitianElement:
    """Reassemble a peeled element; inverse of peel."""
    m = block.n
    if len(psi) != m:
        raise AlgebraError(f"column length {len(psi)} does not match block size {m}")
    out = HermitianElement.zeros(m + 1, block.ground)
    out.data[:m, :m] = block.data
    for i, e in enumerate(psi):
        c = _entry_coeffs(e, block.ground)
        out.data[i, m] = c
        out.data[m, i] = c
        out.data[m, i, 1:] = -out.data[m, i, 1:]
    out.data[m, m, 0] = a
    return HermitianElement(block.ground, out.data)


def to_scalar_matrix(x: HermitianElement) -> np.ndarray:
    """Complex n x n matrix for grounds R and C (e1 acting as the imaginary unit)."""
    if x.ground not in ("R", "C"):
        raise AlgebraError(f"scalar matrix form needs ground R or C, got {x.ground}")
    return x.data[..., 0] + 1j * x.data[..., 1]


def from_scalar_matrix(m: np.ndarray, ground: str = "C") -> HermitianElement:
    ground = canonical_ground(ground)
    if ground not in ("R", "C"):
        raise AlgebraError(f"scalar matrix form needs ground R or C, got {ground}")
    m = np.asarray(m, dtype=np.complex128)
    data = np.zeros(m.shape + (8,))
    data[..., 0] = m.real
    data[..., 1] = m.imag
    return HermitianElement(ground, data)


def congruence_action(g: np.ndarray, x: HermitianElement) -> HermitianElement:
    """g x g^dagger for complex-ground elements; preserves Hermiticity,
    and the determinant whenever |det g| = 1."""
    if x.ground != "C":
        raise AlgebraError(f"congruence action is implemented for ground C, got {x.ground}")
    g = np.asarray(g, dtype=np.complex128)
    if g.shape != (x.n, x.n):
        raise AlgebraError(f"matrix shape {g.shape} does not match element size {x.n}")
    y = g @ to_scalar_matrix(x) @ g.conj().T
    y = 0.5 * (y + y.conj().T)
    return from_scalar_matrix(y, "C")


# ---------------------------------------------------------------------------
# spin factors

class SpinFactorElement:
    """Element (v, alpha) of the spin factor over an n-dimensional space part."""

    __slots__ = ("v", "alpha")

    def __init__(self, v, alpha: float):
        self.v = np.asarray(v, dtype=np.float64)
        if self.v.ndim != 1 or self.v.size < 1:
            raise AlgebraError("space part must be a nonempty vector")
        self.alpha = float(alpha)
        if not (np.all(np.isfinite(self.v)) and np.isfinite(self.alpha)):
            raise AlgebraError("components must be finite")

    @classmethod
    def unit(cls, dim: int) -> "SpinFactorElement":
        return cls(np.zeros(dim), 1.0)

    def _check_dim(self, other: "SpinFactorElement") -> None:
        if not isinstance(other, SpinFactorElement):
            raise AlgebraError(f"expected SpinFactorElement, got {type(other).__name__}")
        if self.v.size != other.v.size:
            raise AlgebraError(f"space dimension mismatch: {self.v.size} vs {other.v.size}")

    def __add__(self, other):
        self._check_dim(other)
        return SpinFactorElement(self.v + other.v, self.alpha + other.alpha)

    def __sub__(self, other):
        self._check_dim(other)
        return SpinFactorElement(self.v - other.v, self.alpha - other.alpha)

    def __rmul__(self, c):
        return SpinFactorElement(float(c) * self.v, float(c) * self.alpha)

    __mul__ = __rmul__

    def is_close(self, other, tol: float = 1e-12) -> bool:
        self._check_dim(other)
        return max(float(np.max(np.abs(self.v - other.v))), abs(self.alpha - other.alpha)) <= tol

    def __repr__(self):
        return f"SpinFactorElement(v={self.v.tolist()}, alpha={self.alpha})"


def spin_product(s: SpinFactorElement, t: SpinFactorElement) -> SpinFactorElement:
    """(v, a) o (w, b) = (a w + b v, <v, w> + a b); (0, 1) is the unit."""
    s._check_dim(t)
    return SpinFactorElement(s.alpha * t.v + t.alpha * s.v,
                             float(s.v @ t.v) + s.alpha * t.alpha)


def minkowski_inner(s: SpinFactorElement, t: SpinFactorElement) -> float:
    """Signature (n, 1) bilinear form <v, w> - alpha beta."""
    s._check_dim(t)
    return float(s.v @ t.v) - s.alpha * t.alpha
