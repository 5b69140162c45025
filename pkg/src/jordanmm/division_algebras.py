"""Octonion and bioctonion arithmetic.

Octonions are stored as 8 real coordinates over the basis {1, e1..e7} fixed
in jordanmm._table; the reals, complexes and quaternions are the subalgebras
spanned by the first 1, 2 and 4 basis elements.  Bioctonions carry the same
basis with complex coordinates; they are not a division algebra (zero
divisors such as 1 + i*e1 exist) and support two commuting involutions:
octonionic conjugation (complex-linear, "tilde") and coefficientwise complex
conjugation.
"""

from __future__ import annotations

import numbers

import numpy as np

from . import kernels
from .errors import AlgebraError

CONJUGATION_MODES = ("octonion", "complex", "both")


def _check_mode(mode: str) -> None:
    if mode not in CONJUGATION_MODES:
        raise AlgebraError(f"unknown conjugation mode {mode!r}; expected one of {CONJUGATION_MODES}")


class Octonion:
    """An octonion as 8 real coefficients over {1, e1..e7}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.asarray(coeffs, dtype=np.float64)
        if arr.shape != (8,):
            raise AlgebraError(f"octonion needs 8 coefficients, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise AlgebraError("octonion coefficients must be finite")
        self.coeffs = arr

    @classmethod
    def zero(cls) -> "Octonion":
        return cls(np.zeros(8))

    @classmethod
    def from_scalar(cls, x: float) -> "Octonion":
        c = np.zeros(8)
        c[0] = x
        return cls(c)

    @classmethod
    def basis(cls, i: int) -> "Octonion":
        """Basis element e_i (e_0 is the real unit)."""
        if not 0 <= i < 8:
            raise AlgebraError(f"basis index {i} out of range 0..7")
        c = np.zeros(8)
        c[i] = 1.0
        return cls(c)

    def __add__(self, other):
        return Octonion(self.coeffs + _coeffs_of(other, Octonion))

    def __sub__(self, other):
        return Octonion(self.coeffs - _coeffs_of(other, Octonion))

    def __neg__(self):
        return Octonion(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return Octonion(kernels.mul(self.coeffs, other.coeffs))
        if isinstance(other, numbers.Real):
            return Octonion(self.coeffs * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return Octonion(self.coeffs * float(other))
        return NotImplemented

    def conjugate(self, mode: str = "octonion") -> "Octonion":
        """Conjugate; "complex" mode is the identity on a real octonion."""
        _check_mode(mode)
        c = self.coeffs.copy()
        if mode in ("octonion", "both"):
            c[1:] = -c[1:]
        return Octonion(c)

    def norm_form(self) -> float:
        """N(a) = sum of squared coordinates, the scalar part of a * conj(a)."""
        return float(self.coeffs @ self.coeffs)

    def scalar_part(self) -> float:
        return float(self.coeffs[0])

    def max_norm(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def is_close(self, other, tol: float = 1e-12) -> bool:
        return float(np.max(np.abs(self.coeffs - _coeffs_of(other, Octonion)))) <= tol

    def to_list(self) -> list:
        return [float(c) for c in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return bool(np.array_equal(self.coeffs, other.coeffs))

    def __repr__(self):
        return f"Octonion({self.to_list()})"

    def __str__(self):
        return _format_coeffs(self.coeffs)


class Bioctonion:
    """An octonion with complex coefficients over {1, e1..e7}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.asarray(coeffs, dtype=np.complex128)
        if arr.shape != (8,):
            raise AlgebraError(f"bioctonion needs 8 coefficients, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise AlgebraError("bioctonion coefficients must be finite")
        self.coeffs = arr

    @classmethod
    def zero(cls) -> "Bioctonion":
        return cls(np.zeros(8, dtype=np.complex128))

    @classmethod
    def from_scalar(cls, x: complex) -> "Bioctonion":
        c = np.zeros(8, dtype=np.complex128)
        c[0] = x
        return cls(c)

    @classmethod
    def basis(cls, i: int) -> "Bioctonion":
        if not 0 <= i < 8:
            raise AlgebraError(f"basis index {i} out of range 0..7")
        c = np.zeros(8, dtype=np.complex128)
        c[i] = 1.0
        return cls(c)

    @classmethod
    def from_octonion(cls, a: Octonion) -> "Bioctonion":
        return cls(a.coeffs.astype(np.complex128))

    def __add__(self, other):
        return Bioctonion(self.coeffs + _coeffs_of(other, Bioctonion))

    def __sub__(self, other):
        return Bioctonion(self.coeffs - _coeffs_of(other, Bioctonion))

    def __neg__(self):
        return Bioctonion(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Bioctonion):
            return Bioctonion(kernels.mul(self.coeffs, other.coeffs))
        if isinstance(other, numbers.Complex):
            return Bioctonion(self.coeffs * complex(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Complex):
            return Bioctonion(self.coeffs * complex(other))
        return NotImplemented

    def conjugate(self, mode: str = "octonion") -> "Bioctonion":
        """Octonionic (tilde), coefficientwise complex, or both; the two commute."""
        _check_mode(mode)
        c = self.coeffs.copy()
        if mode in ("octonion", "both"):
            c[1:] = -c[1:]
        if mode in ("complex", "both"):
            c = np.conj(c)
        return Bioctonion(c)

    def norm_form(self) -> complex:
        """N(a) = sum of squared (complex) coordinates; can vanish on nonzero a."""
        return complex(np.sum(self.coeffs * self.coeffs))

    def scalar_part(self) -> complex:
        return complex(self.coeffs[0])

    def max_norm(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def is_close(self, other, tol: float = 1e-12) -> bool:
        return float(np.max(np.abs(self.coeffs - _coeffs_of(other, Bioctonion)))) <= tol

    def to_list(self) -> list:
        return [[float(c.real), float(c.imag)] for c in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, Bioctonion):
            return NotImplemented
        return bool(np.array_equal(self.coeffs, other.coeffs))

    def __repr__(self):
        return f"Bioctonion({self.to_list()})"


def _coeffs_of(x, kind):
    if not isinstance(x, kind):
        raise AlgebraError(f"expected {kind.__name__}, got {type(x).__name__}")
    return x.coeffs


def _format_coeffs(c) -> str:
    parts = []
    for i, v in enumerate(c):
        if v == 0:
            continue
        unit = "" if i == 0 else f"e{i}"
        parts.append(f"{v:+g}{unit}")
    return "".join(parts) if parts else "0"


def _same_kind(*xs):
    kind = type(xs[0])
    if kind not in (Octonion, Bioctonion):
        raise AlgebraError(f"expected Octonion or Bioctonion, got {kind.__name__}")
    for x in xs[1:]:
        if type(x) is not kind:
            raise AlgebraError(f"mixed kinds: {kind.__name__} and {type(x).__name__}")


def multiply(a, b):
    """Product of two octonions or two bioctonions."""
    _same_kind(a, b)
    return a * b


def conjugate(a, mode: str = "octonion"):
    """Conjugation of an octonion or bioctonion; see CONJUGATION_MODES."""
    _same_kind(a)
    return a.conjugate(mode)


def norm_form(a):
    """Quadratic norm form: real for octonions, complex for bioctonions."""
    _same_kind(a)
    return a.norm_form()


def associator(a, b, c):
    """(ab)c - a(bc); identically zero on any associative subalgebra."""
    _same_kind(a, b, c)
    return (a * b) * c - a * (b * c)
