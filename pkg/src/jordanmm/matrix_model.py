"""Cubic matrix-model actions, the triality cycle, and the 9+1 split.

Configurations are tuples of 3x3 Hermitian elements indexed by a gauge
algebra with totally antisymmetric structure constants f_ijk.  The cubic
action contracts f against the trace trilinear form with the slots twisted
by the order-3 cycle map; the bioctonionic variant uses the polarized cubic
form with the gauge indices antisymmetrised at unit weight (1/3!).

The cycle map rho relabels rows and columns by the 3-cycle (1 2 3); it is a
Jordan automorphism, so traces and determinants survive it unchanged.
"""

from __future__ import annotations

import itertools
import warnings

import numpy as np

from .errors import AlgebraError, ValidationError
from .jordan_core import (
    HermitianElement,
    SpinFactorElement,
    cubic_form,
    peel,
    trilinear_form,
    unpeel,
)
from .projective import h2_determinant

_PERMS = tuple(zip(itertools.permutations((0, 1, 2)), (1.0, -1.0, -1.0, 1.0, 1.0, -1.0)))

_CYCLE = np.array([1, 2, 0])


def triality_cycle(x: HermitianElement, power: int = 1) -> HermitianElement:
    """Cyclic relabeling of a 3x3 element; power 1 or 2, with cycle**3 = id.

    Diagonal (a1, a2, a3) -> (a2, a3, a1) and off-diagonal slots carried
    along by the same row/column permutation.
    """
    if x.n != 3:
        raise AlgebraError(f"the cycle map acts on 3x3 elements, got n = {x.n}")
    if power not in (1, 2):
        raise AlgebraError(f"power must be 1 or 2, got {power}")
    data = x.data
    for _ in range(power):
        data = data[_CYCLE][:, _CYCLE]
    return HermitianElement(x.ground, data)


class GaugeAlgebra:
    """Totally antisymmetric structure constants f_ijk on indices 0..dim-1."""

    __slots__ = ("dim", "f")

    def __init__(self, f, *, jacobi_tol: float = 1e-10):
        f = np.asarray(f, dtype=np.float64)
        if f.ndim != 3 or len(set(f.shape)) != 1:
            raise ValidationError(f"structure constants must be (dim, dim, dim), got {f.shape}")
        self.dim = f.shape[0]
        for axes in ((1, 0, 2), (0, 2, 1)):
            if not np.array_equal(f, -np.transpose(f, axes)):
                raise ValidationError("structure constants are not totally antisymmetric")
        self.f = f
        residual = self._jacobi_residual()
        if residual > jacobi_tol:
            warnings.warn(f"structure constants violate the Jacobi identity "
                          f"(residual {residual:.3e})", stacklevel=2)

    def _jacobi_residual(self) -> float:
        f = self.f
        cyc = (np.einsum("ijm,mkl->ijkl", f, f)
               + np.einsum("jkm,mil->ijkl", f, f)
               + np.einsum("kim,mjl->ijkl", f, f))
        return float(np.max(np.abs(cyc)))

    @classmethod
    def su2(cls) -> "GaugeAlgebra":
        """The default dim-3 algebra with f_ijk the Levi-Civita symbol."""
        f = np.zeros((3, 3, 3))
        for (i, j, k), sgn in _PERMS:
            f[i, j, k] = sgn
        return cls(f)

    @classmethod
    def from_entries(cls, dim: int, entries) -> "GaugeAlgebra":
        """Build from 1-indexed generators [i, j, k, value] with i < j < k."""
        f = np.zeros((dim, dim, dim))
        for row in entries:
            if len(row) != 4:
                raise ValidationError(f"structure entry must be [i, j, k, value], got {row!r}")
            i, j, k = (int(v) - 1 for v in row[:3])
            value = float(row[3])
            if not 0 <= i < j < k < dim:
                raise ValidationError(
                    f"structure entry indices must satisfy 1 <= i < j < k <= dim, got {row!r}")
            for (a, b, c), sgn in _PERMS:
                trip = (i, j, k)
                f[trip[a], trip[b], trip[c]] = sgn * value
        return cls(f)

    def generators(self) -> list:
        """The i < j < k entries with nonzero value, 1-indexed."""
        out = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    if self.f[i, j, k] != 0.0:
                        out.append([i + 1, j + 1, k + 1, float(self.f[i, j, k])])
        return out

    def to_dict(self) -> dict:
        return {"dim": self.dim, "entries": self.generators()}


class GaugeConfiguration:
    """Gauge-indexed tuple of 3x3 Hermitian elements with a coupling constant."""

    __slots__ = ("elements", "coupling")

    def __init__(self, elements, coupling: float = 1.0):
        elements = list(elements)
        if not elements:
            raise ValidationError("configuration needs at least one element")
        first = elements[0]
        for x in elements:
            if not isinstance(x, HermitianElement):
                raise ValidationError(f"expected HermitianElement, got {type(x).__name__}")
            if x.n != first.n or x.ground != first.ground:
                raise ValidationError("configuration elements must share size and ground")
        self.elements = elements
        self.coupling = float(coupling)

    @property
    def dim(self) -> int:
        return len(self.elements)

    @property
    def ground(self) -> str:
        return self.elements[0].ground

    def to_dict(self) -> dict:
        return {"coupling": self.coupling, "elements": [x.to_dict() for x in self.elements]}


def _check_action_inputs(cfg: GaugeConfiguration, algebra: GaugeAlgebra, ground: str) -> None:
    if cfg.ground != ground:
        raise AlgebraError(f"this action needs ground {ground} elements, got {cfg.ground}")
    if cfg.elements[0].n != 3:
        raise AlgebraError("actions are defined for 3x3 elements")
    if cfg.dim != algebra.dim:
        raise AlgebraError(f"configuration dim {cfg.dim} does not match algebra dim {algebra.dim}")


def _antisymmetrized_sum(elements, algebra: GaugeAlgebra, form) -> float | complex:
    """sum over i<j<k of f_ijk * sum_perms sgn * form(X^a, rho X^b, rho^2 X^c)."""
    rho1 = [triality_cycle(x, 1) for x in elements]
    rho2 = [triality_cycle(x, 2) for x in elements]
    total = 0.0
    f = algebra.f
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            for k in range(j + 1, algebra.dim):
                if f[i, j, k] == 0.0:
                    continue
                bracket = 0.0
                for perm, sgn in _PERMS:
                    a, b, c = ((i, j, k)[p] for p in perm)
                    bracket += sgn * form(elements[a], rho1[b], rho2[c])
                total += f[i, j, k] * bracket
    return total


def smolin_action(cfg: GaugeConfiguration, algebra: GaugeAlgebra | None = None) -> float:
    """Cubic action k/(4 pi) f_ijk t(X^i, rho X^j, rho^2 X^k) over h3(O)."""
    algebra = algebra or GaugeAlgebra.su2()
    _check_action_inputs(cfg, algebra, "O")
    total = _antisymmetrized_sum(cfg.elements, algebra, trilinear_form)
    return cfg.coupling / (4.0 * np.pi) * float(total)


def ohwashi_action(cfg: GaugeConfiguration, algebra: GaugeAlgebra | None = None, *,
                   paper_strict: bool = False, tol: float = 1e-9) -> float:
    """Antisymmetrised cubic-form action f_ijk c(W^[i, rho W^j, rho^2 W^k]) over h3(CO).

    The gauge bracket carries unit weight (1/3!), so the value equals the
    plain f-contraction when f is antisymmetric.  The complex intermediate
    is reduced to its real part; under ``paper_strict`` an imaginary residue
    above ``tol`` (relative) is an error.
    """
    algebra = algebra or GaugeAlgebra.su2()
    _check_action_inputs(cfg, algebra, "CO")
    total = complex(_antisymmetrized_sum(cfg.elements, algebra, cubic_form))
    if paper_strict:
        residue = abs(total.imag)
        if residue > tol * max(1.0, abs(total)):
            raise AlgebraError(
                f"action has imaginary residue {residue:.3e} beyond strict tolerance")
    return total.real


def ohwashi_action_value(cfg: GaugeConfiguration, algebra: GaugeAlgebra | None = None) -> complex:
    """The complex value of the antisymmetrised cubic-form action."""
    algebra = algebra or GaugeAlgebra.su2()
    _check_action_inputs(cfg, algebra, "CO")
    return complex(_antisymmetrized_sum(cfg.elements, algebra, cubic_form))


# ---------------------------------------------------------------------------
# 9+1-dimensional decomposition

def bfss_split(x: HermitianElement):
    """Split a 3x3 octonionic element into (2x2 block, corner scalar, spinor pair).

    The spinor payload is the pair of octonions in the last column, carried
    as data; bfss_unsplit reassembles exactly.
    """
    if x.ground != "O":
        raise AlgebraError(f"the 9+1 split needs ground O, got {x.ground}")
    if x.n != 3:
        raise AlgebraError(f"the 9+1 split acts on 3x3 elements, got n = {x.n}")
    corner, block, psi = peel(x)
    return block, corner, (psi[0], psi[1])


def bfss_unsplit(block: HermitianElement, corner: float, theta) -> HermitianElement:
    """Inverse of bfss_split."""
    if block.ground != "O" or block.n != 2:
        raise AlgebraError("expected a 2x2 octonionic block")
    return unpeel(corner, block, list(theta))


def minkowski_coordinates(x: HermitianElement):
    """Map a 2x2 octonionic element to 9+1-dimensional coordinates.

    Returns (t, space, form): time t = (alpha + beta)/2, the nine spatial
    coordinates (eight octonion coefficients of the off-diagonal entry plus
    (alpha - beta)/2), and the quadratic form value det = t^2 - |space|^2.
    """
    if x.ground != "O":
        raise AlgebraError(f"Minkowski coordinates need ground O, got {x.ground}")
    if x.n != 2:
        raise AlgebraError(f"Minkowski coordinates act on 2x2 elements, got n = {x.n}")
    alpha = float(x.data[0, 0, 0])
    beta = float(x.data[1, 1, 0])
    t = 0.5 * (alpha + beta)
    space = np.concatenate([x.data[0, 1], [0.5 * (alpha - beta)]])
    return t, space, float(h2_determinant(x))


def to_spin_factor(x: HermitianElement) -> SpinFactorElement:
    """The spin-factor element (space, t) carrying the same quadratic form."""
    t, space, _ = minkowski_coordinates(x)
    return SpinFactorElement(space, t)
