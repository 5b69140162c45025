"""Seeded random generation of elements, vectors and configurations.

All randomness flows from NumPy's PCG64 bit generator (O'Neill's PCG XSL RR
128/64), seeded with a single 64-bit integer, drawing uniform doubles in
[-1, 1].  Draw orders are fixed and documented per method so that a stream
can be reproduced from the seed alone.

Octonionic vectors destined for point construction must have associating
entries; they are drawn inside a uniformly random quaternionic subalgebra:
two orthonormal imaginary units u1, u2 (u2 Gram-Schmidt-orthogonalised
against u1) span {1, u1, u2, u1 u2}, and each component takes four uniform
coordinates in that basis.  This covers all positions reachable by the
automorphism group while keeping v v~ exactly idempotent up to rounding.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import AlgebraError
from .jordan_core import (
    GROUND_DIMS,
    HermitianElement,
    SpinFactorElement,
    canonical_ground,
)
from .matrix_model import GaugeConfiguration
from .projective import ProjectivePoint, point_from_vector

#: seed used by the CLI when none is given
DEFAULT_SEED = 1729


class Sampler:
    """Deterministic element factory; one PCG64 stream per instance."""

    def __init__(self, seed: int = DEFAULT_SEED):
        self.seed = int(seed)
        self.rng = np.random.Generator(np.random.PCG64(self.seed))

    def _uniform(self, *shape):
        return self.rng.uniform(-1.0, 1.0, shape)

    # -- Hermitian elements --------------------------------------------------

    def hermitian(self, n: int = 3, ground: str = "O", *, strict: bool = False) -> HermitianElement:
        """Random element: diagonal first, then upper entries row-major,
        each entry's active coefficients in index order (re before im for CO)."""
        ground = canonical_ground(ground)
        width = GROUND_DIMS[ground]
        x = HermitianElement.zeros(n, ground)
        for i in range(n):
            x.data[i, i, 0] = self._uniform()
        for i in range(n):
            for j in range(i + 1, n):
                coeffs = self._uniform(width)
                if ground == "CO":
                    coeffs = coeffs + 1j * self._uniform(width)
                x.data[i, j, :width] = coeffs
                x.data[j, i, :width] = coeffs
                x.data[j, i, 1:width] = -x.data[j, i, 1:width]
        if ground == "CO" and not strict:
            x.data[np.arange(n), np.arange(n), 0] = x.data[np.arange(n), np.arange(n), 0] \
                + 1j * self._uniform(n)
        return HermitianElement(ground, x.data, strict=strict)

    def hermitian_batch(self, count: int, n: int = 3, ground: str = "O",
                        *, strict: bool = False) -> np.ndarray:
        """(count, n, n, 8) coefficient array of random elements.

        Block draw order: all diagonals, then per upper slot (row-major) all
        real coefficient blocks, then the imaginary blocks for CO.
        """
        ground = canonical_ground(ground)
        width = GROUND_DIMS[ground]
        dtype = np.complex128 if ground == "CO" else np.float64
        data = np.zeros((count, n, n, 8), dtype=dtype)
        idx = np.arange(n)
        data[:, idx, idx, 0] = self._uniform(count, n)
        for i in range(n):
            for j in range(i + 1, n):
                coeffs = self._uniform(count, width).astype(dtype)
                if ground == "CO":
                    coeffs = coeffs + 1j * self._uniform(count, width)
                data[:, i, j, :width] = coeffs
                data[:, j, i, :width] = coeffs
                data[:, j, i, 1:width] = -data[:, j, i, 1:width]
        if ground == "CO" and not strict:
            data[:, idx, idx, 0] = data[:, idx, idx, 0] + 1j * self._uniform(count, n)
        return data

    # -- vectors and points ---------------------------------------------------

    def _imaginary_unit(self, orthogonal_to: np.ndarray | None = None) -> np.ndarray:
        while True:
            u = np.zeros(8)
            u[1:] = self._uniform(7)
            if orthogonal_to is not None:
                u -= (u @ orthogonal_to) * orthogonal_to
            norm = float(np.linalg.norm(u))
            if norm > 0.1:
                return u / norm

    def quaternion_basis(self) -> np.ndarray:
        """Orthonormal basis {1, u1, u2, u1 u2} of a random quaternion subalgebra."""
        u1 = self._imaginary_unit()
        u2 = self._imaginary_unit(orthogonal_to=u1)
        u3 = kernels.mul(u1, u2)
        return np.stack([np.eye(8)[0], u1, u2, u3])

    def vector(self, length: int = 3, ground: str = "O") -> np.ndarray:
        """(length, 8) coefficient vector suitable for point construction.

        Octonionic vectors of length 3 are drawn in a random quaternionic
        subalgebra so their entries associate; shorter or associative-ground
        vectors take plain uniform coefficients.  Redrawn while the norm
        form stays below 0.01.
        """
        ground = canonical_ground(ground)
        width = GROUND_DIMS[ground]
        while True:
            if ground == "O" and length >= 3:
                basis = self.quaternion_basis()
                arr = self._uniform(length, 4) @ basis
            else:
                arr = np.zeros((length, 8))
                arr[:, :width] = self._uniform(length, width)
            if float(np.sum(arr * arr)) > 1e-2:
                return arr

    def point(self, ground: str = "O", length: int = 3) -> ProjectivePoint:
        return point_from_vector(self.vector(length, ground), ground)

    def nonassociating_vector(self) -> np.ndarray:
        """(3, 8) octonionic vector whose entries have associator norm > 0.01."""
        from .division_algebras import Octonion, associator

        while True:
            arr = self._uniform(3, 8)
            gap = associator(Octonion(arr[0]), Octonion(arr[1]), Octonion(arr[2]))
            if gap.max_norm() > 1e-2:
                return arr

    # -- other kinds -----------------------------------------------------------

    def spin_factor(self, dim: int = 9) -> SpinFactorElement:
        """Space part first (dim uniforms), then the time scalar."""
        v = self._uniform(dim)
        return SpinFactorElement(v, self._uniform())

    def gauge_configuration(self, dim: int = 3, ground: str = "O", n: int = 3,
                            coupling: float = 1.0, *, strict: bool = False) -> GaugeConfiguration:
        return GaugeConfiguration([self.hermitian(n, ground, strict=strict) for _ in range(dim)],
                                  coupling)


def random_element(kind: str, ground: str = "O", seed: int = DEFAULT_SEED, *,
                   n: int = 3, dim: int = 3, strict: bool = False):
    """One-shot seeded generation for the CLI: hermitian, point, spin or config."""
    sampler = Sampler(seed)
    kind = kind.lower()
    if kind == "hermitian":
        return sampler.hermitian(n, ground, strict=strict)
    if kind == "point":
        return sampler.point(ground, length=n)
    if kind in ("config", "configuration"):
        return sampler.gauge_configuration(dim, ground, n, strict=strict)
    if kind == "spin":
        return sampler.spin_factor(n)
    raise AlgebraError(f"unknown random kind {kind!r}; "
                       "expected hermitian, point, config or spin")
