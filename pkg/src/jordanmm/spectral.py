"""Eigenvalues and eigenprojections of 3x3 Hermitian elements.

The eigenvalue problem x o p = lambda p is solved through the characteristic
cubic lambda^3 - tr(x) lambda^2 + sigma(x) lambda - det(x) = 0, whose roots
are all real for formally real grounds.  Projections come from Lagrange
interpolation in the (associative) subalgebra generated by x:

    p_i = (x - l_j I) o (x - l_k I) / ((l_i - l_j)(l_i - l_k))

with a merged rank-2 (or rank-3) projector when eigenvalues cluster.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import AlgebraError, SpectralError
from .jordan_core import (
    HermitianElement,
    characteristic_coefficients,
    jordan_product,
)

#: eigenvalues closer than this (times max(1, |lambda|_max)) share a projector
CLUSTER_TOL = 1e-7


def solve_characteristic_cubic(tr: float, sigma: float, det: float,
                               tol: float = 1e-9) -> np.ndarray:
    """All-real roots of l^3 - tr l^2 + sigma l - det, ascending.

    Uses the trigonometric form on the depressed cubic.  A discriminant that
    is negative within ``tol`` (scaled) is clamped to the double-root branch;
    beyond that the input cannot come from a Hermitian element and a
    SpectralError is raised.
    """
    t, s, d = float(tr), float(sigma), float(det)
    if not (np.isfinite(t) and np.isfinite(s) and np.isfinite(d)):
        raise SpectralError("characteristic coefficients must be finite")
    scale = max(1.0, abs(t), abs(s) ** 0.5, abs(d) ** (1.0 / 3.0))

    p = s - t * t / 3.0
    q = -2.0 * t ** 3 / 27.0 + t * s / 3.0 - d
    disc = -4.0 * p ** 3 - 27.0 * q * q
    if disc < -tol * scale ** 6:
        raise SpectralError(
            f"complex roots: cubic discriminant {disc:.3e} below tolerance "
            f"{-tol * scale ** 6:.3e}")

    if p >= 0.0:
        # disc >= -tol forces p and q to the near-triple-root corner
        if p > tol * scale ** 2 or abs(q) > tol * scale ** 3:
            raise SpectralError("cubic has complex roots (positive depressed coefficient)")
        roots = np.full(3, t / 3.0)
    else:
        m = 2.0 * np.sqrt(-p / 3.0)
        arg = np.clip(3.0 * q / (p * m), -1.0, 1.0)
        theta = np.arccos(arg) / 3.0
        roots = m * np.cos(theta - 2.0 * np.pi * np.arange(3) / 3.0) + t / 3.0
    return np.sort(roots)


@dataclass
class SpectralFrame:
    """Eigenvalues with orthogonal projections summing to the identity.

    ``eigenvalues`` always has three entries (ascending, repeated per
    multiplicity); ``projections[c]`` has trace ``multiplicities[c]`` and
    belongs to the c-th cluster of eigenvalues.
    """

    eigenvalues: np.ndarray
    multiplicities: list = field(default_factory=list)
    projections: list = field(default_factory=list)

    def distinct_eigenvalues(self) -> np.ndarray:
        """One representative value per projection (cluster mean)."""
        out = []
        pos = 0
        for m in self.multiplicities:
            out.append(float(np.mean(self.eigenvalues[pos:pos + m])))
            pos += m
        return np.asarray(out)

    def reconstruct(self) -> HermitianElement:
        """Sum of eigenvalue times projection over the frame."""
        values = self.distinct_eigenvalues()
        total = values[0] * self.projections[0]
        for v, proj in zip(values[1:], self.projections[1:]):
            total = total + v * proj
        return total

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "multiplicities": [int(m) for m in self.multiplicities],
            "projections": [p.to_dict() for p in self.projections],
        }


def _cluster(roots: np.ndarray, threshold: float) -> list:
    groups = [[0]]
    for i in (1, 2):
        if roots[i] - roots[groups[-1][-1]] <= threshold:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def spectral_decompose(x: HermitianElement, *, cluster_tol: float = CLUSTER_TOL,
                       tol: float = 1e-9) -> SpectralFrame:
    """Spectral frame of a 3x3 element over R, C, H or O."""
    if x.ground == "CO":
        raise AlgebraError("spectral decomposition needs a formally real ground, not CO")
    if x.n != 3:
        raise AlgebraError(f"spectral decomposition is for 3x3 elements, got n = {x.n}")

    tr, sigma, det = characteristic_coefficients(x)
    roots = solve_characteristic_cubic(tr, sigma, det, tol=tol)
    threshold = cluster_tol * max(1.0, float(np.max(np.abs(roots))))
    groups = _cluster(roots, threshold)

    eye = HermitianElement.identity(3, x.ground)
    if len(groups) == 1:
        return SpectralFrame(roots, [3], [eye])

    x2 = jordan_product(x, x)
    if len(groups) == 3:
        projections = []
        for i in range(3):
            j, k = (set((0, 1, 2)) - {i})
            num = x2 + (-(roots[j] + roots[k])) * x + (roots[j] * roots[k]) * eye
            projections.append(num / ((roots[i] - roots[j]) * (roots[i] - roots[k])))
        return SpectralFrame(roots, [1, 1, 1], projections)

    # one pair merged: quadratic projector onto the simple eigenvalue,
    # complement onto the merged pair
    pair, single = (groups[0], groups[1]) if len(groups[0]) == 2 else (groups[1], groups[0])
    mu = float(np.mean(roots[pair]))
    nu = float(roots[single[0]])
    p_single = (x2 + (-2.0 * mu) * x + (mu * mu) * eye) / ((nu - mu) ** 2)
    p_pair = eye - p_single
    if single[0] < pair[0]:
        return SpectralFrame(roots, [1, 2], [p_single, p_pair])
    return SpectralFrame(roots, [2, 1], [p_pair, p_single])
