"""Projective points, lines, incidence and lightcone predicates.

Points of the projective plane over a ground algebra are trace-one
idempotents p (p o p = p); lines are trace-two idempotents, equivalently
complements I - p of points.  A point is on a line when p o l = p, i.e.
p o (I - l) = 0, which is the annihilation condition taken against the
line's dual point.  The historical form "p1 o p2 = 0 with p2 the line
itself" is exposed as the "paper-literal" convention for comparison; with
it, no line would pass through two orthogonal points, so "containment" is
the default everywhere.

Octonionic points come from vectors whose three entries associate:
p = v v~ / N(v) is idempotent exactly when ((v1 v2) v3 - v1 (v2 v3)) = 0.
"""

from __future__ import annotations

import numpy as np

from .division_algebras import Bioctonion, Octonion, associator
from .errors import AlgebraError, GeometryError
from .jordan_core import (
    GROUND_DIMS,
    HermitianElement,
    determinant,
    freudenthal_product,
    trace_of_product,
    canonical_ground,
)
from . import kernels

INCIDENCE_CONVENTIONS = ("containment", "paper-literal")

#: default residual tolerance for the point/line invariants
POINT_TOL = 1e-10

#: squared trace distance below which two points count as coincident
COINCIDENCE_TOL = 1e-16


def _projection_residuals(x: HermitianElement, rank: int) -> dict:
    square = kernels.jordan(x.data, x.data)
    idem = float(np.max(np.abs(square - x.data)))
    tr = abs(x.trace() - rank)
    return {"idempotence": idem, "trace": float(tr)}


class ProjectivePoint:
    """Trace-one projection; a point of the projective space."""

    __slots__ = ("element",)

    def __init__(self, element: HermitianElement, tol: float = POINT_TOL):
        res = _projection_residuals(element, 1)
        bad = {k: v for k, v in res.items() if v > tol}
        if bad:
            raise GeometryError(f"not a trace-one projection: residuals {bad}")
        self.element = element

    @property
    def n(self):
        return self.element.n

    @property
    def ground(self):
        return self.element.ground

    def dual(self) -> "ProjectiveLine":
        """Complementary trace-two projection."""
        return ProjectiveLine(HermitianElement.identity(self.n, self.ground) - self.element)

    def is_close(self, other: "ProjectivePoint", tol: float = 1e-8) -> bool:
        return self.element.is_close(other.element, tol)

    def to_dict(self) -> dict:
        return {"kind": "point", **self.element.to_dict()}

    def __repr__(self):
        return f"ProjectivePoint(n={self.n}, ground={self.ground!r})"


class ProjectiveLine:
    """Trace-two projection; a line of the projective plane."""

    __slots__ = ("element",)

    def __init__(self, element: HermitianElement, tol: float = POINT_TOL):
        res = _projection_residuals(element, 2)
        bad = {k: v for k, v in res.items() if v > tol}
        if bad:
            raise GeometryError(f"not a trace-two projection: residuals {bad}")
        self.element = element

    @property
    def n(self):
        return self.element.n

    @property
    def ground(self):
        return self.element.ground

    def dual(self) -> ProjectivePoint:
        """The point I - l; inverse of ProjectivePoint.dual."""
        return ProjectivePoint(HermitianElement.identity(self.n, self.ground) - self.element)

    def is_close(self, other: "ProjectiveLine", tol: float = 1e-8) -> bool:
        return self.element.is_close(other.element, tol)

    def to_dict(self) -> dict:
        return {"kind": "line", **self.element.to_dict()}

    def __repr__(self):
        return f"ProjectiveLine(n={self.n}, ground={self.ground!r})"


def dual(x):
    """Point <-> line duality, x -> I - x; an involution."""
    if isinstance(x, (ProjectivePoint, ProjectiveLine)):
        return x.dual()
    raise AlgebraError(f"dual expects a ProjectivePoint or ProjectiveLine, got {type(x).__name__}")


def _vector_coeffs(v, ground: str) -> np.ndarray:
    ground = canonical_ground(ground)
    entries = []
    for comp in v:
        if isinstance(comp, (Octonion, Bioctonion)):
            entries.append(comp.coeffs)
        else:
            c = np.asarray(comp)
            if c.ndim == 0:  # bare scalar component
                full = np.zeros(8, dtype=complex if ground == "CO" else float)
                full[0] = c
                c = full
            entries.append(c)
    arr = np.array(entries, dtype=np.complex128 if ground == "CO" else np.float64)
    if arr.ndim != 2 or arr.shape[1] != 8:
        raise GeometryError(f"vector components need 8 coefficients each, got shape {arr.shape}")
    width = GROUND_DIMS[ground]
    if width < 8 and arr.size and np.max(np.abs(arr[:, width:])) > 0:
        raise GeometryError(f"vector components lie outside ground {ground}")
    return arr


def point_from_vector(v, ground: str = "O", tol: float = POINT_TOL) -> ProjectivePoint:
    """Rank-one projection v v~ / N(v) from a nonzero coefficient vector.

    For three octonionic components the entries must associate; a violation
    is reported with the associator norm attached, since v v~ then fails to
    be idempotent.
    """
    ground = canonical_ground(ground)
    arr = _vector_coeffs(v, ground)
    m = arr.shape[0]
    if ground in ("O", "CO") and m > 3:
        raise GeometryError(f"octonionic vectors support length <= 3, got {m}")

    # tilde-conjugation norm: sum of (complex) squares; may vanish over CO
    norm = complex(np.sum(arr * arr)) if ground == "CO" else float(np.sum(arr * arr))
    if abs(norm) <= 1e-12 * max(1.0, float(np.max(np.abs(arr))) ** 2):
        raise GeometryError("cannot project a (norm-)zero vector to a point")

    if m == 3 and ground in ("O", "CO"):
        kind = Bioctonion if ground == "CO" else Octonion
        comps = [kind(arr[i]) for i in range(3)]
        gap = associator(*comps)
        scale = max(1.0, float(np.max(np.abs(arr))) ** 3)
        assoc_norm = gap.max_norm()
        if assoc_norm > 1e-9 * scale:
            raise GeometryError(
                f"vector entries do not associate (associator norm {assoc_norm:.3e}); "
                "v v~ is not idempotent", associator_norm=assoc_norm)

    conj = arr.copy()
    conj[:, 1:] = -conj[:, 1:]
    # p[i, j] = v_i * tilde(v_j) / N(v)
    left = np.repeat(arr, m, axis=0)
    right = np.tile(conj, (m, 1))
    prods = kernels.mul_batch(left, right).reshape(m, m, 8) / norm
    element = HermitianElement(ground, prods)
    try:
        return ProjectivePoint(element, tol=tol)
    except GeometryError as exc:
        raise GeometryError(f"projection from vector failed validation: {exc}") from exc


def incident(point: ProjectivePoint, line: ProjectiveLine, tol: float = 1e-8,
             convention: str = "containment") -> bool:
    """Whether the point lies on the line.

    "containment" tests p o l = p; "paper-literal" tests p o l = 0 against
    the rank-two projection itself (see module docstring).
    """
    if convention not in INCIDENCE_CONVENTIONS:
        raise AlgebraError(f"unknown incidence convention {convention!r}")
    return incidence_residual(point, line, convention) <= tol


def incidence_residual(point: ProjectivePoint, line: ProjectiveLine,
                       convention: str = "containment") -> float:
    point.element._check_compatible(line.element)
    prod = kernels.jordan(point.element.data, line.element.data)
    if convention == "paper-literal":
        return float(np.max(np.abs(prod)))
    return float(np.max(np.abs(prod - point.element.data)))


def join(p: ProjectivePoint, q: ProjectivePoint, tol: float = POINT_TOL) -> ProjectiveLine:
    """The unique line through two distinct points of a projective plane."""
    if p.n != 3:
        raise AlgebraError("join is defined on the projective plane (n = 3)")
    w = freudenthal_product(p.element, q.element)
    tw = w.trace()
    if abs(tw) <= 1e-12:
        raise GeometryError("points coincide (or are too close) -- no unique joining line")
    r = w / tw
    return ProjectiveLine(HermitianElement.identity(3, p.ground) - r, tol=tol)


def meet(l1: ProjectiveLine, l2: ProjectiveLine, tol: float = POINT_TOL) -> ProjectivePoint:
    """The unique point on two distinct lines; dual construction of join."""
    if l1.n != 3:
        raise AlgebraError("meet is defined on the projective plane (n = 3)")
    eye = HermitianElement.identity(3, l1.ground)
    w = freudenthal_product(eye - l1.element, eye - l2.element)
    tw = w.trace()
    if abs(tw) <= 1e-12:
        raise GeometryError("lines coincide (or are too close) -- no unique meet point")
    return ProjectivePoint(w / tw, tol=tol)


def transition_probability(p: ProjectivePoint, q: ProjectivePoint) -> float:
    """tr(p o q); symmetric, and within [0, 1] over division-algebra grounds."""
    value = trace_of_product(p.element, q.element)
    return float(np.real(value)) if isinstance(value, complex) else float(value)


def is_lightlike(x: HermitianElement, tol: float = 1e-8) -> bool:
    """Nonzero element on the lightcone.

    Rank <= 1 test: for n = 3 the adjugate x * x must vanish; for n = 2 the
    determinant alpha beta - N(phi) must vanish.
    """
    scale = x.max_norm()
    if scale == 0.0:
        return False
    if x.n == 3:
        residual = freudenthal_product(x, x).max_norm()
    elif x.n == 2:
        residual = abs(h2_determinant(x))
    else:
        raise AlgebraError(f"lightcone predicate supports n in (2, 3), got n = {x.n}")
    return residual <= tol * scale * scale


def h2_determinant(x: HermitianElement):
    """Determinant of a 2x2 element: product of diagonal minus entry norm."""
    if x.n != 2:
        raise AlgebraError(f"expected a 2x2 element, got n = {x.n}")
    alpha = x.data[0, 0, 0]
    beta = x.data[1, 1, 0]
    phi = x.data[0, 1]
    value = alpha * beta - np.sum(phi * phi)
    return complex(value) if x.ground == "CO" else float(value)
