"""Randomised property-verification suites.

One suite per algebra module, one check per documented invariant.  Every
check derives its own child seed from the root seed, so reports are
byte-for-byte reproducible for a fixed seed, trial count and backend.
Residuals are normalised per trial (by the scale stated with the invariant)
before comparison against the check's tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .division_algebras import Bioctonion, Octonion, associator
from .errors import GeometryError
from .jordan_core import (
    HermitianElement,
    characteristic_coefficients,
    freudenthal_product,
    jordan_product,
    minkowski_inner,
    spin_product,
    trace_of_product,
    to_scalar_matrix,
)
from .matrix_model import (
    GaugeAlgebra,
    GaugeConfiguration,
    bfss_split,
    bfss_unsplit,
    minkowski_coordinates,
    ohwashi_action_value,
    smolin_action,
    to_spin_factor,
    triality_cycle,
)
from .projective import (
    dual,
    incidence_residual,
    is_lightlike,
    join,
    meet,
    point_from_vector,
)
from .sampling import DEFAULT_SEED, Sampler
from .spectral import spectral_decompose
from ._table import MUL_INDEX, MUL_SIGN

DIVISION_GROUNDS = ("R", "C", "H", "O")
ALL_GROUNDS = ("R", "C", "H", "O", "CO")


@dataclass
class CheckResult:
    name: str
    trials: int
    tolerance: float
    max_residual: float
    failures: int

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "trials": int(self.trials),
            "tolerance": float(self.tolerance),
            "max_residual": float(self.max_residual),
            "failures": int(self.failures),
            "passed": self.passed,
        }


def _result(name: str, tolerance: float, residuals) -> CheckResult:
    residuals = np.atleast_1d(np.asarray(residuals, dtype=np.float64))
    failures = int(np.count_nonzero(residuals > tolerance))
    worst = float(np.max(residuals)) if residuals.size else 0.0
    return CheckResult(name, residuals.size, tolerance, worst, failures)


def _child_sampler(seed: int, tag: int) -> Sampler:
    child = np.random.SeedSequence([int(seed), int(tag)]).generate_state(2, np.uint64)
    return Sampler(int(child[0]))


def _maxabs(arr: np.ndarray, axes) -> np.ndarray:
    return np.max(np.abs(arr), axis=axes)


# ---------------------------------------------------------------------------
# division-algebras

def _division_algebras(trials: int | None, seed: int, paper_strict: bool) -> list:
    checks = []
    n = trials or 10000

    sampler = _child_sampler(seed, 101)
    a = sampler._uniform(n, 8)
    b = sampler._uniform(n, 8)
    c = sampler._uniform(n, 8)

    ab = kernels.mul_batch(a, b)
    norm = lambda x: np.sum(x * x, axis=1)
    resid = np.abs(norm(ab) - norm(a) * norm(b)) / np.maximum(1.0, norm(a) * norm(b))
    checks.append(_result("norm-composition", 1e-12, resid))

    lhs = kernels.mul_batch(kernels.mul_batch(a, b), a)
    lhs = kernels.mul_batch(lhs, c)
    rhs = kernels.mul_batch(a, kernels.mul_batch(b, kernels.mul_batch(a, c)))
    scale = np.maximum(1.0, _maxabs(a, 1) ** 2 * _maxabs(b, 1) * _maxabs(c, 1))
    checks.append(_result("moufang", 1e-12, _maxabs(lhs - rhs, 1) / scale))

    m = trials or 1000
    assoc = lambda x, y, z: (kernels.mul_batch(kernels.mul_batch(x, y), z)
                             - kernels.mul_batch(x, kernels.mul_batch(y, z)))
    base = assoc(a[:m], b[:m], c[:m])
    scale = np.maximum(1.0, _maxabs(a[:m], 1) * _maxabs(b[:m], 1) * _maxabs(c[:m], 1))
    swaps = np.stack([
        _maxabs(base + assoc(b[:m], a[:m], c[:m]), 1),
        _maxabs(base + assoc(a[:m], c[:m], b[:m]), 1),
        _maxabs(assoc(a[:m], a[:m], b[:m]), 1),
        _maxabs(assoc(a[:m], b[:m], b[:m]), 1),
    ])
    checks.append(_result("associator-alternating", 1e-12, np.max(swaps, axis=0) / scale))

    sampler = _child_sampler(seed, 102)
    z = sampler._uniform(m, 8) + 1j * sampler._uniform(m, 8)
    tilde = lambda x: np.concatenate([x[:, :1], -x[:, 1:]], axis=1)
    resid = _maxabs(np.conj(tilde(z)) - tilde(np.conj(z)), 1)
    checks.append(_result("bioctonion-involutions-commute", 0.0, resid))

    quaternion_sign = np.array([
        [1, 1, 1, 1],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
        [1, 1, -1, -1],
    ])
    quaternion_index = np.array([
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ])
    exact = (np.array_equal(MUL_SIGN[:4, :4], quaternion_sign)
             and np.array_equal(MUL_INDEX[:4, :4], quaternion_index))
    checks.append(_result("quaternion-subtable", 0.0, [0.0 if exact else 1.0]))

    u = Bioctonion.from_scalar(1.0) + 1j * Bioctonion.basis(1)
    v = Bioctonion.from_scalar(1.0) - 1j * Bioctonion.basis(1)
    checks.append(_result("bioctonion-zero-divisor", 0.0, [(u * v).max_norm()]))
    return checks


# ---------------------------------------------------------------------------
# jordan-core

def _jordan_core(trials: int | None, seed: int, paper_strict: bool) -> list:
    checks = []
    n = trials or 10000

    for tag, ground in enumerate(ALL_GROUNDS):
        sampler = _child_sampler(seed, 201 + tag)
        a = sampler.hermitian_batch(n, 3, ground, strict=paper_strict)
        b = sampler.hermitian_batch(n, 3, ground, strict=paper_strict)
        a2 = kernels.jordan_batch(a, a)
        lhs = kernels.jordan_batch(a, kernels.jordan_batch(b, a2))
        rhs = kernels.jordan_batch(kernels.jordan_batch(a, b), a2)
        scale = np.maximum(1.0, np.maximum(_maxabs(a, (1, 2, 3)), _maxabs(b, (1, 2, 3)))) ** 3
        checks.append(_result(f"jordan-identity-{ground}", 1e-9,
                              _maxabs(lhs - rhs, (1, 2, 3)) / scale))
        if ground in ("O", "CO"):
            resid = _maxabs(kernels.jordan_batch(a, b) - kernels.jordan_batch(b, a), (1, 2, 3))
            checks.append(_result(f"commutativity-{ground}", 1e-12, resid))

    m = trials or 1000
    sampler = _child_sampler(seed, 211)
    a = sampler.hermitian_batch(m, 3, "O")
    a2 = kernels.jordan_batch(a, a)
    lhs = kernels.jordan_batch(a2, a2)
    rhs = kernels.jordan_batch(kernels.jordan_batch(a2, a), a)
    scale = np.maximum(1.0, _maxabs(a, (1, 2, 3))) ** 4
    checks.append(_result("power-associativity", 1e-9, _maxabs(lhs - rhs, (1, 2, 3)) / scale))

    sampler = _child_sampler(seed, 212)
    residuals = []
    for ground in DIVISION_GROUNDS:
        x = sampler.hermitian_batch(m, 3, ground)
        sq = kernels.jordan_batch(x, x)
        tr = np.real(np.trace(sq[..., 0], axis1=1, axis2=2))
        top = _maxabs(x, (1, 2, 3))
        # tr(a o a) is the squared Frobenius norm: nonnegative, zero only at zero
        residuals.append(np.maximum(0.0, top ** 2 - tr))
    zero = HermitianElement.zeros(3, "O")
    zero_tr = trace_of_product(zero, zero)
    residuals.append(np.array([abs(zero_tr)]))
    checks.append(_result("formal-reality", 1e-12, np.concatenate(residuals)))

    sampler = _child_sampler(seed, 213)
    a = sampler.hermitian_batch(m, 3, "O")
    b = sampler.hermitian_batch(m, 3, "O")
    c = sampler.hermitian_batch(m, 3, "O")
    tr_of = lambda arr: np.trace(arr[..., 0], axis1=1, axis2=2)
    lhs = tr_of(kernels.jordan_batch(kernels.jordan_batch(a, b), c))
    rhs = tr_of(kernels.jordan_batch(a, kernels.jordan_batch(b, c)))
    scale = np.maximum(1.0, _maxabs(a, (1, 2, 3)) * _maxabs(b, (1, 2, 3)) * _maxabs(c, (1, 2, 3)))
    checks.append(_result("trace-form-associativity", 1e-10, np.abs(lhs - rhs) / scale))

    sampler = _child_sampler(seed, 214)
    residuals = []
    for _ in range(min(m, 200)):
        ints = sampler.rng.integers(-3, 4, 3)
        x = HermitianElement.diagonal(ints.astype(float), "O")
        tr, sigma, det = characteristic_coefficients(x)
        lam = np.sort(ints)
        e1, e2, e3 = lam.sum(), lam[0] * lam[1] + lam[0] * lam[2] + lam[1] * lam[2], lam.prod()
        residuals.append(max(abs(tr - e1), abs(sigma - e2), abs(det - e3)))
    checks.append(_result("symmetric-functions-diagonal", 0.0, residuals))

    sampler = _child_sampler(seed, 215)
    per_dim = max(1, (trials or 1600) // 8)
    residuals = []
    for dim in range(2, 10):
        for _ in range(per_dim):
            s = sampler.spin_factor(dim)
            t = sampler.spin_factor(dim)
            s2 = spin_product(s, s)
            lhs = spin_product(s, spin_product(t, s2))
            rhs = spin_product(spin_product(s, t), s2)
            diff = lhs - rhs
            top = max(1.0, float(np.max(np.abs(s.v))), abs(s.alpha),
                      float(np.max(np.abs(t.v))), abs(t.alpha))
            residuals.append(max(float(np.max(np.abs(diff.v))), abs(diff.alpha)) / top ** 3)
    checks.append(_result("spin-factor-jordan-identity", 1e-9, residuals))
    return checks


# ---------------------------------------------------------------------------
# spectral

def _spectral(trials: int | None, seed: int, paper_strict: bool) -> list:
    n = trials or 1000
    sampler = _child_sampler(seed, 301)

    vieta, eigen_eq, orth, complete, recon, light = [], [], [], [], [], []
    for _ in range(n):
        x = sampler.hermitian(3, "O")
        frame = spectral_decompose(x)
        tr, sigma, det = characteristic_coefficients(x)
        lam = frame.eigenvalues
        top = max(1.0, float(np.max(np.abs(lam))))
        vieta.append(max(
            abs(lam.sum() - tr) / max(1.0, abs(tr)),
            abs(lam[0] * lam[1] + lam[0] * lam[2] + lam[1] * lam[2] - sigma) / max(1.0, abs(sigma)),
            abs(lam.prod() - det) / max(1.0, abs(det))))
        scale = max(1.0, x.max_norm())
        values = frame.distinct_eigenvalues()
        for value, proj in zip(values, frame.projections):
            eigen_eq.append(float(np.max(np.abs(
                jordan_product(x, proj).data - value * proj.data))) / scale)
        for i in range(len(frame.projections)):
            for j in range(i + 1, len(frame.projections)):
                orth.append(float(np.max(np.abs(
                    jordan_product(frame.projections[i], frame.projections[j]).data))))
        total = frame.projections[0]
        for proj in frame.projections[1:]:
            total = total + proj
        complete.append(float(np.max(np.abs(
            total.data - HermitianElement.identity(3, "O").data))))
        recon.append(float(np.max(np.abs(frame.reconstruct().data - x.data))) / scale)
        for mult, proj in zip(frame.multiplicities, frame.projections):
            if mult == 1:
                light.append(freudenthal_product(proj, proj).max_norm())

    checks = [
        _result("vieta-consistency", 1e-8, vieta),
        _result("eigen-equation", 1e-8, eigen_eq),
        _result("frame-orthogonality", 1e-8, orth),
        _result("frame-completeness", 1e-8, complete),
        _result("reconstruction", 1e-8, recon),
        _result("rank-one-lightlike", 1e-10, light),
    ]

    for tag, ground in enumerate(("R", "C")):
        sampler = _child_sampler(seed, 302 + tag)
        resid = []
        for _ in range(n):
            x = sampler.hermitian(3, ground)
            frame = spectral_decompose(x)
            oracle = np.linalg.eigvalsh(to_scalar_matrix(x))
            resid.append(float(np.max(np.abs(frame.eigenvalues - oracle)))
                         / max(1.0, float(np.max(np.abs(oracle)))))
        checks.append(_result(f"eigensolver-regression-{ground}", 1e-9, resid))
    return checks


# ---------------------------------------------------------------------------
# projective

def _distinct_points(sampler: Sampler, ground: str, count: int) -> list:
    points = []
    while len(points) < count:
        p = sampler.point(ground)
        if all(not p.is_close(q, 1e-6) for q in points):
            points.append(p)
    return points


def _projective(trials: int | None, seed: int, paper_strict: bool) -> list:
    n = trials or 1000
    checks = []

    join_res, meet_res, dual_res, triangle_res = [], [], [], []
    invariants, normalization = [], []
    for tag, ground in enumerate(DIVISION_GROUNDS):
        sampler = _child_sampler(seed, 401 + tag)
        for _ in range(n):
            p, q, r = _distinct_points(sampler, ground, 3)
            line_pq = join(p, q)
            join_res.append(max(incidence_residual(p, line_pq),
                                incidence_residual(q, line_pq)))
            line_pr = join(p, r)
            point = meet(line_pq, line_pr)
            meet_res.append(max(incidence_residual(point, line_pq),
                                incidence_residual(point, line_pr)))
            triangle_res.append(float(np.max(np.abs(point.element.data - p.element.data))))
            via_dual = dual(join(dual(line_pq), dual(line_pr)))
            dual_res.append(float(np.max(np.abs(via_dual.element.data - point.element.data))))

            x = p.element
            invariants.append(max(
                float(np.max(np.abs(jordan_product(x, x).data - x.data))),
                abs(x.trace() - 1.0),
                abs(characteristic_coefficients(x)[2]),
                freudenthal_product(x, x).max_norm()))

            v = sampler.vector(3, ground)
            factor = sampler._uniform() * 2.0 + 3.0
            p1 = point_from_vector(v, ground)
            p2 = point_from_vector(factor * v, ground)
            normalization.append(float(np.max(np.abs(p1.element.data - p2.element.data))))

    checks.append(_result("join-incidence", 1e-8, join_res))
    checks.append(_result("meet-incidence", 1e-8, meet_res))
    checks.append(_result("meet-of-joins-recovers-point", 1e-8, triangle_res))
    checks.append(_result("join-meet-duality", 1e-9, dual_res))
    checks.append(_result("point-invariants", 1e-10, invariants))
    checks.append(_result("normalization-invariance", 1e-12, normalization))

    sampler = _child_sampler(seed, 411)
    rejects = []
    for _ in range(n):
        v = sampler.nonassociating_vector()
        try:
            point_from_vector(v, "O")
            rejects.append(1.0)  # false accept
            continue
        except GeometryError:
            pass
        # the raw projection really does fail idempotence
        arr = v
        conj = arr.copy()
        conj[:, 1:] = -conj[:, 1:]
        left = np.repeat(arr, 3, axis=0)
        right = np.tile(conj, (3, 1))
        raw = kernels.mul_batch(left, right).reshape(3, 3, 8) / float(np.sum(arr * arr))
        raw_sq = kernels.jordan(raw, raw)
        gap = float(np.max(np.abs(raw_sq - raw)))
        rejects.append(0.0 if gap > 1e-8 else 1.0)
    checks.append(_result("nonassociative-rejection", 0.0, rejects))

    sampler = _child_sampler(seed, 412)
    link, agreement = [], []
    for _ in range(n):
        x = sampler.hermitian(2, "O")
        s = to_spin_factor(x)
        det = minkowski_coordinates(x)[2]
        scale = max(1.0, x.max_norm()) ** 2
        link.append(abs(det + minkowski_inner(s, s)) / scale)
        # exactly lightlike construction: alpha beta = N(phi) with beta = 1
        phi = sampler._uniform(8)
        data = np.zeros((2, 2, 8))
        data[0, 0, 0] = float(phi @ phi)
        data[1, 1, 0] = 1.0
        data[0, 1] = phi
        data[1, 0] = phi
        data[1, 0, 1:] = -phi[1:]
        y = HermitianElement("O", data)
        sy = to_spin_factor(y)
        ok = is_lightlike(y, 1e-10) and abs(minkowski_inner(sy, sy)) <= 1e-10 * max(1.0, y.max_norm()) ** 2
        agreement.append(0.0 if ok else 1.0)
    checks.append(_result("lightcone-h2-spin-link", 1e-10, link))
    checks.append(_result("lightcone-h2-agreement", 0.0, agreement))
    return checks


# ---------------------------------------------------------------------------
# matrix-model

def _matrix_model(trials: int | None, seed: int, paper_strict: bool) -> list:
    checks = []
    algebra = GaugeAlgebra.su2()

    n_configs = max(1, (trials or 200) // 4)
    sampler = _child_sampler(seed, 501)
    equal_slot, scaling = [], []
    for _ in range(n_configs):
        xs = [sampler.hermitian(3, "O") for _ in range(3)]
        xs = [x / max(x.max_norm(), 1e-3) for x in xs]
        ws = [sampler.hermitian(3, "CO") for _ in range(3)]
        ws = [w / max(w.max_norm(), 1e-3) for w in ws]
        for keep, copy_to in ((0, 1), (0, 2), (1, 2)):
            degenerate = list(xs)
            degenerate[copy_to] = degenerate[keep]
            equal_slot.append(abs(smolin_action(GaugeConfiguration(degenerate), algebra)))
            degenerate_w = list(ws)
            degenerate_w[copy_to] = degenerate_w[keep]
            equal_slot.append(abs(ohwashi_action_value(GaugeConfiguration(degenerate_w), algebra)))

        factor = float(sampler._uniform()) + 2.0
        base = smolin_action(GaugeConfiguration(xs), algebra)
        scaled = smolin_action(GaugeConfiguration([factor * x for x in xs]), algebra)
        scaling.append(abs(scaled - factor ** 3 * base) / max(1.0, abs(factor ** 3 * base)))
        base_w = ohwashi_action_value(GaugeConfiguration(ws), algebra)
        scaled_w = ohwashi_action_value(GaugeConfiguration([factor * w for w in ws]), algebra)
        scaling.append(abs(scaled_w - factor ** 3 * base_w) / max(1.0, abs(factor ** 3 * base_w)))
    checks.append(_result("equal-slot-vanishing", 1e-12, equal_slot))
    checks.append(_result("cubic-scaling", 1e-9, scaling))

    n = trials or 1000
    sampler = _child_sampler(seed, 502)
    auto, order3, trace_det = [], [], []
    for _ in range(n):
        a = sampler.hermitian(3, "O")
        b = sampler.hermitian(3, "O")
        lhs = triality_cycle(jordan_product(a, b))
        rhs = jordan_product(triality_cycle(a), triality_cycle(b))
        scale = max(1.0, a.max_norm() * b.max_norm())
        auto.append(float(np.max(np.abs(lhs.data - rhs.data))) / scale)
        order3.append(float(np.max(np.abs(
            triality_cycle(triality_cycle(a, 2)).data - a.data))))
        tr, _, det = characteristic_coefficients(a)
        tr_c, _, det_c = characteristic_coefficients(triality_cycle(a))
        trace_det.append(max(abs(tr - tr_c), abs(det - det_c)) / max(1.0, a.max_norm()) ** 3)
    checks.append(_result("cycle-is-automorphism", 1e-10, auto))
    checks.append(_result("cycle-order-three", 0.0, order3))
    checks.append(_result("cycle-preserves-trace-det", 1e-12, trace_det))

    sampler = _child_sampler(seed, 503)
    roundtrip, mink = [], []
    for _ in range(n):
        x = sampler.hermitian(3, "O")
        block, corner, theta = bfss_split(x)
        roundtrip.append(float(np.max(np.abs(bfss_unsplit(block, corner, theta).data - x.data))))
        t, space, form = minkowski_coordinates(block)
        scale = max(1.0, block.max_norm()) ** 2
        mink.append(abs(form - (t * t - float(space @ space))) / scale)
    checks.append(_result("bfss-split-roundtrip", 0.0, roundtrip))
    checks.append(_result("minkowski-form-is-determinant", 1e-10, mink))

    x1 = HermitianElement.diagonal([1, 0, 0], "O")
    x2 = HermitianElement.diagonal([0, 1, 0], "O")
    x3_off = HermitianElement.from_parts(
        "O", [0, 0, 0], [Octonion.basis(1), Octonion.zero(), Octonion.zero()])
    x3_diag = HermitianElement.diagonal([0, 0, 1], "O")
    fixtures = [
        abs(smolin_action(GaugeConfiguration([x1, x2, x3_off]), algebra) - 0.0),
        abs(smolin_action(GaugeConfiguration([x1, x2, x3_diag]), algebra) - 3.0 / (4.0 * np.pi)),
        abs(ohwashi_action_value(GaugeConfiguration(
            [HermitianElement.diagonal(v, "CO") for v in ([1, 0, 0], [0, 1, 0], [0, 0, 1])]),
            algebra) - (-0.5)),
    ]
    checks.append(_result("action-fixed-values", 1e-12, fixtures))
    return checks


# ---------------------------------------------------------------------------
# registry and report assembly

SUITES = {
    "division-algebras": _division_algebras,
    "jordan-core": _jordan_core,
    "spectral": _spectral,
    "projective": _projective,
    "matrix-model": _matrix_model,
}


def list_suites() -> list:
    return list(SUITES)


def run_suites(names=None, *, trials: int | None = None, seed: int = DEFAULT_SEED,
               paper_strict: bool = False) -> dict:
    """Run the named suites (all by default) and assemble the report."""
    if names is None or names == "all" or names == ["all"]:
        names = list(SUITES)
    elif isinstance(names, str):
        names = [names]
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise GeometryError(f"unknown suites {unknown}; available: {list(SUITES)}")

    suites = []
    for name in names:
        checks = SUITES[name](trials, seed, paper_strict)
        suites.append({
            "name": name,
            "passed": all(c.passed for c in checks),
            "checks": [c.to_dict() for c in checks],
        })
    return {
        "command": "verify",
        "backend": kernels.BACKEND,
        "seed": int(seed),
        "trials": trials,
        "paper_strict": bool(paper_strict),
        "suites": suites,
        "passed": all(s["passed"] for s in suites),
    }
