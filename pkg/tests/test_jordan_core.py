"""Hermitian-element products, forms, block maps, and spin factors."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from jordanmm.division_algebras import Octonion
from jordanmm.errors import AlgebraError
from jordanmm.jordan_core import (
    HermitianElement,
    SpinFactorElement,
    characteristic_coefficients,
    congruence_action,
    cubic_form,
    determinant,
    freudenthal_product,
    from_scalar_matrix,
    jordan_product,
    minkowski_inner,
    peel,
    spin_product,
    to_scalar_matrix,
    trace_of_product,
    trilinear_form,
    unpeel,
)


def _as_oracle_matrix(x):
    return [[tuple(x.data[i, j]) for j in range(x.n)] for i in range(x.n)]


# ---------------------------------------------------------------------------
# jordan product

def test_diagonal_product_componentwise():
    a = HermitianElement.diagonal([1, 2, 3], "O")
    b = HermitianElement.diagonal([4, 5, 6], "O")
    assert np.allclose(jordan_product(a, b).diag(), [4, 10, 18])


def test_unit_element(sampler):
    eye = HermitianElement.identity(3, "O")
    for _ in range(10):
        x = sampler.hermitian(3, "O")
        assert jordan_product(eye, x).is_close(x, 1e-15)


def test_offdiagonal_octonionic_fixture():
    # a carries e1 in the (1,2) slot, b carries e2 in the (2,3) slot;
    # the product picks up e1 e2 / 2 = e3 / 2 in the (1,3) slot
    a = HermitianElement.from_parts("O", [0, 0, 0],
                                    [Octonion.basis(1), Octonion.zero(), Octonion.zero()])
    b = HermitianElement.from_parts("O", [0, 0, 0],
                                    [Octonion.zero(), Octonion.zero(), Octonion.basis(2)])
    prod = jordan_product(a, b)
    expected = np.zeros((3, 3, 8))
    expected[0, 2, 3] = 0.5
    expected[2, 0, 3] = -0.5
    assert np.allclose(prod.data, expected, atol=1e-15)


def test_product_matches_oracle(sampler):
    for ground in ("O", "CO"):
        for _ in range(5):
            a = sampler.hermitian(3, ground)
            b = sampler.hermitian(3, ground)
            expected = oracles.jordan(_as_oracle_matrix(a), _as_oracle_matrix(b))
            got = jordan_product(a, b)
            for i in range(3):
                for j in range(3):
                    assert np.allclose(got.data[i, j], np.asarray(expected[i][j]), atol=1e-12)


def test_shape_and_ground_mismatch():
    a = HermitianElement.diagonal([1, 2, 3], "O")
    with pytest.raises(AlgebraError):
        jordan_product(a, HermitianElement.diagonal([1, 2], "O"))
    with pytest.raises(AlgebraError):
        jordan_product(a, HermitianElement.diagonal([1, 2, 3], "H"))


def test_jordan_identity_all_grounds(sampler):
    for ground in ("R", "C", "H", "O", "CO"):
        for _ in range(20):
            a = sampler.hermitian(3, ground)
            b = sampler.hermitian(3, ground)
            a2 = jordan_product(a, a)
            lhs = jordan_product(a, jordan_product(b, a2))
            rhs = jordan_product(jordan_product(a, b), a2)
            scale = max(1.0, a.max_norm(), b.max_norm()) ** 3
            assert np.max(np.abs(lhs.data - rhs.data)) <= 1e-9 * scale


def test_formal_reality(sampler):
    for ground in ("R", "C", "H", "O"):
        for _ in range(20):
            x = sampler.hermitian(3, ground)
            tr = trace_of_product(x, x)
            assert tr >= x.max_norm() ** 2 - 1e-12
    zero = HermitianElement.zeros(3, "O")
    assert trace_of_product(zero, zero) == 0.0


# ---------------------------------------------------------------------------
# freudenthal product and characteristic data

def test_freudenthal_fixtures():
    eye = HermitianElement.identity(3, "O")
    assert freudenthal_product(eye, eye).is_close(eye, 1e-15)
    p = HermitianElement.diagonal([1, 0, 0], "O")
    assert freudenthal_product(p, p).max_norm() == 0.0


def test_freudenthal_adjugate_on_diagonals():
    a = HermitianElement.diagonal([1, 2, 3], "O")
    assert np.allclose(freudenthal_product(a, a).diag(), [6, 3, 2])
    b = HermitianElement.diagonal([-1.5, 0.25, 2.0], "H")
    lam = np.array([-1.5, 0.25, 2.0])
    expected = [lam[1] * lam[2], lam[0] * lam[2], lam[0] * lam[1]]
    assert np.allclose(freudenthal_product(b, b).diag(), expected, atol=1e-14)


def test_freudenthal_needs_3x3():
    a = HermitianElement.diagonal([1, 2], "O")
    with pytest.raises(AlgebraError):
        freudenthal_product(a, a)


def test_characteristic_fixtures():
    assert characteristic_coefficients(HermitianElement.diagonal([1, 2, 3], "O")) == (6.0, 11.0, 6.0)
    assert characteristic_coefficients(HermitianElement.diagonal([1, 0, 0], "O")) == (1.0, 0.0, 0.0)
    x = HermitianElement.from_parts("O", [0, 0, 0],
                                    [Octonion.basis(1), Octonion.zero(), Octonion.zero()])
    tr, sigma, det = characteristic_coefficients(x)
    assert (tr, det) == (0.0, 0.0)
    assert abs(sigma - (-1.0)) < 1e-15


def test_determinant_matches_closed_form(sampler):
    for ground in ("R", "C", "H", "O", "CO"):
        for _ in range(10):
            x = sampler.hermitian(3, ground)
            expected = oracles.det3(_as_oracle_matrix(x))
            assert abs(determinant(x) - expected) < 1e-12


def test_quaternionic_determinant_matches_embedding(sampler):
    for _ in range(10):
        x = sampler.hermitian(3, "H")
        evs = oracles.quaternion_matrix_eigenvalues(_as_oracle_matrix(x))
        assert abs(determinant(x) - np.prod(evs)) < 1e-10


# ---------------------------------------------------------------------------
# trilinear and cubic forms

def test_trilinear_fixtures():
    eye = HermitianElement.identity(3, "O")
    assert trilinear_form(eye, eye, eye) == 3.0
    p = HermitianElement.diagonal([1, 0, 0], "O")
    assert trilinear_form(p, p, p) == 1.0


def test_trace_form_associativity(sampler):
    for _ in range(50):
        a, b, c = (sampler.hermitian(3, "O") for _ in range(3))
        lhs = trilinear_form(a, b, c)
        rhs = trace_of_product(c, jordan_product(a, b))
        scale = max(1.0, a.max_norm() * b.max_norm() * c.max_norm())
        assert abs(lhs - rhs) <= 1e-10 * scale


def test_cubic_fixtures():
    eye = HermitianElement.identity(3, "O")
    assert abs(cubic_form(eye, eye, eye) - 1.0) < 1e-15
    units = [HermitianElement.diagonal(v, "O")
             for v in ([1, 0, 0], [0, 1, 0], [0, 0, 1])]
    assert abs(cubic_form(*units) - 1.0 / 6.0) < 1e-15


def test_cubic_diagonal_is_determinant(sampler):
    for ground in ("O", "CO"):
        for _ in range(20):
            a = sampler.hermitian(3, ground)
            assert abs(cubic_form(a, a, a) - determinant(a)) <= 1e-9 * max(1.0, a.max_norm()) ** 3


def test_cubic_totally_symmetric(sampler):
    a, b, c = (sampler.hermitian(3, "O") for _ in range(3))
    base = cubic_form(a, b, c)
    for perm in ((b, a, c), (a, c, b), (c, b, a)):
        assert abs(cubic_form(*perm) - base) < 1e-12


# ---------------------------------------------------------------------------
# peel / unpeel and the congruence action

def test_peel_fixture():
    a, block, psi = peel(HermitianElement.diagonal([1, 2, 3], "R"))
    assert a == 3.0
    assert np.allclose(block.diag(), [1, 2])
    assert all(p.max_norm() == 0.0 for p in psi)


def test_peel_blocks_match_entries(sampler):
    x = sampler.hermitian(5, "C")
    corner, block, psi = peel(x)
    assert corner == x.data[4, 4, 0]
    assert np.array_equal(block.data, x.data[:4, :4])
    for i, entry in enumerate(psi):
        assert np.array_equal(entry.coeffs, x.data[i, 4])


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["R", "C", "H", "O", "CO"]), st.integers(2, 5), st.integers(0, 2 ** 32 - 1))
def test_peel_roundtrip(ground, n, seed):
    from jordanmm.sampling import Sampler

    if ground in ("O", "CO"):
        n = min(n, 3)
    x = Sampler(seed).hermitian(n, ground)
    a, block, psi = peel(x)
    assert unpeel(a, block, psi).is_close(x, 0.0)


def test_congruence_identity(sampler):
    x = sampler.hermitian(4, "C")
    assert congruence_action(np.eye(4), x).is_close(x, 0.0)


def test_congruence_preserves_determinant_for_unit_phases(rng, sampler):
    x = sampler.hermitian(4, "C")
    g = np.diag(np.exp(1j * rng.uniform(0, 2 * np.pi, 4)))
    y = congruence_action(g, x)
    det_before = np.linalg.det(to_scalar_matrix(x))
    det_after = np.linalg.det(to_scalar_matrix(y))
    assert abs(det_before - det_after) < 1e-10


def test_congruence_preserves_determinant_generic_unimodular(rng, sampler):
    x = sampler.hermitian(4, "C")
    g = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
    g = g / np.linalg.det(g) ** 0.25  # det(g) = 1, so det(g x g+) = det(x)
    y = congruence_action(g, x)
    det_before = np.linalg.det(to_scalar_matrix(x))
    det_after = np.linalg.det(to_scalar_matrix(y))
    assert abs(det_before - det_after) < 1e-9


def test_congruence_transports_rank_one(rng):
    from jordanmm.projective import ProjectivePoint, point_from_vector

    v = rng.uniform(-1, 1, (4, 8))
    v[:, 2:] = 0.0
    p = point_from_vector(v, "C")
    g = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
    moved = congruence_action(g, p.element)
    moved = moved / moved.trace()
    gl = to_scalar_matrix_vector(g, v)
    expected = point_from_vector(gl, "C")
    assert moved.is_close(expected.element, 1e-10)
    ProjectivePoint(moved)  # still a valid point after renormalisation


def to_scalar_matrix_vector(g, v):
    """Apply a complex matrix to a coefficient vector over ground C."""
    zs = v[:, 0] + 1j * v[:, 1]
    gz = g @ zs
    out = np.zeros((len(gz), 8))
    out[:, 0] = gz.real
    out[:, 1] = gz.imag
    return out


def test_congruence_rejects_other_grounds(sampler):
    x = sampler.hermitian(3, "O")
    with pytest.raises(AlgebraError):
        congruence_action(np.eye(3), x)


def test_scalar_matrix_roundtrip(sampler):
    x = sampler.hermitian(4, "C")
    assert from_scalar_matrix(to_scalar_matrix(x), "C").is_close(x, 0.0)


# ---------------------------------------------------------------------------
# element validation

def test_hermiticity_enforced():
    data = np.zeros((2, 2, 8))
    data[0, 1, 0] = 1.0
    data[1, 0, 0] = -1.0  # should be +1 under conjugation
    with pytest.raises(AlgebraError):
        HermitianElement("O", data)


def test_size_limit_for_octonionic_grounds():
    with pytest.raises(AlgebraError):
        HermitianElement.zeros(4, "O")
    with pytest.raises(AlgebraError):
        HermitianElement.zeros(4, "CO")
    HermitianElement.zeros(5, "H")  # fine


def test_ground_mask_enforced():
    with pytest.raises(AlgebraError):
        HermitianElement.from_parts("C", [0, 0], [Octonion.basis(2)])
    HermitianElement.from_parts("C", [0, 0], [Octonion.basis(1)])


def test_strict_mode_rejects_complex_diagonal():
    entry = [np.zeros(8)] * 3
    HermitianElement.from_parts("CO", [1 + 1j, 0, 0], entry)
    with pytest.raises(AlgebraError):
        HermitianElement.from_parts("CO", [1 + 1j, 0, 0], entry, strict=True)


def test_complex_scalar_only_on_co(sampler):
    x = sampler.hermitian(3, "CO")
    (2 + 1j) * x
    with pytest.raises(AlgebraError):
        (2 + 1j) * sampler.hermitian(3, "O")


def test_serialization_roundtrip(sampler):
    from jordanmm.documents import hermitian_from_dict

    for ground in ("R", "C", "H", "O", "CO"):
        x = sampler.hermitian(3, ground)
        assert hermitian_from_dict(x.to_dict()).is_close(x, 0.0)


# ---------------------------------------------------------------------------
# spin factors

def test_spin_product_fixtures():
    ex = SpinFactorElement([1, 0], 0.0)
    ey = SpinFactorElement([0, 1], 0.0)
    prod = spin_product(ex, ey)
    assert np.allclose(prod.v, 0) and prod.alpha == 0.0

    unit = SpinFactorElement.unit(2)
    s = SpinFactorElement([0.3, -0.7], 1.0)
    assert spin_product(s, unit).is_close(s, 0.0)

    sq = spin_product(ex, ex)
    assert np.allclose(sq.v, 0) and sq.alpha == 1.0


def test_minkowski_fixtures():
    lightlike = SpinFactorElement([1, 0], 1.0)
    assert minkowski_inner(lightlike, lightlike) == 0.0
    timelike = SpinFactorElement([0, 0], 1.0)
    assert minkowski_inner(timelike, timelike) == -1.0


def test_minkowski_symmetry(sampler):
    for _ in range(50):
        s = sampler.spin_factor(5)
        t = sampler.spin_factor(5)
        assert minkowski_inner(s, t) == minkowski_inner(t, s)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.integers(0, 2 ** 32 - 1))
def test_spin_factor_jordan_identity(dim, seed):
    from jordanmm.sampling import Sampler

    sampler = Sampler(seed)
    s = sampler.spin_factor(dim)
    t = sampler.spin_factor(dim)
    s2 = spin_product(s, s)
    lhs = spin_product(s, spin_product(t, s2))
    rhs = spin_product(spin_product(s, t), s2)
    scale = max(1.0, np.max(np.abs(s.v)), abs(s.alpha), np.max(np.abs(t.v)), abs(t.alpha)) ** 3
    assert lhs.is_close(rhs, 1e-9 * scale)


def test_spin_dimension_mismatch():
    with pytest.raises(AlgebraError):
        spin_product(SpinFactorElement([1, 0], 0.0), SpinFactorElement([1, 0, 0], 0.0))
