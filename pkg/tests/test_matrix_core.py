import numpy as np
import pytest

from conformal_coherent import matrix_core as mc
from conformal_coherent.errors import NotPositiveDefinite
from conformal_coherent.matrix_core import MinkowskiVector

RNG = np.random.default_rng(1234)


def random_mat2(rng=RNG):
    return rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))


def test_det2_identity():
    assert mc.det2(np.eye(2)) == 1


def test_det2_diagonal():
    assert mc.det2(np.diag([2, 3j])) == 6j


def test_det2_singular():
    m = np.array([[1 + 2j, 3], [1 + 2j, 3]])
    assert mc.det2(m) == 0


def test_herm_inv_sqrt_identity():
    np.testing.assert_allclose(mc.herm_inv_sqrt(np.eye(2)), np.eye(2), atol=1e-15)


def test_herm_inv_sqrt_diagonal():
    np.testing.assert_allclose(
        mc.herm_inv_sqrt(np.diag([4.0, 1.0])), np.diag([0.5, 1.0]), atol=1e-15)


@pytest.mark.parametrize("trial", range(20))
def test_herm_inv_sqrt_residual(trial):
    # P m P = E is its own oracle
    rng = np.random.default_rng(100 + trial)
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    m = g @ g.conj().T + 0.05 * np.eye(2)
    p = mc.herm_inv_sqrt(m)
    np.testing.assert_allclose(p @ m @ p, np.eye(2), atol=8 * np.finfo(float).eps * 100)
    # result is Hermitian PD
    assert np.max(np.abs(p - p.conj().T)) < 1e-14
    assert mc.is_positive_definite(p)


def test_herm_inv_sqrt_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite):
        mc.herm_inv_sqrt(np.diag([1.0, -0.5]))
    with pytest.raises(NotPositiveDefinite):
        mc.herm_inv_sqrt(np.diag([1.0, 1e-14]))


def test_operator_norm_basics():
    assert mc.operator_norm(np.eye(2)) == 1
    assert mc.operator_norm(np.diag([0.5, 0.0])) == 0.5


@pytest.mark.parametrize("trial", range(20))
def test_operator_norm_char_poly_oracle(trial):
    # largest eigenvalue of m* m from the quadratic characteristic polynomial
    rng = np.random.default_rng(200 + trial)
    m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    h = m.conj().T @ m
    tr = (h[0, 0] + h[1, 1]).real
    det = (h[0, 0] * h[1, 1] - h[0, 1] * h[1, 0]).real
    lam = tr / 2 + np.sqrt(tr**2 / 4 - det)
    assert mc.operator_norm(m) ** 2 == pytest.approx(lam, rel=1e-13)


@pytest.mark.parametrize("trial", range(30))
def test_operator_norm_submultiplicative(trial):
    rng = np.random.default_rng(300 + trial)
    m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    n = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    assert mc.operator_norm(m @ n) <= mc.operator_norm(m) * mc.operator_norm(n) + 1e-12


def test_pauli_compose_basics():
    np.testing.assert_array_equal(mc.pauli_compose(MinkowskiVector(1, 0, 0, 0)), np.eye(2))
    np.testing.assert_array_equal(
        mc.pauli_compose(MinkowskiVector(0, 0, 0, 1)), np.diag([1.0, -1.0]))


def test_pauli_decompose_basics():
    assert mc.pauli_decompose(np.eye(2)) == MinkowskiVector(1, 0, 0, 0)
    assert mc.pauli_decompose(mc.SIGMA[2]) == MinkowskiVector(0, 0, 1, 0)


@pytest.mark.parametrize("trial", range(30))
def test_pauli_round_trip_and_det(trial):
    rng = np.random.default_rng(400 + trial)
    x = MinkowskiVector(*map(float, rng.uniform(-10, 10, size=4)))
    w = mc.pauli_compose(x)
    back = mc.pauli_decompose(w)
    np.testing.assert_allclose(back.as_array(), x.as_array(), rtol=1e-15, atol=1e-15)
    # det(x.sigma) = x0^2 - x1^2 - x2^2 - x3^2
    quad = x.x0**2 - x.x1**2 - x.x2**2 - x.x3**2
    assert mc.det2(w).real == pytest.approx(quad, abs=1e-13 * max(1, abs(quad)))
    assert abs(mc.det2(w).imag) < 1e-13


def test_rejects_nonfinite():
    with pytest.raises(ValueError):
        mc.as_mat2(np.array([[np.nan, 0], [0, 1]]))
    with pytest.raises(ValueError):
        MinkowskiVector(np.inf, 0, 0, 0)
