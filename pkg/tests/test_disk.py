import numpy as np
import pytest

from conformal_coherent import disk
from conformal_coherent import halfplane as hp
from conformal_coherent.disk import DiskPoint, SU11Element
from conformal_coherent.halfplane import HalfPlanePoint
from conformal_coherent.sampling import random_halfplane_point, random_sl2r


def test_cayley_center():
    assert disk.cayley(HalfPlanePoint(0, 1)).w == 0


def test_cayley_2i():
    assert disk.cayley(HalfPlanePoint(0, 2)).w == pytest.approx(1 / 3)


def test_inverse_cayley_values():
    z = disk.inverse_cayley(DiskPoint(0))
    assert (z.q, z.p) == (0, 1)
    z = disk.inverse_cayley(DiskPoint(1 / 3))
    assert z.q == pytest.approx(0, abs=1e-15)
    assert z.p == pytest.approx(2)


@pytest.mark.parametrize("trial", range(50))
def test_cayley_round_trip(trial):
    rng = np.random.default_rng(1200 + trial)
    w = complex(*(rng.uniform(-0.7, 0.7, size=2)))
    if abs(w) > 0.99:
        pytest.skip("outside the sampled radius")
    back = disk.cayley(disk.inverse_cayley(DiskPoint(w)))
    assert abs(back.w - w) < 1e-14
    pt = random_halfplane_point(rng)
    rt = disk.inverse_cayley(disk.cayley(pt))
    assert abs(rt.q - pt.q) < 1e-13 * max(1, abs(pt.q))
    assert abs(rt.p - pt.p) < 1e-13 * max(1, pt.p)


def test_gamma_matrices_are_inverse():
    np.testing.assert_allclose(disk.GAMMA_C @ disk.GAMMA_C_INV, np.eye(2), atol=1e-15)


def test_gamma_conjugate_identity():
    A = SU11Element(np.eye(2, dtype=complex))
    out = disk.gamma_conjugate(A)
    np.testing.assert_allclose(out.as_array(), np.eye(2), atol=1e-15)


@pytest.mark.parametrize("alpha", [0.3, 1.1, -2.0])
def test_gamma_conjugate_rotation(alpha):
    # direct matrix multiply oracle for the diagonal SU(1,1) subgroup
    A = SU11Element(np.diag([np.exp(1j * alpha), np.exp(-1j * alpha)]))
    out = disk.gamma_conjugate(A)
    expect = disk.GAMMA_C_INV @ A.m @ disk.GAMMA_C
    np.testing.assert_allclose(out.as_array(), expect.real, atol=1e-14)
    assert np.max(np.abs(expect.imag)) < 1e-14
    assert out.a * out.d - out.b * out.c == pytest.approx(1.0)


@pytest.mark.parametrize("trial", range(30))
def test_gamma_round_trip_and_homomorphism(trial):
    rng = np.random.default_rng(1300 + trial)
    A = disk.gamma_conjugate_inverse(random_sl2r(rng))
    back = disk.gamma_conjugate(A)
    again = disk.gamma_conjugate_inverse(back)
    np.testing.assert_allclose(again.m, A.m, atol=1e-12)
    B = disk.gamma_conjugate_inverse(random_sl2r(rng))
    lhs = disk.gamma_conjugate(SU11Element(A.m @ B.m)).as_array()
    rhs = (disk.gamma_conjugate(A) @ disk.gamma_conjugate(B)).as_array()
    np.testing.assert_allclose(lhs, rhs, atol=1e-11)


@pytest.mark.parametrize("trial", range(30))
def test_su11_preserves_disk(trial):
    rng = np.random.default_rng(1400 + trial)
    A = disk.gamma_conjugate_inverse(random_sl2r(rng))
    w = complex(*(rng.uniform(-0.7, 0.7, size=2)))
    assert abs(A.act(w)) < 1


def test_circle_metric_center():
    for t in np.linspace(0, 2 * np.pi, 7):
        assert disk.circle_metric(DiskPoint(0), float(t)) == pytest.approx(1.0)


def test_circle_metric_substitution():
    assert disk.circle_metric(DiskPoint(0.5), 0.0) == pytest.approx(3.0)


@pytest.mark.parametrize("trial", range(30))
def test_circle_metric_pullback_chain(trial):
    # independent oracle: pull the boundary density back through the chart
    # z(t) = -cot(t/2).  The density is the reciprocal of the parabola field
    # and carries weight one, so it picks up a single factor of dz/dt.
    rng = np.random.default_rng(1500 + trial)
    pt = random_halfplane_point(rng, p_min=0.3, p_max=3.0)
    xi = disk.cayley(pt)
    t = float(rng.uniform(0.3, 2 * np.pi - 0.3))
    z_t = -1.0 / np.tan(t / 2)
    dz_dt = 0.5 / np.sin(t / 2) ** 2
    pulled = dz_dt / hp.parabola_field(z_t, pt)
    assert disk.circle_metric(xi, t) == pytest.approx(pulled, rel=1e-10)


def test_coherent_eta_values():
    assert disk.coherent_eta(DiskPoint(0), 0.3 + 0.1j) == 1
    assert disk.coherent_eta(DiskPoint(0.5), 0) == pytest.approx(0.75)


@pytest.mark.parametrize("trial", range(100))
def test_boundary_coincidence(trial):
    rng = np.random.default_rng(1600 + trial)
    v = DiskPoint(complex(*(rng.uniform(-0.67, 0.67, size=2))))
    t = float(rng.uniform(0, 2 * np.pi))
    eta = disk.coherent_eta(v, np.exp(1j * t))
    assert abs(abs(eta) - disk.circle_metric(v, t)) < 1e-12


def test_berezin_constant():
    # radial oracle: (1/pi) * int_0^1 int_0^{2pi} r dr dtheta = 1
    assert disk.berezin_inner_product([1.0], [1.0]) == pytest.approx(1.0, abs=1e-12)


def test_berezin_angular_orthogonality():
    assert abs(disk.berezin_inner_product([0, 1], [1.0])) < 1e-12


@pytest.mark.parametrize("n", range(5))
def test_berezin_monomial_norms(n):
    # radial oracle: (1/pi) * 2pi/(2n+2) = 1/(n+1)
    coeffs = [0.0] * n + [1.0]
    assert disk.berezin_inner_product(coeffs, coeffs) == pytest.approx(
        1 / (n + 1), abs=1e-12)


@pytest.mark.parametrize("m,n", [(0, 1), (1, 3), (2, 4)])
def test_berezin_monomial_orthogonality(m, n):
    f = [0.0] * m + [1.0]
    g = [0.0] * n + [1.0]
    assert abs(disk.berezin_inner_product(f, g)) < 1e-10


def test_disk_point_rejects_exterior():
    with pytest.raises(ValueError):
        DiskPoint(1.0)


def test_su11_rejects_non_member():
    with pytest.raises(Exception):
        SU11Element(np.array([[2, 0], [0, 1]], dtype=complex))
