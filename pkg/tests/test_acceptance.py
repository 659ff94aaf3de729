"""Acceptance suite: one numbered criterion per test, each printing a
PASS/FAIL line with its measured worst residual and its tolerance.

Run verbosely with `pytest -s tests/test_acceptance.py`.
"""

import json

import numpy as np
import pytest

from conformal_coherent import disk, halfplane, spacetime, su22, tube
from conformal_coherent import matrix_core as mc
from conformal_coherent.cli import main as cli_main
from conformal_coherent.disk import DiskPoint
from conformal_coherent.sampling import (
    random_domain_point,
    random_halfplane_point,
    random_minkowski,
    random_perturbation,
    random_shilov_point,
    random_sl2r,
    random_su22,
    random_tube_point,
    rng_from_seed,
)
from conformal_coherent.spacetime import ComovingPoint, RadialPoint
from conformal_coherent.su22 import DomainPoint, SU22Element


def report(num: int, label: str, worst: float, tol: float):
    status = "PASS" if worst <= tol else "FAIL"
    print(f"[{status}] criterion {num:2d}: {label}: worst {worst:.3e} (tol {tol:g})")
    assert worst <= tol, f"criterion {num} failed: {worst:.3e} > {tol:g}"


def test_criterion_01_bolyai_lobachevsky_quadrature():
    rng = rng_from_seed(42)
    worst = 0.0
    n = 0
    while n < 20:
        pt = random_halfplane_point(rng)
        h = random_perturbation(rng)
        closed = halfplane.dewitt_closed_form(pt, h)
        if closed < 1e-12:
            continue
        quad = halfplane.dewitt_inner_product(pt, h, h)
        worst = max(worst, abs(quad - closed) / closed)
        n += 1
    report(1, "DeWitt quadrature vs hyperbolic closed form", worst, 1e-8)


def test_criterion_02_covariance():
    rng = rng_from_seed(42)
    worst = 0.0
    n = 0
    while n < 100:
        A = random_sl2r(rng)
        pt = random_halfplane_point(rng)
        x = float(rng.uniform(-5, 5))
        if abs(A.c * x + A.d) < 1e-3:
            continue
        worst = max(worst, halfplane.covariance_residual(A, x, pt))
        n += 1
    report(2, "parabola-field covariance", worst, 1e-10)


def test_criterion_03_metric_invariance():
    rng = rng_from_seed(42)
    worst = max(
        halfplane.hyperbolic_invariance_residual(random_sl2r(rng), random_halfplane_point(rng))
        for _ in range(100))
    report(3, "SL(2,R) hyperbolic metric invariance", worst, 1e-10)


def test_criterion_04_boundary_coincidence():
    rng = rng_from_seed(42)
    worst = 0.0
    for _ in range(100):
        v = DiskPoint(complex(*(rng.uniform(-0.67, 0.67, size=2))))
        t = float(rng.uniform(0, 2 * np.pi))
        eta = disk.coherent_eta(v, np.exp(1j * t))
        worst = max(worst, abs(abs(eta) - disk.circle_metric(v, t)))
    report(4, "coherent state modulus vs circle metric", worst, 1e-12)


def test_criterion_05_su22_identities():
    rng = rng_from_seed(42)
    euz = comp = shilov = kernel = 0.0
    for _ in range(100):
        m, m2 = random_su22(rng), random_su22(rng)
        z1, z2 = random_domain_point(rng), random_domain_point(rng)
        euz = max(euz, su22.euz_residual(m, z1, z2), su22.ezz_residual(m, z1))
        lhs = su22.frac_linear_act(m @ m2, z1).z
        rhs = su22.frac_linear_act(m, su22.frac_linear_act(m2, z1)).z
        comp = max(comp, float(np.max(np.abs(lhs - rhs))))
        u = su22.shilov_act(m, random_shilov_point(rng)).u
        shilov = max(shilov, float(np.max(np.abs(u.conj().T @ u - np.eye(2)))))
    for k in (1, -1, 1j, -1j):
        km = SU22Element.from_mat4(k * np.eye(4, dtype=complex))
        for _ in range(10):
            z = random_domain_point(rng)
            kernel = max(kernel, float(np.max(np.abs(su22.frac_linear_act(km, z).z - z.z))))
    report(5, "euz/ezz identities", euz, 1e-11)
    report(5, "action composition", comp, 1e-10)
    report(5, "Shilov boundary stability", shilov, 1e-10)
    report(5, "kernel acts trivially", kernel, 1e-10)


def test_criterion_06_lemma1_jacobian():
    rng = rng_from_seed(42)
    worst = 0.0
    for _ in range(25):
        m = random_su22(rng)
        z = random_domain_point(rng, max_norm=0.8)
        analytic = su22.jacobian_det(m, z)
        fd = su22.fd_jacobian_det(lambda w: su22._mobius(m, w), z.z, h=1e-5)
        worst = max(worst, abs(analytic - fd) / abs(analytic))
    report(6, "analytic vs FD Jacobian determinant", worst, 1e-6)


def test_criterion_07_equivariance():
    rng = rng_from_seed(42)
    resid = phase = 0.0
    for _ in range(100):
        m = random_su22(rng)
        xi, z = random_domain_point(rng), random_domain_point(rng)
        resid = max(resid, su22.equivariance_residual(m, xi, z))
        d_xi = mc.det2(m.c @ xi.z + m.d)
        phase = max(phase, abs(abs(np.conj(d_xi) / abs(d_xi)) - 1))
    report(7, "coherent-state equivariance", resid, 1e-10)
    report(7, "phase factor unit modulus", phase, 1e-13)


def test_criterion_08_cayley_consistency():
    rng = rng_from_seed(42)
    rt = jac = twopath = 0.0
    for _ in range(100):
        z = random_domain_point(rng)
        back = tube.inverse_cayley4(tube.cayley4(z))
        rt = max(rt, float(np.max(np.abs(back.z - z.z))))
        w = random_tube_point(rng)
        fwd = tube.cayley4(tube.inverse_cayley4(w))
        rt = max(rt, float(np.max(np.abs(fwd.w - w.w))))
        direct = tube.phi_tube(tube.cayley4(z), w)
        transported = tube.transported_phi(z, tube.inverse_cayley4(w).z)
        twopath = max(twopath, abs(direct - transported))
    for _ in range(25):
        w = random_tube_point(rng)
        analytic = tube.cayley4_jacobian(w)
        fd = su22.fd_jacobian_det(lambda m: tube.inverse_cayley4(m).z, w.w, h=1e-5)
        jac = max(jac, abs(analytic - fd) / abs(analytic))
    report(8, "4-D Cayley round trips", rt, 1e-12)
    report(8, "dZ/dW vs FD Jacobian", jac, 1e-6)
    report(8, "two-path coherent-state consistency", twopath, 1e-9)


def test_criterion_09_killing_claims():
    killing = conformal = 0.0
    for t in np.linspace(-2, 2, 20):
        for r in np.linspace(0.1, 2, 20):
            p = RadialPoint(float(t), float(r), theta=1.2)
            lie = spacetime.lie_derivative_fd(spacetime.rescaled_metric, p, h=1e-5)
            killing = max(killing, float(np.max(np.abs(lie.components))))
            lie_eta = spacetime.lie_derivative_fd(spacetime.minkowski_radial, p, h=1e-5)
            target = 4 * p.t * spacetime.minkowski_radial(p).components
            conformal = max(conformal, float(np.max(np.abs(lie_eta.components - target))))
    report(9, "true Killing field of the rescaled metric", killing, 1e-6)
    report(9, "conformal Killing of Minkowski (factor 4t)", conformal, 1e-6)


def test_criterion_10_desitter_form():
    rng = rng_from_seed(42)
    worst = 0.0
    for _ in range(50):
        c = ComovingPoint(
            tau=float(rng.uniform(-0.5, 0.5)),
            rho=float(rng.uniform(0.05, 0.8)),
            theta=float(rng.uniform(0.2, 2.9)),
        )
        worst = max(worst, spacetime.desitter_pullback_residual(c))
    report(10, "de Sitter pullback residual", worst, 1e-6)


def test_criterion_11_conformal_factor():
    rng = rng_from_seed(42)
    factor = ratio = 0.0
    for _ in range(100):
        L = float(rng.uniform(0.5, 2.0))
        x = random_minkowski(rng, bound=2.0)
        r = float(np.sqrt(x.x1**2 + x.x2**2 + x.x3**2))
        fac = spacetime.conformal_factor(L, x.x0, r)
        factor = max(factor, abs(fac - spacetime.induced_factor_from_state(L, x)) / fac)
        ratio = max(ratio, abs(
            spacetime.conformal_factor(1.0, x.x0, r) / spacetime.rescaled_factor(x.x0, r) - 16.0))
    report(11, "induced factor equals |Phi|^2 (relative)", factor, 1e-12)
    report(11, "rescaled/induced constant ratio 16", ratio, 1e-12)


def test_criterion_12_cli_contract(tmp_path):
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    args = ["verify", "--suites", "all", "--seed", "42", "--samples", "25"]
    code1 = cli_main(args + ["--out", str(out1)])
    code2 = cli_main(args + ["--out", str(out2)])
    assert code1 == 0 and code2 == 0
    rec1, rec2 = json.loads(out1.read_text()), json.loads(out2.read_text())
    shape = {"suite": str, "checks_run": int, "max_residual": float,
             "tolerance": float, "passed": bool, "wall_time": float}
    for rec in rec1:
        assert set(rec) == set(shape)
        for key, typ in shape.items():
            assert isinstance(rec[key], typ), (key, rec[key])
        assert rec["passed"] == (rec["max_residual"] <= rec["tolerance"])
    # byte-identity is required modulo the wall-clock field, which the report
    # shape mandates but which cannot be bitwise reproducible
    for rec in rec1 + rec2:
        rec["wall_time"] = 0.0
    identical = json.dumps(rec1) == json.dumps(rec2)
    report(12, "verify exit 0 + schema-valid, reproducible report", 0.0 if identical else 1.0, 0.5)

    # delimited outputs must be byte-identical without any normalization
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    grid = ["sample-metric", "--nt", "5", "--nr", "5"]
    assert cli_main(grid + ["--out", str(a)]) == 0
    assert cli_main(grid + ["--out", str(b)]) == 0
    report(12, "CSV artifacts byte-identical", 0.0 if a.read_bytes() == b.read_bytes() else 1.0, 0.5)
