"""Named verification suites over the library's identities.

Each suite evaluates a batch of seeded residual checks, each with its own
tolerance, and reports the worst normalized residual (residual / tolerance)
so a suite passes iff its max normalized residual is <= 1.  Tolerances per
suite can be scaled through the overrides map.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, replace as dc_replace

import numpy as np

from . import disk, halfplane, spacetime, su22, tube
from . import matrix_core as mc
from .errors import UnknownSuite
from .matrix_core import MinkowskiVector
from .sampling import (
    random_domain_point,
    random_future_cone,
    random_halfplane_point,
    random_minkowski,
    random_perturbation,
    random_shilov_point,
    random_sl2r,
    random_su22,
    random_tube_params,
    random_tube_point,
    random_unitary2,
    rng_from_seed,
)

SUITE_NAMES = ("halfplane", "disk", "su22", "tube", "spacetime")


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tolerance: float

    @property
    def normalized(self) -> float:
        return self.residual / self.tolerance


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    checks_run: int
    max_residual: float
    tolerance: float
    passed: bool
    wall_time: float

    def to_record(self) -> dict:
        return asdict(self)


def _suite_halfplane(rng, samples: int, fd_step: float) -> list[Check]:
    checks = []
    cov = inv = act = 0.0
    for _ in range(samples):
        A = random_sl2r(rng)
        pt = random_halfplane_point(rng)
        x = float(rng.uniform(-5, 5))
        if abs(A.c * x + A.d) < 1e-3:
            continue
        cov = max(cov, halfplane.covariance_residual(A, x, pt))
        inv = max(inv, halfplane.hyperbolic_invariance_residual(A, pt))
        B = random_sl2r(rng)
        lhs = halfplane.sl2r_act(A @ B, pt)
        rhs = halfplane.sl2r_act(A, halfplane.sl2r_act(B, pt))
        act = max(act, abs(lhs.q - rhs.q), abs(lhs.p - rhs.p))
    checks.append(Check("covariance_proposition1", cov, 1e-10))
    checks.append(Check("hyperbolic_invariance", inv, 1e-10))
    checks.append(Check("group_action_composition", act, 1e-12))

    quad = pol = 0.0
    for _ in range(min(samples, 20)):
        pt = random_halfplane_point(rng)
        h1 = random_perturbation(rng)
        h2 = random_perturbation(rng)
        closed = halfplane.dewitt_closed_form(pt, h1)
        if closed > 1e-12:
            quad = max(quad, abs(halfplane.dewitt_inner_product(pt, h1, h1) - closed) / closed)
        q_sum = halfplane.dewitt_inner_product(
            pt, halfplane.MetricPerturbation(h1.dq + h2.dq, h1.dp + h2.dp),
            halfplane.MetricPerturbation(h1.dq + h2.dq, h1.dp + h2.dp))
        q_diff = halfplane.dewitt_inner_product(
            pt, halfplane.MetricPerturbation(h1.dq - h2.dq, h1.dp - h2.dp),
            halfplane.MetricPerturbation(h1.dq - h2.dq, h1.dp - h2.dp))
        cross = halfplane.dewitt_inner_product(pt, h1, h2)
        pol = max(pol, abs(cross - (q_sum - q_diff) / 4))
    checks.append(Check("dewitt_vs_closed_form", quad, 1e-8))
    checks.append(Check("dewitt_polarization", pol, 1e-9))
    return checks


def _suite_disk(rng, samples: int, fd_step: float) -> list[Check]:
    checks = []
    coin = homo = rt = preserve = 0.0
    for _ in range(samples):
        v = disk.DiskPoint(complex(*(rng.uniform(-0.67, 0.67, size=2))))
        t = float(rng.uniform(0, 2 * np.pi))
        coin = max(coin, abs(abs(disk.coherent_eta(v, np.exp(1j * t))) - disk.circle_metric(v, t)))
        A = disk.gamma_conjugate_inverse(random_sl2r(rng))
        B = disk.gamma_conjugate_inverse(random_sl2r(rng))
        lhs = disk.gamma_conjugate(disk.SU11Element(A.m @ B.m)).as_array()
        rhs = (disk.gamma_conjugate(A) @ disk.gamma_conjugate(B)).as_array()
        homo = max(homo, float(np.max(np.abs(lhs - rhs))))
        pt = random_halfplane_point(rng)
        back = disk.inverse_cayley(disk.cayley(pt))
        rt = max(rt, abs(back.q - pt.q), abs(back.p - pt.p))
        w = A.act(v.w)
        preserve = max(preserve, 0.0 if abs(w) < 1 else abs(w) - 1)
    checks.append(Check("boundary_coincidence", coin, 1e-12))
    checks.append(Check("gamma_homomorphism", homo, 1e-11))
    checks.append(Check("cayley_round_trip", rt, 1e-14))
    checks.append(Check("disk_preservation", preserve, 1e-12))

    ortho = 0.0
    for m in range(4):
        for n in range(4):
            f = [0.0] * m + [1.0]
            g = [0.0] * n + [1.0]
            val = disk.berezin_inner_product(f, g)
            expect = 1.0 / (n + 1) if m == n else 0.0
            ortho = max(ortho, abs(val - expect))
    checks.append(Check("monomial_orthogonality", ortho, 1e-10))
    return checks


def _suite_su22(rng, samples: int, fd_step: float) -> list[Check]:
    checks = []
    euz = comp = shilov = kernel = equiv = phase = closure = 0.0
    phi_min = np.inf
    for _ in range(samples):
        m = random_su22(rng)
        m2 = random_su22(rng)
        z1 = random_domain_point(rng)
        z2 = random_domain_point(rng)
        euz = max(euz, su22.euz_residual(m, z1, z2), su22.ezz_residual(m, z1))
        lhs = su22.frac_linear_act(m @ m2, z1).z
        rhs = su22.frac_linear_act(m, su22.frac_linear_act(m2, z1)).z
        comp = max(comp, float(np.max(np.abs(lhs - rhs))))
        u = su22.shilov_act(m, random_shilov_point(rng)).u
        shilov = max(shilov, float(np.max(np.abs(u.conj().T @ u - mc.E2))))
        closure = max(closure, su22.su22_membership_residual((m @ m2).as_mat4()))
        equiv = max(equiv, su22.equivariance_residual(m, z1, z2))
        d_xi = mc.det2(m.c @ z1.z + m.d)
        phase = max(phase, abs(abs(np.conj(d_xi) / abs(d_xi)) - 1))
        phi_min = min(phi_min, abs(su22.coherent_phi(z1, z2.z).value))
    for k in (1, -1, 1j, -1j):
        km = su22.SU22Element.from_mat4(k * np.eye(4, dtype=complex))
        for _ in range(10):
            z = random_domain_point(rng)
            kernel = max(kernel, float(np.max(np.abs(su22.frac_linear_act(km, z).z - z.z))))
    checks.append(Check("euz_ezz_identities", euz, 1e-11))
    checks.append(Check("action_composition", comp, 1e-10))
    checks.append(Check("shilov_stability", shilov, 1e-10))
    checks.append(Check("group_closure", closure, 1e-10))
    checks.append(Check("equivariance_bieq", equiv, 1e-10))
    checks.append(Check("phase_unit_modulus", phase, 1e-13))
    checks.append(Check("kernel_trivial_action", kernel, 1e-12))
    checks.append(Check("phi_nonvanishing", 0.0 if phi_min > 0 else 1.0, 0.5))

    jac = 0.0
    for _ in range(min(samples, 25)):
        m = random_su22(rng)
        z = random_domain_point(rng, max_norm=0.8)
        analytic = su22.jacobian_det(m, z)
        fd = su22.fd_jacobian_det(lambda w: su22._mobius(m, w), z.z, h=fd_step)
        jac = max(jac, abs(analytic - fd) / abs(analytic))
    checks.append(Check("lemma1_jacobian_fd", jac, 1e-6))
    return checks


def _suite_tube(rng, samples: int, fd_step: float) -> list[Check]:
    checks = []
    rt = herm = twopath = 0.0
    pos_ok = True
    for _ in range(samples):
        z = random_domain_point(rng)
        back = tube.inverse_cayley4(tube.cayley4(z))
        rt = max(rt, float(np.max(np.abs(back.z - z.z))))
        w = random_tube_point(rng)
        fwd = tube.cayley4(tube.inverse_cayley4(w))
        rt = max(rt, float(np.max(np.abs(fwd.w - w.w))))
        u = random_unitary2(rng)
        if np.linalg.cond(mc.E2 + u) < 1e6:
            img = tube.cayley4_raw(u)
            herm = max(herm, float(np.max(np.abs(img - img.conj().T))))
        zeta = tube.cayley4(z)
        twopath = max(twopath, abs(tube.phi_tube(zeta, w) - tube.transported_phi(z, tube.inverse_cayley4(w).z)))
        l = random_future_cone(rng)
        x = random_minkowski(rng)
        d = x.as_array() - np.zeros(4)
        d2 = mc.minkowski_dot(d, d)
        l2 = mc.minkowski_dot(l, l)
        ld = mc.minkowski_dot(l.as_array(), d)
        pos_ok = pos_ok and ((l2 - d2) ** 2 + 4 * ld**2) > 0
    checks.append(Check("cayley4_round_trips", rt, 1e-12))
    checks.append(Check("shilov_to_hermitian", herm, 1e-12))
    checks.append(Check("two_path_phi", twopath, 1e-9))
    checks.append(Check("denominator_positive", 0.0 if pos_ok else 1.0, 0.5))

    jac = 0.0
    for _ in range(min(samples, 25)):
        w = random_tube_point(rng)
        analytic = tube.cayley4_jacobian(w)
        fd = su22.fd_jacobian_det(lambda m: tube.inverse_cayley4(m).z, w.w, h=fd_step)
        jac = max(jac, abs(analytic - fd) / abs(analytic))
    checks.append(Check("dzdw_jacobian_fd", jac, 1e-6))
    return checks


def _suite_spacetime(rng, samples: int, fd_step: float) -> list[Check]:
    checks = []
    killing = conformal = 0.0
    for t in np.linspace(-2, 2, 20):
        for r in np.linspace(0.1, 2, 20):
            p = spacetime.RadialPoint(t=float(t), r=float(r), theta=1.1)
            killing = max(killing, float(np.max(np.abs(
                spacetime.lie_derivative_fd(spacetime.rescaled_metric, p, h=fd_step).components))))
            lie_eta = spacetime.lie_derivative_fd(spacetime.minkowski_radial, p, h=fd_step).components
            target = 4 * p.t * spacetime.minkowski_radial(p).components
            conformal = max(conformal, float(np.max(np.abs(lie_eta - target))))
    checks.append(Check("killing_rescaled_metric", killing, 1e-6))
    checks.append(Check("conformal_killing_4t", conformal, 1e-6))

    flow = xi_fd = pullback = factor = ratio = compat = sig = 0.0
    for _ in range(samples):
        p = spacetime.RadialPoint(
            t=float(rng.uniform(-1, 1)), r=float(rng.uniform(0.1, 1.5)), theta=float(rng.uniform(0.2, 2.9)))
        a1, a2 = rng.uniform(-0.2, 0.2, size=2)
        one = spacetime.u1_flow(a1 + a2, p)
        two = spacetime.u1_flow(a1, spacetime.u1_flow(a2, p))
        flow = max(flow, abs(one.t - two.t), abs(one.r - two.r))
        h = 1e-5
        plus, minus = spacetime.u1_flow(h, p), spacetime.u1_flow(-h, p)
        fd_vec = np.array([(plus.t - minus.t) / (2 * h), (plus.r - minus.r) / (2 * h)])
        xi_fd = max(xi_fd, float(np.max(np.abs(fd_vec - spacetime.killing_xi(p)[:2]))))

        c = spacetime.ComovingPoint(
            tau=float(rng.uniform(-0.5, 0.5)), rho=float(rng.uniform(0.05, 0.8)), theta=float(rng.uniform(0.2, 2.9)))
        pullback = max(pullback, spacetime.desitter_pullback_residual(c, h=fd_step))

        L = float(rng.uniform(0.5, 2.0))
        x = random_minkowski(rng, bound=2.0)
        t_, r_ = x.x0, float(np.sqrt(x.x1**2 + x.x2**2 + x.x3**2))
        fac = spacetime.conformal_factor(L, t_, r_)
        factor = max(factor, abs(fac - spacetime.induced_factor_from_state(L, x)) / fac)
        ratio = max(ratio, abs(spacetime.conformal_factor(1.0, t_, r_)
                               / spacetime.rescaled_factor(t_, r_) - 16.0))

        alpha = float(rng.uniform(-0.3, 0.3))
        compat = max(compat, _flow_pullback_residual(p, alpha, h))

        eigs = np.linalg.eigvalsh(spacetime.rescaled_metric(p).components)
        signs = np.sign(np.sort(eigs))
        sig = max(sig, 0.0 if (signs == np.array([-1, -1, -1, 1])).all() else 1.0)
    checks.append(Check("flow_group_property", flow, 1e-10))
    checks.append(Check("killing_xi_vs_flow_fd", xi_fd, 1e-7))
    checks.append(Check("desitter_pullback", pullback, 1e-6))
    checks.append(Check("conformal_factor_identity", factor, 1e-12))
    checks.append(Check("rescaled_ratio_16", ratio, 1e-12))
    checks.append(Check("flow_metric_compatibility", compat, 1e-6))
    checks.append(Check("signature_pmmm", sig, 0.5))
    return checks


def _flow_pullback_residual(p: spacetime.RadialPoint, alpha: float, h: float) -> float:
    """FD pullback of the rescaled metric along the flow, compared at p."""
    jac = np.eye(4)
    for col, field in ((0, "t"), (1, "r")):
        plus = spacetime.u1_flow(alpha, dc_replace(p, **{field: getattr(p, field) + h}))
        minus = spacetime.u1_flow(alpha, dc_replace(p, **{field: getattr(p, field) - h}))
        jac[0, col] = (plus.t - minus.t) / (2 * h)
        jac[1, col] = (plus.r - minus.r) / (2 * h)
    img = spacetime.u1_flow(alpha, p)
    pulled = jac.T @ spacetime.rescaled_metric(img).components @ jac
    return float(np.max(np.abs(pulled - spacetime.rescaled_metric(p).components)))


_SUITE_FNS = {
    "halfplane": _suite_halfplane,
    "disk": _suite_disk,
    "su22": _suite_su22,
    "tube": _suite_tube,
    "spacetime": _suite_spacetime,
}


def run_suite(name: str, seed: int = 42, samples: int = 100, fd_step: float = 1e-5,
              tolerance: float = 1.0) -> SuiteReport:
    """Run one named suite; max_residual is normalized by per-check tolerances."""
    if name not in _SUITE_FNS:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    rng = rng_from_seed(seed)
    start = time.perf_counter()
    checks = _SUITE_FNS[name](rng, samples, fd_step)
    wall = time.perf_counter() - start
    worst = float(max(c.normalized for c in checks))
    return SuiteReport(
        suite=name,
        checks_run=len(checks),
        max_residual=worst,
        tolerance=float(tolerance),
        passed=bool(worst <= tolerance),
        wall_time=float(wall),
    )


def run_suites(names, seed: int = 42, samples: int = 100, fd_step: float = 1e-5,
               tolerance_overrides: dict[str, float] | None = None) -> list[SuiteReport]:
    """Run suites in canonical name order, expanding 'all'."""
    overrides = tolerance_overrides or {}
    requested = set()
    for n in names:
        if n == "all":
            requested.update(SUITE_NAMES)
        elif n in _SUITE_FNS:
            requested.add(n)
        else:
            raise UnknownSuite(f"unknown suite {n!r}; choose from {SUITE_NAMES + ('all',)}")
    return [
        run_suite(n, seed=seed, samples=samples, fd_step=fd_step,
                  tolerance=overrides.get(n, 1.0))
        for n in sorted(requested)
    ]
