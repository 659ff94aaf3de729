"""Induced space-time metric, its U(1) flow, and the de Sitter form.

The modulus squared of the rotationally invariant coherent state times the
Minkowski tensor gives a conformally flat metric.  The diagonal U(1)
subgroup of the stability group flows space-time points along trajectories
whose tangent field Xi = (1 + r^2 + t^2) d/dt + 2rt d/dr is a conformal
Killing field of Minkowski space and a true Killing field of the induced
metric; comoving coordinates bring the metric to the standard de Sitter
form.  All of this is checked numerically with central differences.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import ChartSingularity, StepTooSmall
from .matrix_core import MinkowskiVector
from .tube import phi_explicit, rotationally_invariant_state

CHART_GUARD = 1e-10
MIN_FD_STEP = 1e-9


@dataclass(frozen=True)
class RadialPoint:
    t: float
    r: float
    theta: float = np.pi / 2
    phi: float = 0.0

    def __post_init__(self):
        if self.r < 0 or not (0 <= self.theta <= np.pi):
            raise ValueError("need r >= 0 and theta in [0, pi]")


@dataclass(frozen=True)
class ComovingPoint:
    tau: float
    rho: float
    theta: float = np.pi / 2
    phi: float = 0.0

    def __post_init__(self):
        if self.rho < 0:
            raise ValueError("need rho >= 0")


@dataclass(frozen=True)
class MetricSample:
    components: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.components, dtype=float)
        if m.shape != (4, 4) or np.max(np.abs(m - m.T)) > 1e-12:
            raise ValueError("metric sample must be symmetric 4x4")
        object.__setattr__(self, "components", (m + m.T) / 2)


def _radial_minkowski(r: float, theta: float) -> np.ndarray:
    return np.diag([1.0, -1.0, -(r**2), -(r**2) * np.sin(theta) ** 2])


def minkowski_radial(p: RadialPoint) -> MetricSample:
    """Flat metric diag(1, -1, -r^2, -r^2 sin^2 theta) in (t, r, theta, phi)."""
    return MetricSample(_radial_minkowski(p.r, p.theta))


def conformal_factor(L: float, t: float, r: float) -> float:
    """16 L^4 / (L^4 + (t^2 - r^2)^2 + 2 L^2 (t^2 + r^2))."""
    return 16 * L**4 / (L**4 + (t**2 - r**2) ** 2 + 2 * L**2 * (t**2 + r**2))


def induced_metric(L: float, x: MinkowskiVector) -> MetricSample:
    """Metric |Phi_{0,L}(x)|^2 eta, expressed in radial coordinates at x."""
    if L <= 0:
        raise ValueError("need L > 0")
    t = x.x0
    r = float(np.sqrt(x.x1**2 + x.x2**2 + x.x3**2))
    theta = float(np.arccos(np.clip(x.x3 / r, -1, 1))) if r > 0 else 0.0
    return MetricSample(conformal_factor(L, t, r) * _radial_minkowski(r, theta))


def induced_factor_from_state(L: float, x: MinkowskiVector) -> float:
    """|Phi_{0,L}(x)|^2 computed through the explicit coherent state."""
    return abs(phi_explicit(rotationally_invariant_state(L), x)) ** 2


def rescaled_factor(t: float, r: float) -> float:
    return 1.0 / (1 + (t**2 - r**2) ** 2 + 2 * (t**2 + r**2))


def rescaled_metric(p: RadialPoint) -> MetricSample:
    """L = 1 metric with the overall constant 16 stripped."""
    return MetricSample(rescaled_factor(p.t, p.r) * _radial_minkowski(p.r, p.theta))


def u1_flow(alpha: float, p: RadialPoint) -> RadialPoint:
    """Flow of the diagonal U(1) subgroup through p by parameter alpha."""
    t, r = p.t, p.r
    den = 1 + t**2 - r**2 + np.cos(2 * alpha) * (1 + r**2 - t**2) - 2 * np.sin(2 * alpha) * t
    if abs(den) < CHART_GUARD:
        raise ChartSingularity(f"flow denominator vanished at alpha={alpha}")
    t_new = (2 * np.cos(2 * alpha) * t + np.sin(2 * alpha) * (1 + r**2 - t**2)) / den
    r_new = 2 * r / den
    return replace(p, t=float(t_new), r=float(r_new))


def killing_xi(p: RadialPoint) -> np.ndarray:
    """Tangent field of the flow at alpha = 0: (1 + r^2 + t^2, 2rt, 0, 0)."""
    return np.array([1 + p.r**2 + p.t**2, 2 * p.r * p.t, 0.0, 0.0])


def _xi_gradient(p: RadialPoint) -> np.ndarray:
    # d Xi^mu / d x^nu, analytic; only the (t, r) block is nonzero
    grad = np.zeros((4, 4))
    grad[0, 0] = 2 * p.t
    grad[0, 1] = 2 * p.r
    grad[1, 0] = 2 * p.r
    grad[1, 1] = 2 * p.t
    return grad


def lie_derivative_fd(metric_fn, p: RadialPoint, h: float = 1e-5) -> MetricSample:
    """(L_Xi g)_{mu nu} with central differences in (t, r) and analytic dXi.

    Xi has no angular components and no angular dependence, so only t and r
    derivatives of the metric are needed.
    """
    if h < MIN_FD_STEP:
        raise StepTooSmall(f"step {h} below {MIN_FD_STEP}")
    g = metric_fn(p).components
    dg_dt = (metric_fn(replace(p, t=p.t + h)).components
             - metric_fn(replace(p, t=p.t - h)).components) / (2 * h)
    dg_dr = (metric_fn(replace(p, r=p.r + h)).components
             - metric_fn(replace(p, r=p.r - h)).components) / (2 * h)
    xi = killing_xi(p)
    grad = _xi_gradient(p)
    lie = xi[0] * dg_dt + xi[1] * dg_dr + grad.T @ g + g @ grad
    return MetricSample((lie + lie.T) / 2)


def _comoving_tr(tau: float, rho: float) -> tuple[float, float]:
    # raw chart map; rho may go (slightly) negative during finite differencing
    den = 1 - rho**2 + (1 + rho**2) * np.cos(2 * tau)
    if abs(den) < CHART_GUARD:
        raise ChartSingularity(f"chart denominator vanished at tau={tau}")
    return float((1 + rho**2) * np.sin(2 * tau) / den), float(2 * rho / den)


def comoving_to_radial(c: ComovingPoint) -> RadialPoint:
    """Comoving chart (tau, rho) to radial (t, r); angles pass through."""
    t, r = _comoving_tr(c.tau, c.rho)
    return RadialPoint(t=t, r=r, theta=c.theta, phi=c.phi)


def desitter_metric(c: ComovingPoint) -> MetricSample:
    """Standard de Sitter form diag(1, -1/(1+rho^2)^2, -rho^2/(1+rho^2)^2, ...)."""
    s = (1 + c.rho**2) ** 2
    return MetricSample(np.diag([
        1.0, -1.0 / s, -(c.rho**2) / s, -(c.rho**2) * np.sin(c.theta) ** 2 / s,
    ]))


def desitter_pullback_residual(c: ComovingPoint, h: float = 1e-5) -> float:
    """Max-norm mismatch between the pulled-back rescaled metric and de Sitter.

    The (tau, rho) block of the Jacobian of comoving_to_radial is formed by
    central differences; the angular block is the identity.
    """
    if h < MIN_FD_STEP:
        raise StepTooSmall(f"step {h} below {MIN_FD_STEP}")
    jac = np.eye(4)
    for col in (0, 1):
        dtau, drho = (h, 0.0) if col == 0 else (0.0, h)
        t_p, r_p = _comoving_tr(c.tau + dtau, c.rho + drho)
        t_m, r_m = _comoving_tr(c.tau - dtau, c.rho - drho)
        jac[0, col] = (t_p - t_m) / (2 * h)
        jac[1, col] = (r_p - r_m) / (2 * h)
    g = rescaled_metric(comoving_to_radial(c)).components
    pulled = jac.T @ g @ jac
    return float(np.max(np.abs(pulled - desitter_metric(c).components)))


def killing_field_samples(
    t_min: float, t_max: float, r_min: float, r_max: float, nt: int, nr: int
) -> list[tuple[RadialPoint, np.ndarray]]:
    """Deterministic row-major (t outer, r inner) grid of Xi samples."""
    if nt < 1 or nr < 1:
        raise ValueError("grid counts must be >= 1")
    ts = np.linspace(t_min, t_max, nt)
    rs = np.linspace(r_min, r_max, nr)
    out = []
    for t in ts:
        for r in rs:
            p = RadialPoint(t=float(t), r=float(r))
            out.append((p, killing_xi(p)))
    return out
