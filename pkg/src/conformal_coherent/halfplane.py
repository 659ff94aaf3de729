"""Parabola-family metrics on the real line and the SL(2,R) story.

A two-parameter family of parabolas over R defines a vector field
e(x; q, p) = ((x-q)^2/p + p)/2 and hence a metric g = 1/e^2.  The family is
covariant under the fractional-linear SL(2,R) action, the hyperbolic metric
on the upper half-plane is invariant, and the DeWitt-type inner product of
metric perturbations reproduces the hyperbolic metric 4*pi*(dq^2+dp^2)/p^2
on the (q, p) parameter space.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import QuadratureNotConverged, SingularPoint

SINGULARITY_GUARD = 1e-14


@dataclass(frozen=True)
class HalfPlanePoint:
    q: float
    p: float

    def __post_init__(self):
        if not (np.isfinite(self.q) and np.isfinite(self.p) and self.p > 0):
            raise ValueError(f"need finite q and p > 0, got ({self.q}, {self.p})")

    @property
    def z(self) -> complex:
        return complex(self.q, self.p)


@dataclass(frozen=True)
class SL2RElement:
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > 1e-12:
            raise ValueError(f"determinant {det} is not 1")

    @classmethod
    def identity(cls) -> "SL2RElement":
        return cls(1.0, 0.0, 0.0, 1.0)

    def __matmul__(self, other: "SL2RElement") -> "SL2RElement":
        return SL2RElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def as_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])


@dataclass(frozen=True)
class MetricPerturbation:
    dq: float
    dp: float

    def __post_init__(self):
        if not (np.isfinite(self.dq) and np.isfinite(self.dp)):
            raise ValueError("perturbation components must be finite")


def parabola_field(x: float, pt: HalfPlanePoint) -> float:
    """Vector-field value ((x-q)^2/p + p)/2; strictly positive."""
    return 0.5 * ((x - pt.q) ** 2 / pt.p + pt.p)


def metric_g(x: float, pt: HalfPlanePoint) -> float:
    """Metric 4/(p + (x-q)^2/p)^2 = 1/parabola_field^2."""
    return 1.0 / parabola_field(x, pt) ** 2


def _dg(x: float, pt: HalfPlanePoint, h: MetricPerturbation) -> float:
    # dg = dg/dq * dq + dg/dp * dp, recomputed symbolically from g = 4p^2/s^2
    # with s = p^2 + (x-q)^2.
    q, p = pt.q, pt.p
    s = p * p + (x - q) ** 2
    dg_dq = 16 * p * p * (x - q) / s**3
    dg_dp = 8 * p * ((x - q) ** 2 - p * p) / s**3
    return dg_dq * h.dq + dg_dp * h.dp


def sl2r_act(A: SL2RElement, pt: HalfPlanePoint) -> HalfPlanePoint:
    """Fractional-linear action z -> (az+b)/(cz+d) on the upper half-plane."""
    q, p = pt.q, pt.p
    den = A.d**2 + 2 * A.c * A.d * q + A.c**2 * (q * q + p * p)
    re = (A.b * A.d + A.a * A.d * q + A.b * A.c * q + A.a * A.c * (q * q + p * p)) / den
    return HalfPlanePoint(q=re, p=p / den)


def sl2r_act_boundary(A: SL2RElement, x: float) -> float:
    """Boundary action x -> (ax+b)/(cx+d) on the real line."""
    den = A.c * x + A.d
    if abs(den) < SINGULARITY_GUARD * max(abs(A.c * x) + abs(A.d), 1.0):
        raise SingularPoint(f"cx+d vanishes at x={x}")
    return (A.a * x + A.b) / den


def covariance_residual(A: SL2RElement, x: float, pt: HalfPlanePoint) -> float:
    """|e(sigma(x); sigma(q,p)) - sigma'(x) e(x; q,p)|; zero in exact arithmetic."""
    x_new = sl2r_act_boundary(A, x)
    pt_new = sl2r_act(A, pt)
    dsigma = 1.0 / (A.d + A.c * x) ** 2
    return abs(parabola_field(x_new, pt_new) - dsigma * parabola_field(x, pt))


def _jacobian(A: SL2RElement, pt: HalfPlanePoint) -> np.ndarray:
    q, p = pt.q, pt.p
    a, b, c, d = A.a, A.b, A.c, A.d
    den = d * d + 2 * c * d * q + c * c * (q * q + p * p)
    m = (a * d - b * c) / den**2
    diag = d * d + 2 * c * d * q + c * c * (q * q - p * p)
    off = 2 * c * (d + c * q) * p
    return m * np.array([[diag, off], [-off, diag]])


def hyperbolic_invariance_residual(A: SL2RElement, pt: HalfPlanePoint) -> float:
    """Max-norm of J^T G(sigma(z)) J - G(q, p) for the hyperbolic metric G = I/p^2."""
    J = _jacobian(A, pt)
    img = sl2r_act(A, pt)
    G_img = np.eye(2) / img.p**2
    G_pt = np.eye(2) / pt.p**2
    return float(np.max(np.abs(J.T @ G_img @ J - G_pt)))


def dewitt_closed_form(pt: HalfPlanePoint, h: MetricPerturbation) -> float:
    """Closed-form quadratic form 4*pi*(dq^2 + dp^2)/p^2."""
    return 4 * np.pi * (h.dq**2 + h.dp**2) / pt.p**2


def _dewitt_quadrature(pt: HalfPlanePoint, h1, h2, order: int) -> float:
    # x = q + p tan(u) maps R to (-pi/2, pi/2); the integrand becomes a
    # smooth bounded trigonometric expression.
    nodes, weights = np.polynomial.legendre.leggauss(order)
    u = nodes * (np.pi / 2)
    w = weights * (np.pi / 2)
    x = pt.q + pt.p * np.tan(u)
    g = np.array([metric_g(xi, pt) for xi in x])
    vol = 1.0 / np.array([parabola_field(xi, pt) for xi in x])
    f1 = np.array([_dg(xi, pt, h1) for xi in x])
    f2 = np.array([_dg(xi, pt, h2) for xi in x])
    jac = pt.p / np.cos(u) ** 2
    return float(np.sum(w * f1 * f2 / g**2 * vol * jac))


def dewitt_inner_product(
    pt: HalfPlanePoint,
    h1: MetricPerturbation,
    h2: MetricPerturbation,
    order: int = 64,
    rel_tol: float = 1e-9,
) -> float:
    """DeWitt-type inner product int g^-1 h1 g^-1 h2 omega dx over the real line.

    Computed by the tangent substitution plus Gauss-Legendre quadrature at
    `order` and 2*`order` nodes; the two values must agree to `rel_tol`
    relative, else QuadratureNotConverged.
    """
    v1 = _dewitt_quadrature(pt, h1, h2, order)
    v2 = _dewitt_quadrature(pt, h1, h2, 2 * order)
    scale = max(abs(v2), dewitt_closed_form(pt, MetricPerturbation(1.0, 1.0)) * 1e-6)
    if abs(v1 - v2) > rel_tol * scale:
        raise QuadratureNotConverged(f"orders {order}/{2*order} differ by {abs(v1-v2):.3e}")
    return v2
