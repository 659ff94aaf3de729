"""Poincare disk side of the construction.

The 1-D Cayley transform carries the upper half-plane to the unit disk and
intertwines SL(2,R) with SU(1,1) through the fixed matrix gamma_c.  The
parabola metrics pull back to a metric on the boundary circle whose value
coincides with the modulus of the Berezin coherent state eta_v there; the
h = 1/2 Berezin inner product on the disk is exposed for power series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NotInGroup, QuadratureNotConverged
from .halfplane import HalfPlanePoint, SL2RElement

GAMMA_C = (1 - 1j) / 2 * np.array([[1, -1j], [1, 1j]], dtype=complex)
GAMMA_C_INV = (1 - 1j) / 2 * np.array([[1j, 1j], [-1, 1]], dtype=complex)

_J11 = np.diag([1.0, -1.0]).astype(complex)


@dataclass(frozen=True)
class DiskPoint:
    w: complex

    def __post_init__(self):
        if not np.isfinite(self.w) or abs(self.w) >= 1:
            raise ValueError(f"|w| must be < 1, got {self.w}")


@dataclass(frozen=True)
class SU11Element:
    m: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.m, dtype=complex)
        object.__setattr__(self, "m", m)
        res = np.max(np.abs(m.conj().T @ _J11 @ m - _J11))
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if res > 1e-12 or abs(det - 1) > 1e-12:
            raise NotInGroup(f"SU(1,1) residual {res:.3e}, det {det}")

    def act(self, w: complex) -> complex:
        m = self.m
        return (m[0, 0] * w + m[0, 1]) / (m[1, 0] * w + m[1, 1])


def cayley(z: HalfPlanePoint) -> DiskPoint:
    """(z - i)/(z + i): upper half-plane onto the unit disk."""
    return DiskPoint((z.z - 1j) / (z.z + 1j))


def inverse_cayley(w: DiskPoint) -> HalfPlanePoint:
    """i(1 + w)/(1 - w): unit disk back to the upper half-plane."""
    z = 1j * (1 + w.w) / (1 - w.w)
    return HalfPlanePoint(q=z.real, p=z.imag)


def gamma_conjugate(A: SU11Element) -> SL2RElement:
    """gamma_c^-1 A gamma_c, which lands in SL(2,R) for A in SU(1,1)."""
    m = GAMMA_C_INV @ A.m @ GAMMA_C
    if np.max(np.abs(m.imag)) > 1e-10:
        raise NotInGroup(f"conjugate has imaginary residue {np.max(np.abs(m.imag)):.3e}")
    r = m.real
    return SL2RElement(r[0, 0], r[0, 1], r[1, 0], r[1, 1])


def gamma_conjugate_inverse(A: SL2RElement) -> SU11Element:
    """gamma_c A gamma_c^-1, carrying SL(2,R) into SU(1,1)."""
    return SU11Element(GAMMA_C @ A.as_array().astype(complex) @ GAMMA_C_INV)


def circle_metric(xi: DiskPoint, t: float) -> float:
    """Boundary-circle metric (1 - |xi|^2)/|1 - e^{it} conj(xi)|^2."""
    z = np.exp(1j * t)
    return (1 - abs(xi.w) ** 2) / abs(1 - z * np.conj(xi.w)) ** 2


def coherent_eta(v: DiskPoint, z: complex) -> complex:
    """Coherent-state value (1 - |v|^2)/(1 - z conj(v))^2; |z| <= 1 allowed."""
    if abs(z) > 1 + 1e-12:
        raise ValueError(f"|z| must be <= 1, got {abs(z)}")
    return (1 - abs(v.w) ** 2) / (1 - z * np.conj(v.w)) ** 2


def _series_eval(coeffs: Sequence[complex], z: np.ndarray) -> np.ndarray:
    out = np.zeros_like(z)
    for c in reversed(list(coeffs)):
        out = out * z + c
    return out


def _berezin_quadrature(f, g, radial_order: int, angular_n: int) -> complex:
    nodes, weights = np.polynomial.legendre.leggauss(radial_order)
    r = (nodes + 1) / 2
    wr = weights / 2
    theta = 2 * np.pi * np.arange(angular_n) / angular_n
    z = r[:, None] * np.exp(1j * theta)[None, :]
    vals = _series_eval(f, z) * np.conj(_series_eval(g, z)) * r[:, None]
    # (1/pi) * int f conj(g) dA, orientation fixed so monomial norms are positive
    ang = vals.mean(axis=1) * 2 * np.pi
    return complex(np.sum(wr * ang) / np.pi)


def berezin_inner_product(
    f: Sequence[complex],
    g: Sequence[complex],
    radial_order: int = 64,
    rel_tol: float = 1e-10,
) -> complex:
    """Berezin h = 1/2 inner product of power series on the unit disk.

    `f` and `g` are coefficient sequences (constant term first).  The
    normalization is fixed so that (z^n, z^n) = 1/(n+1) > 0.
    """
    n_ang = 4 * (len(f) + len(g) + 2)
    v1 = _berezin_quadrature(f, g, radial_order, n_ang)
    v2 = _berezin_quadrature(f, g, 2 * radial_order, n_ang)
    scale = max(abs(v1), abs(v2), 1.0)
    if abs(v1 - v2) > rel_tol * scale:
        raise QuadratureNotConverged(f"radial orders differ by {abs(v1-v2):.3e}")
    return v2
