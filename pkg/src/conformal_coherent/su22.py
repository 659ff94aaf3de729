"""SU(2,2), its bounded domain, and the weight-1/4 coherent densities.

Group elements are 4x4 block matrices M = [[A, B], [C, D]] preserving
G = diag(E, -E) with det(M) = 1.  They act on the bounded domain
D = {Z : Z*Z < 1} of 2x2 complex matrices by Z -> (AZ + B)(CZ + D)^{-1}.
The module provides the membership and identity residuals, the
fractional-linear action, the Jacobian determinant det(CZ+D)^{-4}, the
coherent frame M_xi, the coherent densities Phi_xi, and their equivariance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import matrix_core as mc
from .errors import BlockSingular, BoundaryPole, NotInGroup, NumericalSingularity

G_METRIC = np.diag([1, 1, -1, -1]).astype(complex)

MEMBERSHIP_TOL = 1e-10
CONDITION_LIMIT = 1e12


@dataclass(frozen=True)
class DomainPoint:
    z: np.ndarray

    def __post_init__(self):
        z = mc.as_mat2(self.z)
        object.__setattr__(self, "z", z)
        if mc.operator_norm(z) >= 1:
            raise ValueError(f"operator norm {mc.operator_norm(z)} is not < 1")


@dataclass(frozen=True)
class ShilovPoint:
    u: np.ndarray

    def __post_init__(self):
        u = mc.as_mat2(self.u)
        object.__setattr__(self, "u", u)
        if np.max(np.abs(u.conj().T @ u - mc.E2)) > 1e-12:
            raise ValueError("matrix is not unitary")


@dataclass(frozen=True)
class DensityValue:
    value: complex
    weight: Fraction = field(default=Fraction(1, 4))


@dataclass(frozen=True)
class SU22Element:
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, mc.as_mat2(getattr(self, name)))
        res = su22_membership_residual(self.as_mat4())
        if res > MEMBERSHIP_TOL:
            raise NotInGroup(f"membership residual {res:.3e} exceeds {MEMBERSHIP_TOL}")

    @classmethod
    def identity(cls) -> "SU22Element":
        z = np.zeros((2, 2), dtype=complex)
        return cls(mc.E2.copy(), z, z.copy(), mc.E2.copy())

    @classmethod
    def from_mat4(cls, m) -> "SU22Element":
        m = np.asarray(m, dtype=complex)
        return cls(m[:2, :2], m[:2, 2:], m[2:, :2], m[2:, 2:])

    @classmethod
    def diagonal_u1(cls, alpha: float) -> "SU22Element":
        """M(alpha) = diag(e^{i alpha} E, e^{-i alpha} E)."""
        z = np.zeros((2, 2), dtype=complex)
        return cls(np.exp(1j * alpha) * mc.E2, z, z.copy(), np.exp(-1j * alpha) * mc.E2)

    def as_mat4(self) -> np.ndarray:
        return np.block([[self.a, self.b], [self.c, self.d]])

    def __matmul__(self, other: "SU22Element") -> "SU22Element":
        return SU22Element.from_mat4(self.as_mat4() @ other.as_mat4())


def det4(m) -> complex:
    """Direct 4x4 determinant via the Leibniz permutation sum (LU-free)."""
    m = np.asarray(m, dtype=complex)
    total = 0.0 + 0.0j
    for perm in itertools.permutations(range(4)):
        sign = 1
        seen = list(perm)
        for i in range(4):
            for j in range(i + 1, 4):
                if seen[i] > seen[j]:
                    sign = -sign
        total += sign * m[0, perm[0]] * m[1, perm[1]] * m[2, perm[2]] * m[3, perm[3]]
    return total


def su22_membership_residual(m) -> float:
    """Max entrywise residual of M*GM = G (block form) plus |det(M) - 1|."""
    m = np.asarray(m, dtype=complex)
    a, b, c, d = m[:2, :2], m[:2, 2:], m[2:, :2], m[2:, 2:]
    r1 = a @ a.conj().T - b @ b.conj().T - mc.E2
    r2 = d @ d.conj().T - c @ c.conj().T - mc.E2
    r3 = a @ c.conj().T - b @ d.conj().T
    res = max(np.max(np.abs(r1)), np.max(np.abs(r2)), np.max(np.abs(r3)))
    return float(res + abs(np.linalg.det(m) - 1))


def su22_inverse(m: SU22Element) -> SU22Element:
    """M^{-1} = G M* G, i.e. blocks (A*, -C*; -B*, D*)."""
    return SU22Element(m.a.conj().T, -m.c.conj().T, -m.b.conj().T, m.d.conj().T)


def block_det(m) -> complex:
    """det of a 4x4 via the Schur formula, cross-checked between both block forms."""
    m = np.asarray(m, dtype=complex)
    a, b, c, d = m[:2, :2], m[:2, 2:], m[2:, :2], m[2:, 2:]
    vals = []
    if np.linalg.cond(a) < CONDITION_LIMIT:
        vals.append(mc.det2(a) * mc.det2(d - c @ np.linalg.inv(a) @ b))
    if np.linalg.cond(d) < CONDITION_LIMIT:
        vals.append(mc.det2(d) * mc.det2(a - b @ np.linalg.inv(d) @ c))
    if not vals:
        raise BlockSingular("both diagonal blocks are ill-conditioned")
    if len(vals) == 2 and abs(vals[0] - vals[1]) > 1e-10 * max(1.0, abs(vals[0])):
        raise BlockSingular(f"Schur forms disagree: {vals[0]} vs {vals[1]}")
    return vals[0]


def _mobius(m: SU22Element, z: np.ndarray) -> np.ndarray:
    den = m.c @ z + m.d
    if np.linalg.cond(den) > CONDITION_LIMIT:
        raise NumericalSingularity("CZ + D is too ill-conditioned")
    return (m.a @ z + m.b) @ np.linalg.inv(den)


def frac_linear_act(m: SU22Element, z: DomainPoint) -> DomainPoint:
    """(AZ + B)(CZ + D)^{-1}, mapping the bounded domain to itself."""
    return DomainPoint(_mobius(m, z.z))


def shilov_act(m: SU22Element, u: ShilovPoint) -> ShilovPoint:
    """Same Mobius action restricted to the Shilov boundary of unitaries."""
    return ShilovPoint(_mobius(m, u.u))


def euz_residual(m: SU22Element, z1: DomainPoint, z2: DomainPoint) -> float:
    """Residual of E - Z1'* Z2' = (CZ1+D)^{-*} (E - Z1* Z2) (CZ2+D)^{-1}."""
    z1p = _mobius(m, z1.z)
    z2p = _mobius(m, z2.z)
    d1 = np.linalg.inv(m.c @ z1.z + m.d)
    d2 = np.linalg.inv(m.c @ z2.z + m.d)
    lhs = mc.E2 - z1p.conj().T @ z2p
    rhs = d1.conj().T @ (mc.E2 - z1.z.conj().T @ z2.z) @ d2
    return float(np.max(np.abs(lhs - rhs)))


def ezz_residual(m: SU22Element, z: DomainPoint) -> float:
    return euz_residual(m, z, z)


def jacobian_det(m: SU22Element, z: DomainPoint) -> complex:
    """Complex Jacobian determinant det(CZ + D)^{-4} of the Mobius action."""
    den = m.c @ z.z + m.d
    if np.linalg.cond(den) > CONDITION_LIMIT:
        raise NumericalSingularity("CZ + D is too ill-conditioned")
    return mc.det2(den) ** -4


def fd_jacobian_det(map_fn, z: np.ndarray, h: float = 1e-5) -> complex:
    """Finite-difference complex Jacobian determinant of a holomorphic 2x2 map.

    Each of the 4 complex entries is perturbed by +-h along the real axis;
    holomorphy makes the real-direction derivative the complex one.
    """
    jac = np.zeros((4, 4), dtype=complex)
    for k in range(4):
        i, j = divmod(k, 2)
        dz = np.zeros((2, 2), dtype=complex)
        dz[i, j] = h
        diff = (map_fn(z + dz) - map_fn(z - dz)) / (2 * h)
        jac[:, k] = diff.reshape(-1)
    return complex(np.linalg.det(jac))


def build_coherent_frame(xi: DomainPoint) -> SU22Element:
    """The SU(2,2) element M_xi carrying Z = 0 to Z = xi.

    Blocks: A = (E - xi xi*)^{-1/2}, D = (E - xi* xi)^{-1/2}, C = xi* A,
    B = xi D, with the unique positive-definite square roots.
    """
    x = xi.z
    a = mc.herm_inv_sqrt(mc.E2 - x @ x.conj().T)
    d = mc.herm_inv_sqrt(mc.E2 - x.conj().T @ x)
    return SU22Element(a, x @ d, x.conj().T @ a, d)


def coherent_phi(xi: DomainPoint, z) -> DensityValue:
    """Coherent density Phi_xi(Z) = det(E - xi* xi)^{1/2} / det(E - xi* Z).

    The numerator is the positive real root (E - xi* xi is PD on the domain);
    Z may lie on the closure of the domain.
    """
    z = mc.as_mat2(z)
    num = np.sqrt(mc.det2(mc.E2 - xi.z.conj().T @ xi.z).real)
    den = mc.det2(mc.E2 - xi.z.conj().T @ z)
    if abs(den) < 1e-14:
        raise BoundaryPole("det(E - xi* Z) vanishes")
    return DensityValue(complex(num / den))


def equivariance_residual(m: SU22Element, xi: DomainPoint, z: DomainPoint) -> float:
    """Residual of the bi-density equivariance of the coherent system.

    Phi_{xi'}(Z') must equal (det(C xi + D)* / |det(C xi + D)|) det(CZ + D)
    times Phi_xi(Z); the first factor is checked to be a pure phase.
    """
    xi_p = frac_linear_act(m, xi)
    z_p = frac_linear_act(m, z)
    d_xi = mc.det2(m.c @ xi.z + m.d)
    d_z = mc.det2(m.c @ z.z + m.d)
    phase = np.conj(d_xi) / abs(d_xi)
    if abs(abs(phase) - 1) > 1e-13:
        raise NumericalSingularity("phase factor lost unit modulus")
    lhs = coherent_phi(xi_p, z_p.z).value
    rhs = phase * d_z * coherent_phi(xi, z.z).value
    return float(abs(lhs - rhs))


def density_transform(phi: DensityValue, det_czd: complex) -> DensityValue:
    """Weight-1/4 density law: multiply by det(CZ + D) (= det(CZ+D)^{4n}, n = 1/4)."""
    if det_czd == 0:
        raise ValueError("det(CZ + D) must be nonzero")
    return DensityValue(phi.value * det_czd, phi.weight)


def bidensity_transform(phi: DensityValue, det_cxi_d: complex, det_czd: complex) -> DensityValue:
    """Bi-density (1/4, 1/4) law: phase-only factor in the first slot, full det in the second."""
    if det_cxi_d == 0 or det_czd == 0:
        raise ValueError("determinant factors must be nonzero")
    phase = np.conj(det_cxi_d) / abs(det_cxi_d)
    return DensityValue(phi.value * phase * det_czd, phi.weight)
