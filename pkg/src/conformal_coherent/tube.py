"""Future-tube picture of the bounded domain.

The 4-D Cayley transform W = i(E - Z)(E + Z)^{-1} carries the bounded
domain onto the future tube {W = X + iY : X Hermitian, Y > 0} and the
Shilov boundary (minus a set of measure zero) onto Hermitian matrices,
i.e. Minkowski space in Pauli coordinates.  Coherent states are expressed
in tube variables and, fully explicitly, in the real coordinates (q, l, x).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import matrix_core as mc
from .errors import NumericalSingularity, PoleOnShilov
from .matrix_core import MinkowskiVector, minkowski_dot
from .su22 import DomainPoint

CONDITION_LIMIT = 1e12


@dataclass(frozen=True)
class TubePoint:
    w: np.ndarray

    def __post_init__(self):
        w = mc.as_mat2(self.w)
        object.__setattr__(self, "w", w)
        y = mc.hermitize((w - w.conj().T) / 2j)
        if not mc.is_positive_definite(y):
            raise ValueError("imaginary part is not positive definite")

    @property
    def x(self) -> np.ndarray:
        return mc.hermitize((self.w + self.w.conj().T) / 2)

    @property
    def y(self) -> np.ndarray:
        return mc.hermitize((self.w - self.w.conj().T) / 2j)


@dataclass(frozen=True)
class TubeStateParams:
    q: MinkowskiVector
    l: MinkowskiVector

    def __post_init__(self):
        if self.l.x0 <= 0 or minkowski_dot(self.l, self.l) <= 0:
            raise ValueError("l must lie in the open future cone")

    @property
    def zeta(self) -> np.ndarray:
        return mc.pauli_compose(self.q) + 1j * mc.pauli_compose(self.l)


def _inv(m: np.ndarray, what: str) -> np.ndarray:
    if np.linalg.cond(m) > CONDITION_LIMIT:
        raise NumericalSingularity(f"{what} is too ill-conditioned")
    return np.linalg.inv(m)


def cayley4(z: DomainPoint | np.ndarray) -> TubePoint:
    """W = i(E - Z)(E + Z)^{-1}: bounded domain onto the future tube."""
    zm = z.z if isinstance(z, DomainPoint) else mc.as_mat2(z)
    return TubePoint(1j * (mc.E2 - zm) @ _inv(mc.E2 + zm, "E + Z"))


def cayley4_raw(zm) -> np.ndarray:
    """Unvalidated Cayley image, usable on the Shilov boundary."""
    zm = mc.as_mat2(zm)
    return 1j * (mc.E2 - zm) @ _inv(mc.E2 + zm, "E + Z")


def inverse_cayley4(w: TubePoint | np.ndarray) -> DomainPoint:
    """Z = (E + iW)(E - iW)^{-1}: future tube back into the bounded domain."""
    wm = w.w if isinstance(w, TubePoint) else mc.as_mat2(w)
    return DomainPoint((mc.E2 + 1j * wm) @ _inv(mc.E2 - 1j * wm, "E - iW"))


def cayley4_jacobian(w: TubePoint) -> complex:
    """Complex Jacobian determinant dZ/dW = 16 det(E - iW)^{-4}."""
    den = mc.E2 - 1j * w.w
    if np.linalg.cond(den) > CONDITION_LIMIT:
        raise NumericalSingularity("E - iW is too ill-conditioned")
    return 16 * mc.det2(den) ** -4


def cayley4_jacobian_forward(z: DomainPoint) -> complex:
    """Companion direction dW/dZ = 16 det(E + Z)^{-4}."""
    den = mc.E2 + z.z
    if np.linalg.cond(den) > CONDITION_LIMIT:
        raise NumericalSingularity("E + Z is too ill-conditioned")
    return 16 * mc.det2(den) ** -4


def sqrt_principal(c: complex) -> complex:
    """Principal branch square root (nonnegative real part; positive imaginary on the cut)."""
    return complex(np.sqrt(complex(c)))


def params_from_tube_point(p: TubePoint) -> TubeStateParams:
    """Read off (q, l) with zeta = (q + il).sigma from a tube point."""
    return TubeStateParams(mc.pauli_decompose(p.x), mc.pauli_decompose(p.y))


def phi_tube(zeta: TubeStateParams | TubePoint | np.ndarray, w: TubePoint | np.ndarray) -> complex:
    """Coherent state in tube variables: det(zeta - zeta*)^{1/2} / det(W - zeta*).

    det(zeta - zeta*) = -4 l^2 is negative real for l in the future cone, so
    the principal branch gives a positive-imaginary numerator.
    """
    wm = w.w if isinstance(w, TubePoint) else mc.as_mat2(w)
    if isinstance(zeta, TubeStateParams):
        zm = zeta.zeta
    elif isinstance(zeta, TubePoint):
        zm = zeta.w
    else:
        zm = mc.as_mat2(zeta)
    num = sqrt_principal(mc.det2(zm - zm.conj().T))
    den = mc.det2(wm - zm.conj().T)
    if abs(den) < 1e-14:
        raise PoleOnShilov("det(W - zeta*) vanishes")
    return num / den


def phi_explicit(params: TubeStateParams, x: MinkowskiVector) -> complex:
    """Coherent state in real coordinates.

    Phi_{q,l}(x) = -4 l^2 ((x-q)^2 - l^2 - 2i l.(x-q))
                   / ((l^2 - (x-q)^2)^2 + 4 (l.(x-q))^2),
    all products Lorentzian with signature (+,-,-,-).  The denominator is
    strictly positive for l in the open future cone and real x.
    """
    d = x.as_array() - params.q.as_array()
    d2 = minkowski_dot(d, d)
    l2 = minkowski_dot(params.l, params.l)
    ld = minkowski_dot(params.l.as_array(), d)
    den = (l2 - d2) ** 2 + 4 * ld**2
    assert den > 0, "denominator must be positive on the future cone"
    return -4 * l2 * (d2 - l2 - 2j * ld) / den


def rotationally_invariant_state(L: float) -> TubeStateParams:
    """The q = 0, l = (L, 0, 0, 0) state used for the induced metric."""
    return TubeStateParams(MinkowskiVector(0, 0, 0, 0), MinkowskiVector(L, 0, 0, 0))


# The Cayley transform viewed as a (non-unimodular) block Mobius matrix:
# W = (AZ + B)(CZ + D)^{-1} with A = -iE, B = iE, C = E, D = E, det = -4.
CAYLEY_C = mc.E2.copy()
CAYLEY_D = mc.E2.copy()

# Transporting the weight-(1/4, 1/4) bi-density through this Cayley matrix
# reproduces phi_tube exactly, up to one global constant.  The constant is
# fixed analytically at the reference point zeta = iE, W = iE.
TRANSPORT_CONSTANT = -0.5j


def transported_phi(xi: DomainPoint, z) -> complex:
    """coherent_phi pushed to tube variables through the bi-density law.

    Applies the phase-only factor in the state slot and det(CZ + D) in the
    argument slot for the Cayley block matrix, then the fixed global
    constant; must agree with phi_tube at the corresponding tube points.
    """
    from .su22 import coherent_phi

    zm = mc.as_mat2(z)
    d_xi = mc.det2(CAYLEY_C @ xi.z + CAYLEY_D)
    d_z = mc.det2(CAYLEY_C @ zm + CAYLEY_D)
    phase = np.conj(d_xi) / abs(d_xi)
    return TRANSPORT_CONSTANT * phase * d_z * coherent_phi(xi, zm).value
