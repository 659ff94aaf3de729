"""Small fixed-size complex linear algebra.

Everything here is for 2x2 (occasionally 4x4) complex matrices: closed-form
determinants, the Hermitian inverse square root via the 2x2 spectral
decomposition, operator norms, and the Pauli-basis correspondence between
Hermitian matrices and real 4-vectors with the (+,-,-,-) quadratic form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotPositiveDefinite

E2 = np.eye(2, dtype=complex)

SIGMA = (
    np.array([[1, 0], [0, 1]], dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

# signature convention (+,-,-,-)
ETA = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class MinkowskiVector:
    x0: float
    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        if not all(np.isfinite([self.x0, self.x1, self.x2, self.x3])):
            raise ValueError("MinkowskiVector components must be finite")

    def as_array(self) -> np.ndarray:
        return np.array([self.x0, self.x1, self.x2, self.x3])


def minkowski_dot(a: MinkowskiVector | np.ndarray, b: MinkowskiVector | np.ndarray) -> float:
    """Lorentz inner product a^mu eta_{mu nu} b^nu."""
    av = a.as_array() if isinstance(a, MinkowskiVector) else np.asarray(a, dtype=float)
    bv = b.as_array() if isinstance(b, MinkowskiVector) else np.asarray(b, dtype=float)
    return float(av @ ETA @ bv)


def as_mat2(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not (np.all(np.isfinite(m.real)) and np.all(np.isfinite(m.imag))):
        raise ValueError("matrix entries must be finite")
    return m


def hermitize(m) -> np.ndarray:
    """Exact symmetrization (m + m*)/2 of a nominally Hermitian matrix."""
    m = as_mat2(m)
    return (m + m.conj().T) / 2


def det2(m) -> complex:
    m = as_mat2(m)
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def herm_eig2(m) -> tuple[float, float]:
    """Eigenvalues (ascending) of a Hermitian 2x2 matrix, closed form."""
    m = as_mat2(m)
    tr = (m[0, 0] + m[1, 1]).real
    dt = det2(m).real
    disc = np.sqrt(max(tr * tr / 4 - dt, 0.0))
    return tr / 2 - disc, tr / 2 + disc


def _herm_fun(m: np.ndarray, f) -> np.ndarray:
    """Apply a scalar function to a Hermitian 2x2 matrix spectrally."""
    lo, hi = herm_eig2(m)
    scale = max(abs(lo), abs(hi), 1.0)
    if hi - lo < 1e-14 * scale:
        # near-scalar matrix: first-order expansion around the mean eigenvalue
        mid = (lo + hi) / 2
        h = 1e-7 * scale
        fprime = (f(mid + h) - f(mid - h)) / (2 * h)
        return f(mid) * E2 + fprime * (m - mid * E2)
    return (f(lo) * (m - hi * E2) + f(hi) * (lo * E2 - m)) / (lo - hi)


def herm_inv_sqrt(m, tol: float = 1e-10) -> np.ndarray:
    """Inverse square root m^{-1/2} of a positive-definite Hermitian 2x2 matrix.

    The result P is the unique Hermitian positive-definite matrix with
    P m P = E.  `tol` is relative to the trace; an eigenvalue at or below
    tol * trace raises NotPositiveDefinite.
    """
    m = hermitize(m)
    lo, _hi = herm_eig2(m)
    tr = (m[0, 0] + m[1, 1]).real
    if lo <= tol * max(tr, 0.0) or tr <= 0.0:
        raise NotPositiveDefinite(f"smallest eigenvalue {lo:.3e} at trace {tr:.3e}")
    return hermitize(_herm_fun(m, lambda lam: 1.0 / np.sqrt(lam)))


def herm_sqrt(m, tol: float = 1e-10) -> np.ndarray:
    """Positive-definite square root of a PD Hermitian 2x2 matrix."""
    m = hermitize(m)
    lo, _hi = herm_eig2(m)
    tr = (m[0, 0] + m[1, 1]).real
    if lo <= tol * max(tr, 0.0) or tr <= 0.0:
        raise NotPositiveDefinite(f"smallest eigenvalue {lo:.3e} at trace {tr:.3e}")
    return hermitize(_herm_fun(m, np.sqrt))


def operator_norm(m) -> float:
    """Largest singular value: sqrt of the top eigenvalue of m* m."""
    m = as_mat2(m)
    _lo, hi = herm_eig2(m.conj().T @ m)
    return float(np.sqrt(max(hi, 0.0)))


def is_positive_definite(m, tol: float = 0.0) -> bool:
    lo, _hi = herm_eig2(hermitize(m))
    return lo > tol


def pauli_compose(x: MinkowskiVector) -> np.ndarray:
    """x^mu sigma_mu as a Hermitian 2x2 matrix."""
    return hermitize(
        x.x0 * SIGMA[0] + x.x1 * SIGMA[1] + x.x2 * SIGMA[2] + x.x3 * SIGMA[3]
    )


def pauli_decompose(w) -> MinkowskiVector:
    """Unique x with pauli_compose(x) = w; det(w) is the Minkowski square of x."""
    w = hermitize(w)
    return MinkowskiVector(
        x0=((w[0, 0] + w[1, 1]) / 2).real,
        x1=((w[0, 1] + w[1, 0]) / 2).real,
        x2=((w[1, 0] - w[0, 1]) / (2j)).real,
        x3=((w[0, 0] - w[1, 1]) / 2).real,
    )
