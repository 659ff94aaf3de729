"""Seeded random generators for the property and verification suites.

Samples are bounded away from domain boundaries (p >= 0.1, operator norm
<= 0.9, future-cone interior) so that every identity is evaluated in the
well-conditioned regime the tolerances were derived for.
"""

from __future__ import annotations

import numpy as np

from . import matrix_core as mc
from .halfplane import HalfPlanePoint, MetricPerturbation, SL2RElement
from .matrix_core import MinkowskiVector
from .su22 import DomainPoint, ShilovPoint, SU22Element, build_coherent_frame
from .tube import TubePoint, TubeStateParams

DEFAULT_SEED = 42


def rng_from_seed(seed: int = DEFAULT_SEED) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_halfplane_point(rng, p_min: float = 0.1, p_max: float = 10.0) -> HalfPlanePoint:
    return HalfPlanePoint(q=float(rng.uniform(-5, 5)), p=float(rng.uniform(p_min, p_max)))


def random_perturbation(rng) -> MetricPerturbation:
    return MetricPerturbation(dq=float(rng.uniform(-2, 2)), dp=float(rng.uniform(-2, 2)))


def random_sl2r(rng, bound: float = 5.0) -> SL2RElement:
    # row (a, b) with |entries| <= bound; (c, d) completed to det 1
    while True:
        a, b, c = rng.uniform(-bound, bound, size=3)
        if abs(a) > 0.2:
            d = (1 + b * c) / a
            if abs(d) <= bound:
                return SL2RElement(float(a), float(b), float(c), float(d))


def random_domain_point(rng, max_norm: float = 0.9) -> DomainPoint:
    z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    norm = mc.operator_norm(z)
    scale = rng.uniform(0.1, max_norm) / norm
    return DomainPoint(z * scale)


def random_unitary2(rng) -> np.ndarray:
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(g)
    return q @ np.diag(np.diag(r) / np.abs(np.diag(r)))


def random_shilov_point(rng) -> ShilovPoint:
    return ShilovPoint(random_unitary2(rng))


def random_su22(rng, max_norm: float = 0.8) -> SU22Element:
    """Product of a coherent frame and a block-diagonal special unitary.

    Such products cover a full-measure subset of SU(2,2) and are exactly
    constructible from validated pieces.
    """
    frame = build_coherent_frame(random_domain_point(rng, max_norm))
    u = random_unitary2(rng)
    v = random_unitary2(rng)
    # rescale v so det(u) det(v) = 1
    c = 1.0 / np.sqrt(mc.det2(u) * mc.det2(v))
    v = c * v
    z = np.zeros((2, 2), dtype=complex)
    block = SU22Element(u, z, z.copy(), v)
    return frame @ block


def random_future_cone(rng, l0_min: float = 0.5, l0_max: float = 2.0) -> MinkowskiVector:
    l0 = rng.uniform(l0_min, l0_max)
    direction = rng.standard_normal(3)
    direction /= np.linalg.norm(direction)
    spatial = direction * rng.uniform(0, 0.9) * l0
    return MinkowskiVector(float(l0), *map(float, spatial))


def random_tube_params(rng) -> TubeStateParams:
    q = MinkowskiVector(*map(float, rng.uniform(-2, 2, size=4)))
    return TubeStateParams(q, random_future_cone(rng))


def random_tube_point(rng) -> TubePoint:
    p = random_tube_params(rng)
    return TubePoint(p.zeta)


def random_minkowski(rng, bound: float = 3.0) -> MinkowskiVector:
    return MinkowskiVector(*map(float, rng.uniform(-bound, bound, size=4)))
