"""Numerical verification of coherent-state geometry on conformal domains.

From parabola-family metrics on the real line through SL(2,R)/SU(1,1)
covariance, coherent states on the bounded SU(2,2) domain and the future
tube, to the induced conformally flat de Sitter-type space-time metric,
with every identity certified by seeded residual suites.
"""

from . import disk, halfplane, matrix_core, spacetime, su22, suites, tube
from .errors import ConformalCoherentError
from .suites import SuiteReport, run_suite, run_suites

__version__ = "0.1.0"

__all__ = [
    "ConformalCoherentError",
    "SuiteReport",
    "disk",
    "halfplane",
    "matrix_core",
    "run_suite",
    "run_suites",
    "spacetime",
    "su22",
    "suites",
    "tube",
]
