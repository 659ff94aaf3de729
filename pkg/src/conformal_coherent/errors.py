"""Exception hierarchy for numerical-domain violations."""


class ConformalCoherentError(Exception):
    """Base class for all library errors."""


class NotPositiveDefinite(ConformalCoherentError):
    """A matrix required to be positive definite has an eigenvalue at or below tolerance."""


class SingularPoint(ConformalCoherentError):
    """A fractional-linear map was evaluated at (or too close to) its pole."""


class NotInGroup(ConformalCoherentError):
    """A matrix fails the defining conditions of the group it was claimed to belong to."""


class QuadratureNotConverged(ConformalCoherentError):
    """Two successive quadrature orders disagree beyond the convergence tolerance."""


class BlockSingular(ConformalCoherentError):
    """Neither diagonal block of a 4x4 matrix is well-conditioned enough for the Schur formula."""


class NumericalSingularity(ConformalCoherentError):
    """A matrix to be inverted is too ill-conditioned (proximity to a domain boundary)."""


class BoundaryPole(ConformalCoherentError):
    """A coherent-state denominator vanished on the closure of the domain."""


class PoleOnShilov(ConformalCoherentError):
    """The tube-variable coherent state was evaluated at a pole of its denominator."""


class ChartSingularity(ConformalCoherentError):
    """A coordinate chart denominator vanished; the point left the chart."""


class StepTooSmall(ConformalCoherentError):
    """A finite-difference step below the cancellation floor was requested."""


class InvalidGrid(ConformalCoherentError):
    """A sampling grid specification is empty or inverted."""


class UnknownSuite(ConformalCoherentError):
    """A verification suite name is not recognized."""
