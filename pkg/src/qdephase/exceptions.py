"""Exception types shared across the package."""


class QDephaseError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(QDephaseError, ValueError):
    """An argument is outside the domain of the requested operation."""


class InvalidStateError(QDephaseError, ValueError):
    """A matrix fails the density-matrix checks (Hermiticity, trace, positivity)."""


class QuadratureError(QDephaseError, RuntimeError):
    """Adaptive quadrature hit its refinement limit before reaching tolerance."""


class HorizonError(QDephaseError, RuntimeError):
    """No root was found below the scan horizon.

    Attributes
    ----------
    horizon : float
        The scan horizon that was exhausted.
    max_beta : float
        Largest channel variance attained on the scan grid, to help pick
        a bigger horizon.
    """

    def __init__(self, message, horizon, max_beta):
        super().__init__(message)
        self.horizon = horizon
        self.max_beta = max_beta
