"""Qubit dephasing under classical Ornstein-Uhlenbeck noise.

Closed-form channel variance with quadrature and Monte Carlo oracles,
frozen-discord correlation dynamics of the Bell-diagonal family, transition
times, and the capacity-based non-Markovianity measure.
"""

from ._backend import backend_name
from .capacity import (
    BetaExtremum,
    CapacityCurve,
    binary_entropy,
    capacity_curve,
    find_beta_extrema,
    non_markovianity,
    quantum_capacity,
)
from .channel import (
    BellDiagonalState,
    apply_gaussian_dephasing,
    bell_diagonal_matrix,
    dephasing_from_beta,
    evolve_bell_diagonal,
    validate_density_matrix,
)
from .correlations import (
    ContourGrid,
    CorrelationSnapshot,
    TransitionResult,
    classical_correlation,
    contour_grid,
    discord,
    discord_bruteforce,
    dynamics_trace,
    entropy_term,
    mutual_information,
    transition_time,
)
from .exceptions import (
    HorizonError,
    InvalidStateError,
    ParameterError,
    QDephaseError,
    QuadratureError,
)
from .montecarlo import MCEstimate, OUTrajectory, mc_beta_estimate, sample_ou_path
from .noise import (
    OUNoiseParams,
    RescaledParams,
    beta_closed,
    beta_derivative,
    beta_quadrature,
    beta_unscaled,
    lambert_w,
    make_ou_kernel,
    markovian_limit_beta,
    oscillation_threshold,
    ou_kernel,
)

__version__ = "0.1.0"

__all__ = [
    "BellDiagonalState",
    "BetaExtremum",
    "CapacityCurve",
    "ContourGrid",
    "CorrelationSnapshot",
    "HorizonError",
    "InvalidStateError",
    "MCEstimate",
    "OUNoiseParams",
    "OUTrajectory",
    "ParameterError",
    "QDephaseError",
    "QuadratureError",
    "RescaledParams",
    "TransitionResult",
    "apply_gaussian_dephasing",
    "backend_name",
    "bell_diagonal_matrix",
    "beta_closed",
    "beta_derivative",
    "beta_quadrature",
    "beta_unscaled",
    "binary_entropy",
    "capacity_curve",
    "classical_correlation",
    "contour_grid",
    "dephasing_from_beta",
    "discord",
    "discord_bruteforce",
    "dynamics_trace",
    "entropy_term",
    "evolve_bell_diagonal",
    "find_beta_extrema",
    "lambert_w",
    "make_ou_kernel",
    "markovian_limit_beta",
    "mc_beta_estimate",
    "mutual_information",
    "non_markovianity",
    "oscillation_threshold",
    "ou_kernel",
    "quantum_capacity",
    "sample_ou_path",
    "transition_time",
    "validate_density_matrix",
]
