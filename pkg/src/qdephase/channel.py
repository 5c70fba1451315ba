"""Gaussian dephasing channel and the Bell-diagonal two-qubit family.

The channel multiplies the number-basis element ``(n, m)`` of a density
matrix by ``exp(-(n-m)^2 * beta / 2)``: populations are untouched,
coherences are suppressed.  The two-qubit initial states of interest here
are the one-parameter Bell-diagonal family; both qubits dephase locally and
independently, which rescales the transverse correlations of the state
while the longitudinal one survives.
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidStateError, ParameterError

HERMITICITY_ATOL = 1e-12
TRACE_ATOL = 1e-12
EIGENVALUE_FLOOR = -1e-10

#: Largest matrix dimension accepted by the generic channel.
MAX_DIM = 32


@dataclass(frozen=True)
class BellDiagonalState:
    """One-parameter Bell-diagonal family, mixing parameter ``|c| < 1``."""

    c: float

    def __post_init__(self):
        if not (abs(self.c) < 1 and math.isfinite(self.c)):
            raise ParameterError(f"mixing parameter must satisfy |c| < 1, got {self.c}")


def _mixing(s):
    """Mixing parameter from a `BellDiagonalState` or a bare float."""
    if isinstance(s, BellDiagonalState):
        return s.c
    return BellDiagonalState(float(s)).c


def dephasing_from_beta(beta):
    """Dephasing factor fed to the bipartite correlation formulas: ``beta / 2``."""
    if not (beta >= 0 and math.isfinite(beta)):
        raise ParameterError(f"beta must be nonnegative, got {beta}")
    return 0.5 * beta


def validate_density_matrix(rho, name="rho"):
    """Check Hermiticity, unit trace, and positivity; return as complex128.

    Raises
    ------
    InvalidStateError
        If any invariant fails (Hermiticity to 1e-12, trace to 1e-12,
        minimum eigenvalue above -1e-10).
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidStateError(f"{name} must be a square matrix, got shape {rho.shape}")
    if not np.isfinite(rho).all():
        raise InvalidStateError(f"{name} has non-finite entries")
    herm_defect = np.abs(rho - rho.conj().T).max()
    if herm_defect > HERMITICITY_ATOL:
        raise InvalidStateError(f"{name} is not Hermitian (defect {herm_defect:.3e})")
    trace_defect = abs(rho.trace() - 1.0)
    if trace_defect > TRACE_ATOL:
        raise InvalidStateError(f"{name} trace deviates from 1 by {trace_defect:.3e}")
    min_eig = np.linalg.eigvalsh(rho).min()
    if min_eig < EIGENVALUE_FLOOR:
        raise InvalidStateError(f"{name} is not positive semidefinite (min eigenvalue {min_eig:.3e})")
    return rho


def apply_gaussian_dephasing(rho, beta):
    """Dephase a number-basis density matrix with channel variance ``beta``.

    Element ``(n, m)`` is multiplied by ``exp(-(n-m)^2 * beta / 2)``.  The
    input is validated; the output is again a valid density matrix (the
    channel is trace preserving and completely positive for ``beta >= 0``).
    """
    rho = validate_density_matrix(rho)
    if not (beta >= 0 and math.isfinite(beta)):
        raise ParameterError(f"beta must be nonnegative, got {beta}")
    dim = rho.shape[0]
    if dim > MAX_DIM:
        raise ParameterError(f"dimension {dim} exceeds supported maximum {MAX_DIM}")
    n = np.arange(dim)
    diff = n[:, None] - n[None, :]
    return rho * np.exp(-0.5 * beta * diff * diff)


def bell_diagonal_matrix(s):
    """4x4 density matrix of the Bell-diagonal family member ``s``.

    Mixes one Bell projector with weight ``(1+c)/2`` and another with
    ``(1-c)/2``, fixed here to the two "+" Bell states; the free sign
    choices only relabel correlations by local unitaries and leave every
    correlation measure unchanged.  In the product basis
    ``{00, 01, 10, 11}`` this gives spin correlations ``(1, c, -c)`` along
    x, y, z.
    """
    c = _mixing(s)
    psi_w = 0.5 * (1.0 + c)  # weight on (|01> + |10>)/sqrt(2)
    phi_w = 0.5 * (1.0 - c)  # weight on (|00> + |11>)/sqrt(2)
    rho = np.zeros((4, 4), dtype=np.complex128)
    rho[0, 0] = rho[3, 3] = 0.5 * phi_w
    rho[0, 3] = rho[3, 0] = 0.5 * phi_w
    rho[1, 1] = rho[2, 2] = 0.5 * psi_w
    rho[1, 2] = rho[2, 1] = 0.5 * psi_w
    return rho


def evolve_bell_diagonal(s, dephasing):
    """Bell-diagonal state after local dephasing with factor ``dephasing``.

    Each qubit passes through the Gaussian dephasing channel; the two-flip
    coherences (the only ones this family has) pick up ``exp(-dephasing)``
    in total while the populations stay fixed.  At ``dephasing = 0`` this
    is exactly `bell_diagonal_matrix`.
    """
    if not (dephasing >= 0 and math.isfinite(dephasing)):
        raise ParameterError(f"dephasing factor must be nonnegative, got {dephasing}")
    rho = bell_diagonal_matrix(s)
    n = np.arange(2)
    flips = (n[:, None] != n[None, :]).astype(np.float64)
    factor = np.exp(-0.5 * dephasing * (np.add.outer(flips, flips)))
    # reorder the (a, a', b, b') outer sum to the (ab, a'b') matrix layout
    factor = factor.transpose(0, 2, 1, 3).reshape(4, 4)
    return rho * factor
