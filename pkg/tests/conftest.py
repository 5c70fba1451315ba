import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_density_matrix(dim, rng):
    """Random full-rank density matrix (Ginibre construction)."""
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = a @ a.conj().T
    rho /= rho.trace().real
    # symmetrize away the last rounding defects
    return 0.5 * (rho + rho.conj().T)
