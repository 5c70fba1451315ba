"""Pure-NumPy implementations of the hot numerical kernels.

This is the fallback backend used when the compiled extension
(``qdephase._core``) is unavailable.  Function signatures and semantics
must stay in lockstep with ``_core.pyx``; ``tests/test_backends.py``
cross-checks the two.
"""

import numpy as np

BACKEND = "python"


def beta_grid(t, lambda_r, delta_r):
    """Channel variance of the OU dephasing model on a grid of rescaled times.

    Evaluates the closed form
    ``lam/(1+d^2)^2 * {t - 1 + d^2 (t+1) + e^-t [(1-d^2) cos dt - 2d sin dt]}``
    elementwise over ``t`` (1-d float64 array).
    """
    t = np.asarray(t, dtype=np.float64)
    d2 = delta_r * delta_r
    pref = lambda_r / (1.0 + d2) ** 2
    osc = (1.0 - d2) * np.cos(delta_r * t) - 2.0 * delta_r * np.sin(delta_r * t)
    return pref * (t - 1.0 + d2 * (t + 1.0) + np.exp(-t) * osc)


def dbeta_grid(t, lambda_r, delta_r):
    """Time derivative of `beta_grid`, in closed form.

    Differentiating the closed form collapses to
    ``lam/(1+d^2) * [1 - e^-t (cos dt - d sin dt)]``.
    """
    t = np.asarray(t, dtype=np.float64)
    osc = np.cos(delta_r * t) - delta_r * np.sin(delta_r * t)
    return lambda_r / (1.0 + delta_r * delta_r) * (1.0 - np.exp(-t) * osc)


def beta_scalar(t, lambda_r, delta_r):
    """Scalar fast path of `beta_grid` (used inside bisection loops)."""
    import math

    d2 = delta_r * delta_r
    osc = (1.0 - d2) * math.cos(delta_r * t) - 2.0 * delta_r * math.sin(delta_r * t)
    return (lambda_r / (1.0 + d2) ** 2) * (t - 1.0 + d2 * (t + 1.0) + math.exp(-t) * osc)


def dbeta_scalar(t, lambda_r, delta_r):
    """Scalar fast path of `dbeta_grid`."""
    import math

    osc = math.cos(delta_r * t) - delta_r * math.sin(delta_r * t)
    return lambda_r / (1.0 + delta_r * delta_r) * (1.0 - math.exp(-t) * osc)


def ou_filtered_sq(x0, noise, decay, kick, w_re, w_im):
    """Squared modulus of the phase-filtered time integral of OU paths.

    Runs the exact stationary update ``x_{k+1} = decay*x_k + kick*noise_k``
    from initial values ``x0`` (shape ``(n_paths,)``, already scaled to the
    stationary standard deviation) and accumulates the trapezoid sum
    ``Z = sum_k (w_re[k] + i w_im[k]) * x_k`` where the weights carry both
    the quadrature factor and the demodulation phase.  Returns ``|Z|^2``
    per path.
    """
    n_steps = noise.shape[1]
    x = np.array(x0, dtype=np.float64, copy=True)
    z_re = w_re[0] * x
    z_im = w_im[0] * x
    for k in range(n_steps):
        x = decay * x + kick * noise[:, k]
        z_re += w_re[k + 1] * x
        z_im += w_im[k + 1] * x
    return z_re * z_re + z_im * z_im
