"""Monte Carlo estimate of the channel variance from sampled field paths.

The variance equals the expectation of ``|integral_0^t e^{i delta s} B(s) ds|^2``
over realizations of one real Gaussian field component, which follows from
expanding the squared modulus against the field covariance.  Sampling uses
the exact stationary OU discretization (no process-discretization bias);
the only bias left is the trapezoid rule of the path integral, which is
O(dt^2).  This gives an estimator of the variance that is independent of
the closed form it validates.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter

from ._backend import kernels
from .exceptions import ParameterError

_CHUNK = 4096


@dataclass(frozen=True)
class OUTrajectory:
    """A sampled field path: ``values[k]`` at time ``k * dt``."""

    dt: float
    values: np.ndarray


@dataclass(frozen=True)
class MCEstimate:
    """Sample mean with its standard error, reproducible from the seed."""

    mean: float
    std_error: float
    n_samples: int
    seed: int


def _ou_coefficients(p, dt):
    sigma = math.sqrt(p.lam / (2.0 * p.t_env))
    decay = math.exp(-dt / p.t_env)
    kick = sigma * math.sqrt(1.0 - decay * decay)
    return sigma, decay, kick


def sample_ou_path(p, dt, n_steps, seed):
    """One stationary OU path of ``n_steps`` exact-transition steps.

    Starts from the stationary distribution and applies
    ``x_{k+1} = x_k e^{-dt/t_env} + sqrt(var*(1-e^{-2dt/t_env})) xi_k``
    with independent standard normals, so every marginal is exactly
    stationary for any step size.  Returns ``n_steps + 1`` values covering
    ``[0, n_steps * dt]``; identical seeds give identical paths.
    """
    dt = float(dt)
    if not (dt > 0 and math.isfinite(dt)):
        raise ParameterError(f"dt must be positive, got {dt}")
    n_steps = int(n_steps)
    if n_steps < 2:
        raise ParameterError(f"n_steps must be at least 2, got {n_steps}")
    sigma, decay, kick = _ou_coefficients(p, dt)
    rng = np.random.default_rng(seed)
    x0 = sigma * rng.standard_normal()
    noise = rng.standard_normal(n_steps)
    tail = lfilter([kick], [1.0, -decay], noise, zi=np.array([decay * x0]))[0]
    return OUTrajectory(dt=dt, values=np.concatenate(([x0], tail)))


def mc_beta_estimate(t, p, dt, n_samples, seed):
    """Estimate the channel variance at time ``t`` from sampled paths.

    Per sample, the path integral ``Z = integral e^{i delta s} B(s) ds`` is
    evaluated by the trapezoid rule on the step grid; the estimate is the
    sample mean of ``|Z|^2`` with its standard error.  The step count is
    rounded so the grid lands exactly on ``t`` (the effective step can
    differ from ``dt`` by up to half a step).
    """
    t = float(t)
    if not (t > 0 and math.isfinite(t)):
        raise ParameterError(f"t must be positive, got {t}")
    dt = float(dt)
    if not (0 < dt <= t / 50.0):
        raise ParameterError(f"dt must be in (0, t/50], got {dt}")
    n_samples = int(n_samples)
    if n_samples < 100:
        raise ParameterError(f"n_samples must be at least 100, got {n_samples}")

    n_steps = int(round(t / dt))
    dt_eff = t / n_steps
    sigma, decay, kick = _ou_coefficients(p, dt_eff)
    s = dt_eff * np.arange(n_steps + 1)
    weights = np.full(n_steps + 1, dt_eff)
    weights[0] *= 0.5
    weights[-1] *= 0.5
    w_re = weights * np.cos(p.delta * s)
    w_im = weights * np.sin(p.delta * s)

    rng = np.random.default_rng(seed)
    sq = np.empty(n_samples)
    done = 0
    while done < n_samples:
        m = min(_CHUNK, n_samples - done)
        x0 = sigma * rng.standard_normal(m)
        noise = rng.standard_normal((m, n_steps))
        sq[done:done + m] = kernels.ou_filtered_sq(x0, noise, decay, kick, w_re, w_im)
        done += m

    mean = float(sq.mean())
    std_error = float(sq.std(ddof=1) / math.sqrt(n_samples))
    return MCEstimate(mean=mean, std_error=std_error,
                      n_samples=n_samples, seed=int(seed))
