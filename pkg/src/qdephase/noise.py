"""Ornstein-Uhlenbeck noise kernel and the dephasing-channel variance.

The channel variance ``beta(t)`` is the double time integral of the field
autocorrelation demodulated at the detuning frequency.  For the OU kernel it
has a closed form; this module provides that closed form (in rescaled,
dimensionless units and in physical units), a general adaptive-quadrature
evaluator for arbitrary kernels, the analytic time derivative, the
white-noise (Markovian) limit, and the detuning threshold above which the
variance oscillates.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import quad

from ._backend import kernels
from .exceptions import ParameterError, QuadratureError

#: Autocorrelation evaluator ``(t1, t2) -> covariance``.
KernelFunction = Callable[[float, float], float]

LAMBERT_W_RESIDUAL = 1e-12


@dataclass(frozen=True)
class OUNoiseParams:
    """OU field parameters in physical units.

    Attributes
    ----------
    lam : float
        Coupling strength (1/time).  Must be positive.
    delta : float
        Detuning between system and field central frequency (1/time).
        Either sign is accepted; the variance is even in the detuning.
    t_env : float
        Environment correlation time (time).  Must be positive.
    """

    lam: float
    delta: float
    t_env: float

    def __post_init__(self):
        if not (self.lam > 0 and math.isfinite(self.lam)):
            raise ParameterError(f"coupling must be positive, got {self.lam}")
        if not (self.t_env > 0 and math.isfinite(self.t_env)):
            raise ParameterError(f"correlation time must be positive, got {self.t_env}")
        if not math.isfinite(self.delta):
            raise ParameterError(f"detuning must be finite, got {self.delta}")

    def rescaled(self):
        """Dimensionless parameters ``(lam*t_env, delta*t_env)``."""
        return RescaledParams(self.lam * self.t_env, self.delta * self.t_env)


@dataclass(frozen=True)
class RescaledParams:
    """Dimensionless noise parameters; times paired with these are ``t/t_env``.

    A negative detuning is mapped to its absolute value on construction
    (the variance depends on the detuning only through even combinations).
    """

    lam: float
    delta: float

    def __post_init__(self):
        if not (self.lam > 0 and math.isfinite(self.lam)):
            raise ParameterError(f"rescaled coupling must be positive, got {self.lam}")
        if not math.isfinite(self.delta):
            raise ParameterError(f"rescaled detuning must be finite, got {self.delta}")
        object.__setattr__(self, "delta", abs(self.delta))


def ou_kernel(t1, t2, p):
    """OU autocorrelation ``lam/(2 t_env) * exp(-|t1 - t2| / t_env)``."""
    return p.lam / (2.0 * p.t_env) * math.exp(-abs(t1 - t2) / p.t_env)


def make_ou_kernel(p):
    """OU autocorrelation of `p` as a ``KernelFunction`` closure."""
    return lambda t1, t2: ou_kernel(t1, t2, p)


def _check_time(t, name="t"):
    t = float(t)
    if not (t >= 0 and math.isfinite(t)):
        raise ParameterError(f"{name} must be a finite nonnegative time, got {t}")
    return t


def beta_closed(t_r, p):
    """Channel variance at rescaled time(s) ``t_r``, in closed form.

    Vanishes at ``t_r = 0`` and diverges linearly as ``t_r -> inf``; for
    detunings above `oscillation_threshold` it is non-monotonic.  Accepts a
    scalar (returns float) or array_like (returns ndarray).
    """
    if np.ndim(t_r) == 0:
        return kernels.beta_scalar(_check_time(t_r, "t_r"), p.lam, p.delta)
    t_r = np.asarray(t_r, dtype=np.float64)
    if t_r.size and (t_r.min() < 0 or not np.isfinite(t_r).all()):
        raise ParameterError("times must be finite and nonnegative")
    return kernels.beta_grid(t_r.ravel(), p.lam, p.delta).reshape(t_r.shape)


def beta_derivative(t_r, p):
    """Analytic d(beta)/dt at rescaled time(s) ``t_r``.

    The closed form collapses to
    ``lam/(1+d^2) * [1 - e^-t (cos dt - d sin dt)]``; it is zero at
    ``t_r = 0``, strictly positive for all ``t_r > 0`` below the oscillation
    threshold, and changes sign above it.
    """
    if np.ndim(t_r) == 0:
        return kernels.dbeta_scalar(_check_time(t_r, "t_r"), p.lam, p.delta)
    t_r = np.asarray(t_r, dtype=np.float64)
    if t_r.size and (t_r.min() < 0 or not np.isfinite(t_r).all()):
        raise ParameterError("times must be finite and nonnegative")
    return kernels.dbeta_grid(t_r.ravel(), p.lam, p.delta).reshape(t_r.shape)


def beta_unscaled(t, p):
    """Channel variance at physical time ``t`` for physical-unit parameters.

    Written out in physical units rather than delegating to `beta_closed`,
    so the rescaling identity ``beta_unscaled(t, p) ==
    beta_closed(t/t_env, p.rescaled())`` is a genuine cross-check of both
    expressions.
    """
    t = _check_time(t)
    dte = p.delta * p.t_env
    d2 = dte * dte
    osc = (1.0 - d2) * math.cos(p.delta * t) - 2.0 * dte * math.sin(p.delta * t)
    return (p.lam / (1.0 + d2) ** 2) * (
        t - p.t_env + d2 * (t + p.t_env) + p.t_env * math.exp(-t / p.t_env) * osc
    )


def markovian_limit_beta(t, lam):
    """White-noise limit of the variance: ``lam * t``.

    As the correlation time goes to zero the channel becomes a phase
    diffusion channel with dephasing rate equal to the coupling; the
    exponentially decaying correction vanishes with ``t_env``.
    """
    t = _check_time(t)
    if not (lam > 0 and math.isfinite(lam)):
        raise ParameterError(f"coupling must be positive, got {lam}")
    return lam * t


def beta_quadrature(t, kernel, delta, tol=1e-9):
    """Channel variance by adaptive double quadrature of an arbitrary kernel.

    Integrates ``cos((s1-s2)*delta) * kernel(s1, s2)`` over ``[0,t]^2``.
    The integrand is symmetric under ``s1 <-> s2`` for a symmetric kernel,
    so integration runs over the ``s1 >= s2`` triangle and is doubled; this
    keeps any ``|s1 - s2|`` kink (as in the OU kernel) on the boundary of
    the inner integration range instead of in its interior.

    Parameters
    ----------
    t : float
        Upper integration time, >= 0.
    kernel : KernelFunction
        Symmetric autocorrelation evaluator.
    delta : float
        Demodulation (detuning) frequency, in the same units as ``1/t``.
    tol : float
        Relative tolerance of the outer quadrature, in ``(0, 1e-3]``.

    Raises
    ------
    QuadratureError
        If the adaptive refinement limit is reached before ``tol``.
    """
    t = _check_time(t)
    tol = float(tol)
    if not (0.0 < tol <= 1e-3):
        raise ParameterError(f"tol must be in (0, 1e-3], got {tol}")
    if t == 0.0:
        return 0.0
    inner_tol = tol * 1e-2

    def inner(s1):
        val, _ = _quad_checked(
            lambda s2: math.cos((s1 - s2) * delta) * kernel(s1, s2),
            0.0, s1, inner_tol, "inner",
        )
        return val

    val, _ = _quad_checked(inner, 0.0, t, tol, "outer")
    return 2.0 * val


def _quad_checked(f, a, b, tol, which):
    out = quad(f, a, b, epsabs=tol, epsrel=tol, limit=200, full_output=1)
    if len(out) > 3:
        raise QuadratureError(f"{which} quadrature on [{a}, {b}] did not converge: {out[3]}")
    return out[0], out[1]


def lambert_w(x):
    """Principal-branch Lambert W for ``x >= 0`` by Newton iteration.

    Solves ``w * exp(w) = x`` seeded at ``log(1 + x)``, iterating until the
    residual drops below ``LAMBERT_W_RESIDUAL``.  Convergence is fast and
    monotone on the nonnegative axis.
    """
    x = float(x)
    if not (x >= 0 and math.isfinite(x)):
        raise ParameterError(f"lambert_w requires x >= 0, got {x}")
    w = math.log1p(x)
    for _ in range(100):
        ew = math.exp(w)
        resid = w * ew - x
        if abs(resid) <= LAMBERT_W_RESIDUAL:
            return w
        step = resid / (ew * (1.0 + w))
        if w - step == w:
            break  # at machine precision; residual is ulp-limited for large x
        w -= step
    if abs(w * math.exp(w) - x) <= LAMBERT_W_RESIDUAL * max(1.0, x):
        return w
    raise RuntimeError(f"lambert_w({x}) did not reach residual {LAMBERT_W_RESIDUAL}")


def oscillation_threshold():
    """Detuning above which the channel variance oscillates in time.

    Equal to ``(3*pi/2) / W(3*pi/2)``, about 3.644: the rescaled detuning at
    which the decaying oscillatory part of d(beta)/dt first touches the
    constant part.
    """
    arg = 1.5 * math.pi
    return arg / lambert_w(arg)
