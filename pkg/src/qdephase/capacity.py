"""Quantum capacity of the dephasing channel and its non-monotonicity measure.

The single-qubit dephasing channel has capacity
``1 - H2((1 + e^{-2*dephasing})/2)``, a strictly decreasing function of the
dephasing factor.  Whenever the channel variance is non-monotonic in time
(detuning above the oscillation threshold) the capacity recovers on the
decreasing stretches of the variance; the measure integrates exactly those
recoveries, which telescopes to capacity differences at alternating
extrema of the variance.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .exceptions import ParameterError
from .noise import beta_closed, beta_derivative

EXTREMUM_DERIVATIVE_TOL = 1e-10


def _xlog2(y):
    return y * math.log2(y) if y > 0.0 else 0.0


def binary_entropy(p):
    """Binary Shannon entropy ``-p log2 p - (1-p) log2 (1-p)`` on [0, 1]."""
    p = float(p)
    if not (0.0 <= p <= 1.0):
        raise ParameterError(f"binary_entropy requires p in [0, 1], got {p}")
    return -(_xlog2(p) + _xlog2(1.0 - p))


def quantum_capacity(dephasing):
    """Dephasing-channel quantum capacity ``1 - H2((1 + e^{-2L})/2)``.

    Equals 1 for a transparent channel and decays to 0 as the dephasing
    factor grows.
    """
    dephasing = float(dephasing)
    if not (dephasing >= 0 and math.isfinite(dephasing)):
        raise ParameterError(f"dephasing factor must be nonnegative, got {dephasing}")
    return 1.0 - binary_entropy(0.5 * (1.0 + math.exp(-2.0 * dephasing)))


def _capacity_from_beta(betas):
    # dephasing = beta/2, so e^{-2L} = e^{-beta}
    p = 0.5 * (1.0 + np.exp(-np.asarray(betas, dtype=np.float64)))
    q = 1.0 - p
    ent = np.zeros_like(p)
    pos = p > 0.0
    ent[pos] -= p[pos] * np.log2(p[pos])
    pos = q > 0.0
    ent[pos] -= q[pos] * np.log2(q[pos])
    return 1.0 - ent


@dataclass(frozen=True)
class CapacityCurve:
    """Sampled capacity over time for one noise-parameter set."""

    times: tuple
    values: tuple


def capacity_curve(p, times):
    """Capacity along a time grid, with dephasing ``beta(t)/2``."""
    times = np.asarray(times, dtype=np.float64)
    if times.ndim != 1 or times.size == 0:
        raise ParameterError("times must be a nonempty 1-d sequence")
    if times[0] < 0 or not np.isfinite(times).all():
        raise ParameterError("times must be finite and nonnegative")
    if np.any(np.diff(times) <= 0):
        raise ParameterError("times must be strictly increasing")
    values = _capacity_from_beta(beta_closed(times, p))
    return CapacityCurve(times=tuple(float(t) for t in times),
                         values=tuple(float(v) for v in values))


@dataclass(frozen=True)
class BetaExtremum:
    """A located extremum of the channel variance."""

    time: float
    kind: str  # "maximum" or "minimum"
    beta: float


def find_beta_extrema(p, horizon=60.0, amp_tol=1e-12):
    """All extrema of the channel variance on ``(0, horizon]``.

    Sign changes of the analytic derivative are bracketed on a grid with at
    least 32 samples per oscillation period and refined by bisection.  The
    oscillatory part of the derivative is bounded by
    ``lam * e^-t / sqrt(1 + delta^2)``, so scanning stops early once that
    envelope falls below ``amp_tol``; below the oscillation threshold the
    derivative never changes sign and the list is empty.
    """
    horizon = float(horizon)
    if not (horizon > 0 and math.isfinite(horizon)):
        raise ParameterError(f"horizon must be positive and finite, got {horizon}")
    amp_tol = float(amp_tol)
    if not (amp_tol > 0):
        raise ParameterError(f"amp_tol must be positive, got {amp_tol}")

    envelope = p.lam / math.sqrt(1.0 + p.delta * p.delta)
    if envelope <= amp_tol:
        return []
    t_stop = min(horizon, math.log(envelope / amp_tol))
    step = math.pi / (16.0 * max(p.delta, 1.0))
    grid = np.arange(step, t_stop, step)
    grid = np.append(grid, t_stop)
    if grid.size < 2:
        return []
    deriv = beta_derivative(grid, p)

    def f(t):
        return kernels.dbeta_scalar(t, p.lam, p.delta)

    extrema = []
    for i in np.flatnonzero(deriv[:-1] * deriv[1:] < 0):
        a, b = grid[i], grid[i + 1]
        fa = deriv[i]
        for _ in range(200):
            if b - a <= 1e-12:
                break
            m = 0.5 * (a + b)
            fm = f(m)
            if fm == 0.0:
                a = b = m
                break
            if (fa < 0) != (fm < 0):
                b = m
            else:
                a, fa = m, fm
        t_star = 0.5 * (a + b)
        kind = "maximum" if deriv[i] > 0 else "minimum"
        extrema.append(BetaExtremum(time=float(t_star), kind=kind,
                                    beta=beta_closed(t_star, p)))
    return extrema


def non_markovianity(p, horizon=60.0):
    """Total capacity regained over all recovery windows.

    Each decreasing stretch of the variance runs from a variance maximum to
    the following minimum; the capacity rise over that stretch is the
    capacity difference at its endpoints.  Exactly zero whenever the
    variance is monotone (no extrema below the horizon).
    """
    extrema = find_beta_extrema(p, horizon=horizon)
    if not extrema:
        return 0.0
    total = 0.0
    for prev, nxt in zip(extrema, extrema[1:]):
        if prev.kind == "maximum" and nxt.kind == "minimum":
            gain = float(_capacity_from_beta([nxt.beta])[0]
                         - _capacity_from_beta([prev.beta])[0])
            total += gain
    return total
