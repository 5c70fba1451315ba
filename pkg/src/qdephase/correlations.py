"""Correlation dynamics of the dephasing Bell-diagonal family.

Closed-form mutual information, classical correlation, and discord, the
classical-to-quantum transition time where the decaying coherence crosses
the mixing parameter, dynamics traces and the detuning/time boundary grid,
plus a brute-force projective-measurement optimizer that validates the
closed forms from the definition of discord.
"""

import math
from dataclasses import dataclass

import numpy as np

from .channel import validate_density_matrix
from .exceptions import HorizonError, InvalidStateError, ParameterError
from .noise import RescaledParams, beta_closed

ROOT_TIME_TOL = 1e-12


def _xlog2(y):
    return y * math.log2(y) if y > 0.0 else 0.0


def entropy_term(x):
    """The shared entropic summand ``g(x)`` of the correlation formulas.

    ``g(x) = (1-x)/2 log2(1-x) + (1+x)/2 log2(1+x)`` with ``0 log 0 = 0``;
    nonnegative, increasing, and convex on ``[0, 1]`` with ``g(0) = 0`` and
    ``g(1) = 1``.
    """
    x = float(x)
    if not (0.0 <= x <= 1.0):
        raise ParameterError(f"entropy_term requires x in [0, 1], got {x}")
    return 0.5 * (_xlog2(1.0 - x) + _xlog2(1.0 + x))


def _check_pair(c, dephasing):
    c = float(c)
    if not (abs(c) < 1 and math.isfinite(c)):
        raise ParameterError(f"mixing parameter must satisfy |c| < 1, got {c}")
    dephasing = float(dephasing)
    if not (dephasing >= 0 and math.isfinite(dephasing)):
        raise ParameterError(f"dephasing factor must be nonnegative, got {dephasing}")
    return abs(c), dephasing


def mutual_information(c, dephasing):
    """Mutual information of the evolved family: ``g(|c|) + g(e^-dephasing)``."""
    c, lam = _check_pair(c, dephasing)
    return entropy_term(c) + entropy_term(math.exp(-lam))


def classical_correlation(c, dephasing):
    """Classical correlation ``g(max(e^-dephasing, |c|))``.

    Continuous and nonincreasing in the dephasing factor, frozen at
    ``g(|c|)`` once the decaying coherence has dropped below ``|c|``.
    """
    c, lam = _check_pair(c, dephasing)
    return entropy_term(max(math.exp(-lam), c))


def discord(c, dephasing):
    """Quantum discord: mutual information minus classical correlation.

    Equals ``g(|c|)`` while ``e^-dephasing > |c|`` (the frozen regime) and
    ``g(e^-dephasing)`` afterwards; continuous at the crossover.
    """
    return mutual_information(c, dephasing) - classical_correlation(c, dephasing)


@dataclass(frozen=True)
class CorrelationSnapshot:
    """Correlations at one rescaled time, in entropic units (base 2)."""

    time: float
    mutual_info: float
    classical_corr: float
    discord: float


@dataclass(frozen=True)
class TransitionResult:
    """Solutions of ``exp(-beta(t)/2) = c`` found below a horizon."""

    first_crossing: float
    all_crossings: tuple
    horizon: float


def _auto_horizon(level, p):
    # invert the large-time asymptote of the variance, with slack for the
    # decaying oscillatory part
    d2 = p.delta * p.delta
    t_est = level / p.lam * (1.0 + d2) - (d2 - 1.0) / (1.0 + d2)
    return 1.25 * max(t_est, 1.0) + 10.0


def _scan_step(delta):
    # >= 32 samples per oscillation period
    return math.pi / (16.0 * max(abs(delta), 1.0))


def _bisect(f, a, b, fa, tol):
    for _ in range(200):
        if b - a <= tol:
            break
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0:
            return m
        if (fa < 0) != (fm < 0):
            b = m
        else:
            a, fa = m, fm
    return 0.5 * (a + b)


def transition_time(c, p, horizon=None, tol=ROOT_TIME_TOL):
    """Times at which the decaying coherence ``e^{-beta/2}`` equals ``c``.

    Scans ``beta(t) - (-2 ln c)`` for sign changes on a grid fine enough to
    resolve oscillations, then bisects each bracket.  The variance diverges,
    so a crossing always exists for a large enough horizon; when ``horizon``
    is omitted one is derived from the large-time asymptote.

    Parameters
    ----------
    c : float
        Mixing parameter in (0, 1).
    p : RescaledParams
        Noise parameters; times are rescaled.
    horizon : float, optional
        Scan limit.  Raises `HorizonError` if no crossing lies below it.
    tol : float
        Bisection window in time, in ``(0, 1e-10]``.
    """
    c = float(c)
    if not (0.0 < c < 1.0):
        raise ParameterError(f"transition requires c in (0, 1), got {c}")
    if not (0.0 < tol <= 1e-10):
        raise ParameterError(f"tol must be in (0, 1e-10], got {tol}")
    level = -2.0 * math.log(c)
    if horizon is None:
        horizon = _auto_horizon(level, p)
    horizon = float(horizon)
    if not (horizon > 0 and math.isfinite(horizon)):
        raise ParameterError(f"horizon must be positive and finite, got {horizon}")

    grid = np.arange(0.0, horizon, _scan_step(p.delta))
    grid = np.append(grid, horizon)
    h = beta_closed(grid, p) - level

    def f(t):
        return beta_closed(t, p) - level

    crossings = []
    for i in np.flatnonzero(h[:-1] * h[1:] < 0):
        crossings.append(_bisect(f, grid[i], grid[i + 1], h[i], tol))
    for i in np.flatnonzero(h == 0.0):
        if grid[i] > 0.0:
            crossings.append(float(grid[i]))
    crossings.sort()
    deduped = []
    for t in crossings:
        if not deduped or t - deduped[-1] > 10.0 * tol:
            deduped.append(t)
    crossings = deduped

    if not crossings:
        raise HorizonError(
            f"no transition below horizon {horizon} (needs beta >= {level:.6g}, "
            f"best attained {float(h.max()) + level:.6g})",
            horizon=horizon, max_beta=float(h.max()) + level,
        )
    return TransitionResult(first_crossing=crossings[0],
                            all_crossings=tuple(crossings),
                            horizon=horizon)


def dynamics_trace(c, p, times):
    """Correlation snapshots along a time grid, with ``dephasing = beta/2``."""
    times = np.asarray(times, dtype=np.float64)
    if times.ndim != 1 or times.size == 0:
        raise ParameterError("times must be a nonempty 1-d sequence")
    if times[0] < 0 or not np.isfinite(times).all():
        raise ParameterError("times must be finite and nonnegative")
    if np.any(np.diff(times) <= 0):
        raise ParameterError("times must be strictly increasing")
    betas = beta_closed(times, p)
    out = []
    for t, b in zip(times, betas):
        lam = 0.5 * b
        snap = CorrelationSnapshot(
            time=float(t),
            mutual_info=mutual_information(c, lam),
            classical_corr=classical_correlation(c, lam),
            discord=discord(c, lam),
        )
        out.append(snap)
    return out


@dataclass(frozen=True)
class ContourGrid:
    """Transition boundary across detunings, for the detuning-time plane."""

    delta_axis: tuple
    time_axis: tuple
    boundary: tuple  # first crossing per detuning, None where beyond horizon
    horizon: float


def contour_grid(c, lambda_r, delta_values, horizon=None):
    """First transition time for every detuning in ``delta_values``.

    With an explicit ``horizon``, detunings whose transition lies beyond it
    get a ``None`` boundary entry; with ``horizon=None`` each detuning
    uses its own derived horizon and every entry is resolved.
    """
    deltas = [float(d) for d in delta_values]
    if not deltas:
        raise ParameterError("delta_values must be nonempty")
    boundary = []
    horizons = []
    for d in deltas:
        p = RescaledParams(lambda_r, d)
        try:
            res = transition_time(c, p, horizon=horizon)
        except HorizonError as err:
            boundary.append(None)
            horizons.append(err.horizon)
            continue
        boundary.append(res.first_crossing)
        horizons.append(res.horizon)
    h = max(horizons)
    time_axis = tuple(np.linspace(0.0, h, 257))
    return ContourGrid(delta_axis=tuple(deltas), time_axis=time_axis,
                       boundary=tuple(boundary), horizon=h)


# ---------------------------------------------------------------------------
# brute-force discord from the measurement definition


def _entropy_from_eigs(eigs):
    eigs = np.clip(eigs, 0.0, None)
    nz = eigs[eigs > 0.0]
    return float(-(nz * np.log2(nz)).sum())


def _partial_traces(rho):
    r = rho.reshape(2, 2, 2, 2)
    rho_a = np.einsum("abAb->aA", r)
    rho_b = np.einsum("abaB->bB", r)
    return rho_a, rho_b


def _measurement_gain(rho_r, rho_b, s_b, theta, phi):
    """Information gain J for projective measurements along (theta, phi).

    Accepts arrays of angles; returns an array of the same shape.
    """
    theta = np.atleast_1d(np.asarray(theta, dtype=np.float64))
    phi = np.atleast_1d(np.asarray(phi, dtype=np.float64))
    nx = np.sin(theta) * np.cos(phi)
    ny = np.sin(theta) * np.sin(phi)
    nz = np.cos(theta)
    proj = 0.5 * np.stack(
        [np.stack([1.0 + nz, nx - 1j * ny], axis=-1),
         np.stack([nx + 1j * ny, 1.0 - nz], axis=-1)],
        axis=-2,
    )
    # conditional (unnormalized) qubit-B states for the two outcomes
    m_up = np.einsum("gAa,abAB->gbB", proj, rho_r)
    m_dn = rho_b[None, :, :] - m_up

    def _cond_entropy_terms(m):
        p = np.real(m[:, 0, 0] + m[:, 1, 1])
        half_gap = 0.5 * np.real(m[:, 0, 0] - m[:, 1, 1])
        r = np.sqrt(half_gap**2 + np.abs(m[:, 0, 1]) ** 2)
        lo = np.clip(0.5 * p - r, 0.0, None)
        hi = np.clip(0.5 * p + r, 0.0, None)
        ok = p > 1e-14
        out = np.zeros_like(p)
        for lam in (lo, hi):
            frac = np.where(ok, lam / np.where(ok, p, 1.0), 0.0)
            pos = frac > 0.0
            term = np.zeros_like(frac)
            term[pos] = frac[pos] * np.log2(frac[pos])
            out -= np.where(ok, p, 0.0) * term
        return out

    avg_cond = _cond_entropy_terms(m_up) + _cond_entropy_terms(m_dn)
    return s_b - avg_cond


def _golden_max(f, a, b, iters=50):
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = b - inv_phi * (b - a)
    x2 = a + inv_phi * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + inv_phi * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - inv_phi * (b - a)
            f1 = f(x1)
    return (x1, f1) if f1 >= f2 else (x2, f2)


def discord_bruteforce(rho, grid_n=64):
    """Discord of a two-qubit state from the measurement definition.

    Evaluates the information gain J over a ``grid_n x grid_n`` grid of
    measurement directions on qubit A, refines the best grid point with one
    golden-section pass per angle, and returns mutual information minus the
    maximal gain.  For Bell-diagonal inputs the optimum lies on a symmetry
    axis, so grid-plus-refine reaches well below the documented 5e-4
    agreement with the closed forms.
    """
    rho = validate_density_matrix(rho)
    if rho.shape != (4, 4):
        raise InvalidStateError(f"two-qubit (4x4) state required, got shape {rho.shape}")
    grid_n = int(grid_n)
    if grid_n < 32:
        raise ParameterError(f"grid_n must be at least 32, got {grid_n}")

    rho_a, rho_b = _partial_traces(rho)
    s_a = _entropy_from_eigs(np.linalg.eigvalsh(rho_a))
    s_b = _entropy_from_eigs(np.linalg.eigvalsh(rho_b))
    s_ab = _entropy_from_eigs(np.linalg.eigvalsh(rho))
    mutual = s_a + s_b - s_ab

    rho_r = rho.reshape(2, 2, 2, 2)
    thetas = np.linspace(0.0, math.pi, grid_n)
    phis = np.linspace(0.0, 2.0 * math.pi, grid_n, endpoint=False)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    gains = _measurement_gain(rho_r, rho_b, s_b, tt.ravel(), pp.ravel())
    best = int(np.argmax(gains))
    best_theta = tt.ravel()[best]
    best_phi = pp.ravel()[best]
    best_gain = float(gains[best])

    dth = math.pi / (grid_n - 1)
    dph = 2.0 * math.pi / grid_n

    def j_theta(th):
        return float(_measurement_gain(rho_r, rho_b, s_b, th, best_phi)[0])

    theta_star, gain_theta = _golden_max(
        j_theta, max(0.0, best_theta - dth), min(math.pi, best_theta + dth))
    if gain_theta > best_gain:
        best_theta, best_gain = theta_star, gain_theta

    def j_phi(ph):
        return float(_measurement_gain(rho_r, rho_b, s_b, best_theta, ph)[0])

    _, gain_phi = _golden_max(j_phi, best_phi - dph, best_phi + dph)
    best_gain = max(best_gain, gain_phi)

    return mutual - best_gain
