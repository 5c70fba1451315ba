import math

import numpy as np
import pytest

from qdephase import (
    OUNoiseParams,
    ParameterError,
    RescaledParams,
    beta_closed,
    mc_beta_estimate,
    sample_ou_path,
)

P_UNIT = OUNoiseParams(lam=1.0, delta=0.0, t_env=1.0)


def discrete_expectation(t, p, dt):
    """Exact expectation of the trapezoid estimator (covariance double sum).

    Independent of the sampling path: evaluates the demodulated kernel on
    the step grid directly, so the difference to the closed form is exactly
    the quadrature bias of the estimator.
    """
    n = int(round(t / dt))
    s = (t / n) * np.arange(n + 1)
    w = np.full(n + 1, t / n)
    w[0] *= 0.5
    w[-1] *= 0.5
    gap = s[:, None] - s[None, :]
    cov = p.lam / (2.0 * p.t_env) * np.exp(-np.abs(gap) / p.t_env)
    return float(np.einsum("i,j,ij,ij->", w, w, np.cos(p.delta * gap), cov))


class TestSampleOUPath:
    def test_deterministic_given_seed(self):
        a = sample_ou_path(P_UNIT, 0.05, 100, seed=7)
        b = sample_ou_path(P_UNIT, 0.05, 100, seed=7)
        np.testing.assert_array_equal(a.values, b.values)
        assert a.dt == 0.05

    def test_seed_changes_path(self):
        a = sample_ou_path(P_UNIT, 0.05, 100, seed=7)
        b = sample_ou_path(P_UNIT, 0.05, 100, seed=8)
        assert not np.array_equal(a.values, b.values)

    def test_length_covers_requested_steps(self):
        assert sample_ou_path(P_UNIT, 0.1, 25, seed=0).values.shape == (26,)

    def test_stationary_variance(self):
        # variance of the initial sample across many paths
        n = 10_000
        x0 = np.array([sample_ou_path(P_UNIT, 0.1, 2, seed=s).values[0]
                       for s in range(n)])
        stderr = 0.5 * math.sqrt(2.0 / (n - 1))
        assert abs(x0.var(ddof=1) - 0.5) <= 3.0 * stderr

    def test_lag_one_autocorrelation(self):
        dt = 0.1
        n = 10_000
        pairs = np.array([sample_ou_path(P_UNIT, dt, 2, seed=s).values[:2]
                          for s in range(n)])
        x, y = pairs[:, 0], pairs[:, 1]
        corr = (x * y).mean() / math.sqrt(x.var() * y.var())
        stderr = (1.0 - math.exp(-2.0 * dt)) / math.sqrt(n)
        assert abs(corr - math.exp(-dt)) <= 3.0 * stderr

    def test_domain(self):
        with pytest.raises(ParameterError):
            sample_ou_path(P_UNIT, 0.0, 10, seed=1)
        with pytest.raises(ParameterError):
            sample_ou_path(P_UNIT, 0.1, 1, seed=1)


class TestMCBetaEstimate:
    def test_deterministic_given_seed(self):
        a = mc_beta_estimate(2.0, P_UNIT, 0.01, 500, seed=11)
        b = mc_beta_estimate(2.0, P_UNIT, 0.01, 500, seed=11)
        assert a == b

    @pytest.mark.parametrize("delta", [0.0, 5.0])
    def test_matches_closed_form(self, delta):
        p = OUNoiseParams(lam=1.0, delta=delta, t_env=1.0)
        est = mc_beta_estimate(2.0, p, 0.005, 20_000, seed=2024)
        closed = beta_closed(2.0, p.rescaled())
        bias = abs(discrete_expectation(2.0, p, 0.005) - closed)
        assert abs(est.mean - closed) <= 3.0 * est.std_error + bias
        # statistics alone must explain the gap to the discrete expectation
        z = (est.mean - discrete_expectation(2.0, p, 0.005)) / est.std_error
        assert abs(z) <= 3.0

    @pytest.mark.parametrize("t,delta", [(1.0, 0.0), (2.0, 0.0), (2.0, 5.0),
                                         (1.0, 10.0), (0.5, 2.0)])
    def test_unbiased_within_budget_across_parameters(self, t, delta):
        p = OUNoiseParams(lam=1.0, delta=delta, t_env=1.0)
        dt = t / 100.0
        est = mc_beta_estimate(t, p, dt, 5_000, seed=314159)
        closed = beta_closed(t, p.rescaled())
        bias = abs(discrete_expectation(t, p, dt) - closed)
        assert abs(est.mean - closed) <= 3.0 * est.std_error + bias

    def test_estimator_bias_is_second_order(self):
        for delta in (0.0, 5.0, 10.0):
            p = OUNoiseParams(lam=1.0, delta=delta, t_env=1.0)
            closed = beta_closed(2.0, p.rescaled())
            b1 = discrete_expectation(2.0, p, 0.005) - closed
            b2 = discrete_expectation(2.0, p, 0.0025) - closed
            assert b1 / b2 == pytest.approx(4.0, abs=0.5)

    def test_stderr_shrinks_with_samples(self):
        small = mc_beta_estimate(2.0, P_UNIT, 0.01, 2_000, seed=5)
        large = mc_beta_estimate(2.0, P_UNIT, 0.01, 8_000, seed=5)
        ratio = large.std_error / small.std_error
        assert 0.4 <= ratio <= 0.6

    def test_short_time_quadratic_onset(self):
        est = mc_beta_estimate(0.05, P_UNIT, 0.001, 20_000, seed=77)
        closed = beta_closed(0.05, RescaledParams(1.0, 0.0))
        bias = abs(discrete_expectation(0.05, P_UNIT, 0.001) - closed)
        assert abs(est.mean - closed) <= 3.0 * est.std_error + bias
        # and the closed form itself sits on the quadratic onset
        assert closed == pytest.approx(0.5 * 0.05**2, rel=0.02)

    def test_metadata(self):
        est = mc_beta_estimate(1.0, P_UNIT, 0.02, 200, seed=3)
        assert est.n_samples == 200
        assert est.seed == 3
        assert est.std_error > 0

    def test_domain(self):
        with pytest.raises(ParameterError):
            mc_beta_estimate(0.0, P_UNIT, 0.001, 200, seed=1)
        with pytest.raises(ParameterError):
            mc_beta_estimate(1.0, P_UNIT, 0.1, 200, seed=1)  # dt > t/50
        with pytest.raises(ParameterError):
            mc_beta_estimate(1.0, P_UNIT, 0.01, 99, seed=1)
