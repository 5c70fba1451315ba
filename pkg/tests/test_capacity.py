import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qdephase import (
    ParameterError,
    RescaledParams,
    beta_closed,
    beta_derivative,
    binary_entropy,
    capacity_curve,
    find_beta_extrema,
    non_markovianity,
    quantum_capacity,
)

H2_075 = 0.8112781244591328
NQ_5 = 0.021059248665157848   # frozen; reference value 0.021059
NQ_10 = 0.047582442600156316  # frozen; reference value 0.047582


class TestBinaryEntropy:
    def test_peak_and_edges(self):
        assert binary_entropy(0.5) == 1.0
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0

    def test_reference_value(self):
        assert binary_entropy(0.75) == pytest.approx(H2_075, abs=1e-15)
        assert binary_entropy(0.25) == pytest.approx(H2_075, abs=1e-15)

    @given(st.floats(0, 1))
    def test_symmetry(self, p):
        assert binary_entropy(p) == pytest.approx(binary_entropy(1.0 - p), abs=1e-12)

    def test_domain(self):
        with pytest.raises(ParameterError):
            binary_entropy(-0.1)
        with pytest.raises(ParameterError):
            binary_entropy(1.1)


class TestQuantumCapacity:
    def test_transparent_channel(self):
        assert quantum_capacity(0.0) == 1.0

    def test_fully_dephased(self):
        assert quantum_capacity(50.0) == pytest.approx(0.0, abs=1e-12)

    def test_half_coherence(self):
        assert quantum_capacity(0.5 * math.log(2.0)) == pytest.approx(
            1.0 - H2_075, abs=1e-14)

    def test_strictly_decreasing(self):
        lams = np.linspace(0.0, 5.0, 50)
        vals = [quantum_capacity(l) for l in lams]
        assert all(b < a for a, b in zip(vals, vals[1:]))

    def test_domain(self):
        with pytest.raises(ParameterError):
            quantum_capacity(-0.01)


class TestCapacityCurve:
    def test_starts_at_one(self):
        curve = capacity_curve(RescaledParams(1.0, 7.0), [0.0, 1.0])
        assert curve.values[0] == 1.0

    def test_bounded(self):
        for delta in (0.0, 1.0, 5.0, 15.0):
            curve = capacity_curve(RescaledParams(1.0, delta), np.linspace(0, 30, 400))
            vals = np.array(curve.values)
            assert vals.min() >= 0.0 and vals.max() <= 1.0

    def test_monotone_below_threshold(self):
        curve = capacity_curve(RescaledParams(1.0, 1.0), np.linspace(0, 20, 2001))
        assert np.diff(curve.values).max() <= 1e-12

    def test_recoveries_above_threshold(self):
        curve = capacity_curve(RescaledParams(1.0, 10.0), np.linspace(0, 5, 2001))
        assert np.diff(curve.values).max() > 1e-6

    def test_detuning_ordering_at_fixed_time(self):
        vals = [capacity_curve(RescaledParams(1.0, d), [5.0]).values[0]
                for d in (1.0, 5.0, 10.0, 15.0)]
        assert vals[3] > vals[2] > vals[1] > vals[0]

    def test_matches_scalar_definition(self):
        p = RescaledParams(1.0, 5.0)
        curve = capacity_curve(p, [0.7])
        expected = quantum_capacity(0.5 * beta_closed(0.7, p))
        assert curve.values[0] == pytest.approx(expected, abs=1e-14)

    def test_rejects_bad_grid(self):
        with pytest.raises(ParameterError):
            capacity_curve(RescaledParams(1.0, 1.0), [1.0, 0.5])


class TestFindBetaExtrema:
    def test_empty_below_threshold(self):
        for delta in (0.0, 1.0, 3.6):
            assert find_beta_extrema(RescaledParams(1.0, delta)) == []

    def test_nonempty_just_above_threshold(self):
        assert len(find_beta_extrema(RescaledParams(1.0, 3.7))) == 2

    def test_structure_at_detuning_ten(self):
        ext = find_beta_extrema(RescaledParams(1.0, 10.0))
        assert len(ext) == 6
        assert [e.kind for e in ext] == ["maximum", "minimum"] * 3
        times = [e.time for e in ext]
        assert all(b > a for a, b in zip(times, times[1:]))
        np.testing.assert_allclose(
            times, [0.338125, 0.619687, 0.979257, 1.231802, 1.634286, 1.828156],
            atol=1e-5)

    def test_derivative_vanishes_at_extrema(self):
        p = RescaledParams(1.0, 10.0)
        for e in find_beta_extrema(p):
            assert abs(beta_derivative(e.time, p)) <= 1e-10
            assert e.beta == pytest.approx(beta_closed(e.time, p), abs=1e-14)

    def test_domain(self):
        p = RescaledParams(1.0, 5.0)
        with pytest.raises(ParameterError):
            find_beta_extrema(p, horizon=0.0)
        with pytest.raises(ParameterError):
            find_beta_extrema(p, amp_tol=-1.0)


class TestNonMarkovianity:
    @pytest.mark.parametrize("delta", [0.0, 1.0, 2.0, 3.0, 3.6])
    def test_exact_zero_below_threshold(self, delta):
        assert non_markovianity(RescaledParams(1.0, delta)) == 0.0

    def test_reference_values(self):
        assert non_markovianity(RescaledParams(1.0, 5.0)) == pytest.approx(NQ_5, abs=1e-12)
        assert non_markovianity(RescaledParams(1.0, 10.0)) == pytest.approx(NQ_10, abs=1e-12)
        assert NQ_5 == pytest.approx(0.021059, abs=1e-3)
        assert NQ_10 == pytest.approx(0.047582, abs=1e-3)

    def test_increases_with_detuning(self):
        vals = [non_markovianity(RescaledParams(1.0, d)) for d in range(4, 12)]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    @pytest.mark.parametrize("delta", [5.0, 10.0])
    def test_fine_grid_positive_variation_oracle(self, delta):
        # independent route: total positive increment of the capacity on a
        # dense grid must telescope to the extrema-difference value
        p = RescaledParams(1.0, delta)
        t = np.arange(0.0, 26.0, 1e-3)
        vals = np.asarray(capacity_curve(p, t).values)
        rises = np.diff(vals)
        grid_total = rises[rises > 0].sum()
        assert grid_total == pytest.approx(non_markovianity(p), abs=1e-6)

    @pytest.mark.parametrize("delta", [1.0, 5.0, 10.0])
    def test_capacity_variance_duality(self, delta):
        # capacity rises exactly where the variance falls
        p = RescaledParams(1.0, delta)
        h = 1e-5
        for t in np.linspace(0.1, 4.0, 40):
            slope_beta = beta_derivative(t, p)
            if abs(slope_beta) <= 1e-10:
                continue
            qd = capacity_curve(p, [t - h, t + h]).values
            slope_q = (qd[1] - qd[0]) / (2.0 * h)
            assert np.sign(slope_q) == -np.sign(slope_beta)
