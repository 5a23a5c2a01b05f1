import unittest

import numpy as np
import pytest


def _params(**kwargs):
    from bathywave.wave import WaveformParams

    values = dict(depth=10.0, kd=0.1, i_ref=50.0, i_w=0.0, amplitude=1.0, imp_type=0, w_c=0.5)
    values.update(kwargs)
    return WaveformParams(**values)


class TestPulse(unittest.TestCase):
    @pytest.mark.fast
    def test_unit_peak(self):
        from bathywave.simulator import PULSE_FAMILIES, PulseShape, pulse_value

        t = np.linspace(-40e-9, 40e-9, 4001)
        for family in PULSE_FAMILIES:
            for w_c in (0.1, 0.5, 1.0):
                shape = PulseShape(family, w_c)
                assert pulse_value(shape, 0.0) == pytest.approx(1.0)
                g = pulse_value(shape, t)
                assert np.all(g >= 0)
                assert g.max() <= 1.0 + 1e-12

    @pytest.mark.fast
    def test_bell_is_symmetric(self):
        from bathywave.simulator import PulseShape, pulse_value

        shape = PulseShape(0, 0.3)
        t = np.linspace(0, 20e-9, 50)
        np.testing.assert_allclose(pulse_value(shape, t), pulse_value(shape, -t))

    @pytest.mark.fast
    def test_gumbel_right_tail(self):
        from bathywave.simulator import PulseShape, pulse_value

        shape = PulseShape(1, 0.5)
        width = shape.sigma
        assert pulse_value(shape, 3 * width) > pulse_value(shape, -3 * width)

    @pytest.mark.fast
    def test_invalid_shape(self):
        from bathywave.core.exceptions import ConfigError
        from bathywave.simulator import PulseShape

        with pytest.raises(ConfigError):
            PulseShape(3, 0.5)
        with pytest.raises(ConfigError):
            PulseShape(0, 0.0)


class TestSimulateWaveform(unittest.TestCase):
    @pytest.mark.fast
    def test_bottom_echo_position(self):
        from bathywave.simulator import SURFACE_BIN, simulate_waveform

        w = simulate_waveform(_params())
        window = w.samples[SURFACE_BIN + 30 :]
        assert SURFACE_BIN + 30 + int(np.argmax(window)) == SURFACE_BIN + 89
        assert int(np.argmax(w.samples[: SURFACE_BIN + 30])) == SURFACE_BIN

    @pytest.mark.fast
    def test_column_constant_without_attenuation(self):
        from bathywave.simulator import SURFACE_BIN, simulate_waveform

        p = _params(kd=0.0, i_w=1.5, amplitude=2.0, i_s=0.0, i_ref=0.0)
        w = simulate_waveform(p)
        np.testing.assert_allclose(w.samples[SURFACE_BIN + 1 : SURFACE_BIN + 88], 3.0)
        assert w.samples[SURFACE_BIN - 1] == 0.0

    @pytest.mark.fast
    def test_amplitude_linearity(self):
        from bathywave.simulator import simulate_waveform

        one = simulate_waveform(_params(amplitude=2.0, base_intensity=0.05, i_w=1.0))
        two = simulate_waveform(_params(amplitude=4.0, base_intensity=0.05, i_w=1.0))
        np.testing.assert_allclose(two.samples - 0.05, 2 * (one.samples - 0.05), rtol=1e-12, atol=1e-15)

    @pytest.mark.fast
    def test_attenuation_monotonicity(self):
        from bathywave.simulator import simulate_waveform

        low = simulate_waveform(_params(kd=0.1, i_w=1.0))
        high = simulate_waveform(_params(kd=0.4, i_w=1.0))
        assert np.all(high.samples <= low.samples + 1e-15)

    @pytest.mark.fast
    def test_noise_is_seeded(self):
        from bathywave.simulator import simulate_waveform

        p = _params(noise_sigma=0.1)
        assert simulate_waveform(p, seed=4) == simulate_waveform(p, seed=4)
        assert simulate_waveform(p, seed=4) != simulate_waveform(p, seed=5)

    @pytest.mark.fast
    def test_grid_too_short(self):
        from bathywave.core.exceptions.simulation import GridTooShort, InvalidParams
        from bathywave.simulator import simulate_waveform
        from bathywave.wave import TimeGrid

        with pytest.raises(GridTooShort):
            simulate_waveform(_params(), TimeGrid(n_bins=128))
        with pytest.raises(InvalidParams):
            simulate_waveform(_params(depth=-1.0))

    @pytest.mark.fast
    def test_noiseless_samples_nonnegative(self):
        from bathywave.simulator import ParamRanges, sample_params, simulate_waveform

        ranges = ParamRanges(noise_fraction=(0.0, 0.0), base_intensity=(0.0, 0.0))
        for seed in range(100):
            assert np.all(simulate_waveform(sample_params(ranges, seed)).samples >= 0)


class TestSampling(unittest.TestCase):
    @pytest.mark.fast
    def test_draws_stay_in_ranges(self):
        from bathywave.simulator import sample_params

        draws = [sample_params(seed=s) for s in range(2000)]
        assert all(0.15 <= p.depth <= 19 for p in draws)
        assert all(1 <= p.i_ref <= 100 for p in draws)
        assert all(0 <= p.kd <= 1 for p in draws)
        assert all(0 <= p.noise_sigma <= 0.04 * p.amplitude for p in draws)
        assert {p.imp_type for p in draws} == {0, 1, 2}

    @pytest.mark.fast
    def test_seeded_and_degenerate(self):
        from bathywave.simulator import ParamRanges, sample_params

        assert sample_params(seed=9) == sample_params(seed=9)
        p = sample_params(ParamRanges(depth=(4.0, 4.0)), seed=1)
        assert p.depth == 4.0

    @pytest.mark.fast
    def test_bad_range(self):
        from bathywave.core.exceptions.simulation import BadRange
        from bathywave.simulator import ParamRanges, sample_params

        with pytest.raises(BadRange):
            sample_params(ParamRanges(kd=(1.0, 0.5)))
        with pytest.raises(BadRange):
            ParamRanges(depth=(0.0, 5.0)).validate()
