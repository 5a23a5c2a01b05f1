import unittest

import numpy as np
import pytest


def _waveform(samples):
    from bathywave.wave import TimeGrid, Waveform

    samples = np.asarray(samples, dtype=np.float64)
    return Waveform(TimeGrid(n_bins=len(samples)), samples)


def _simulate(depth, kd=0.1, w_c=0.3, i_ref=30.0, **kwargs):
    from bathywave.simulator import simulate_waveform
    from bathywave.wave import WaveformParams

    return simulate_waveform(WaveformParams(depth=depth, kd=kd, i_ref=i_ref, i_w=0.0, w_c=w_c, **kwargs))


class TestDetectPeaks(unittest.TestCase):
    @pytest.mark.fast
    def test_no_peaks(self):
        from bathywave.inversion import detect_peaks

        assert detect_peaks(_waveform(np.linspace(0, 1, 50))) == []
        assert detect_peaks(_waveform(np.full(50, 2.0))) == []

    @pytest.mark.fast
    def test_two_echoes(self):
        from bathywave.inversion import detect_peaks
        from bathywave.simulator import SURFACE_BIN

        peaks = detect_peaks(_simulate(10.0))
        assert [p.index for p in peaks] == [SURFACE_BIN, SURFACE_BIN + 89]
        for p in peaks:
            assert p.height >= p.prominence > 0

    @pytest.mark.fast
    def test_refined_height_is_exact_for_bell(self):
        from bathywave.inversion import detect_peaks

        w = _simulate(10.0, kd=0.0, i_ref=5.0)
        bottom = detect_peaks(w)[1]
        assert bottom.height == pytest.approx(5.0, rel=1e-6)

    @pytest.mark.fast
    def test_prominence_uses_lower_valley(self):
        from bathywave.inversion import detect_peaks

        # the second echo sits over a valley of 1 on the left and 0 on the right
        w = _waveform([0, 3, 5, 3, 1, 2, 3, 1.5] + [0] * 8)
        peaks = detect_peaks(w, min_prominence=0.1)
        assert [p.index for p in peaks] == [2, 6]
        assert peaks[0].prominence == pytest.approx(5.0)
        assert peaks[1].prominence == pytest.approx(3.0)
        assert [p.index for p in detect_peaks(w, min_prominence=2.5)] == [2, 6]
        assert [p.index for p in detect_peaks(w, min_prominence=3.5)] == [2]

    @pytest.mark.fast
    def test_prominences_helper(self):
        from bathywave.inversion import prominences

        samples = np.array([0.0, 4.0, 1.0, 2.0, 0.5])
        assert list(prominences(samples, np.array([1, 3]))) == [4.0, 1.5]
        assert len(prominences(samples, np.array([], dtype=int))) == 0


class TestDepth(unittest.TestCase):
    @pytest.mark.fast
    def test_depth_ten_meters(self):
        from bathywave.inversion import depth_from_waveform

        assert depth_from_waveform(_simulate(10.0)) == pytest.approx(10.0, abs=0.113)

    @pytest.mark.fast
    def test_single_peak(self):
        from bathywave.core.exceptions.inversion import NoBottomEcho
        from bathywave.inversion import depth_from_waveform

        w = _simulate(10.0, i_ref=0.0)
        with pytest.raises(NoBottomEcho):
            depth_from_waveform(w)

    @pytest.mark.fast
    def test_merged_echoes(self):
        from bathywave.core.exceptions.inversion import NoBottomEcho, PeaksUnresolved
        from bathywave.inversion import depth_from_waveform

        w = _simulate(0.15, kd=0.0, w_c=1.0, i_ref=1.0)
        with pytest.raises(PeaksUnresolved):
            depth_from_waveform(w)
        with pytest.raises(NoBottomEcho):
            depth_from_waveform(w, pulse_width=None)

    @pytest.mark.fast
    def test_echoes_closer_than_pulse_width(self):
        from bathywave.core.exceptions.inversion import PeaksUnresolved
        from bathywave.inversion import depth_from_waveform

        # 8.9 ns apart, two distinct peaks with a 1 ns pulse
        w = _simulate(1.0, kd=0.0, w_c=0.1, i_ref=1.0)
        with pytest.raises(PeaksUnresolved) as info:
            depth_from_waveform(w)
        assert 0 < info.value.separation < 10e-9
        assert depth_from_waveform(w, pulse_width=5e-9) == pytest.approx(1.0, abs=0.113)

    @pytest.mark.fast
    def test_depth_round_trip(self):
        from bathywave.inversion import depth_from_waveform
        from bathywave.simulator import ParamRanges, sample_params, simulate_waveform

        ranges = ParamRanges(
            depth=(1.5, 19.0),
            kd=(0.0, 0.1),
            i_ref=(10.0, 100.0),
            i_w=(0.0, 0.02),
            noise_fraction=(0.0, 0.0),
            w_c=(0.1, 0.3),
            base_intensity=(0.0, 0.0),
            i_s=(1.0, 2.0),
        )
        errors = []
        for seed in range(1000):
            p = sample_params(ranges, seed)
            errors.append(abs(depth_from_waveform(simulate_waveform(p)) - p.depth))
        assert max(errors) <= 0.113
