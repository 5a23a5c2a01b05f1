"""Classical waveform inversion: peak detection and time-of-flight depth, look-up-table inversion by merit minimization and attenuation-coefficient regression of the bottom intensity on depth.
"""
from bathywave.inversion._attenuation import (
    DEPTH_OFFSET,
    AttenuationFit,
    fit_attenuation,
    kd_scatter,
    log_intensity_depth_pairs,
)
from bathywave.inversion._lut import LUT_CAP, Lut, build_lut, lut_invert, lut_merits
from bathywave.inversion._peaks import (
    DEFAULT_PULSE_WIDTH,
    Peak,
    default_min_prominence,
    depth_from_waveform,
    detect_peaks,
    prominences,
    surface_and_bottom,
)

__all__ = [
    "AttenuationFit",
    "build_lut",
    "default_min_prominence",
    "DEFAULT_PULSE_WIDTH",
    "DEPTH_OFFSET",
    "depth_from_waveform",
    "detect_peaks",
    "fit_attenuation",
    "kd_scatter",
    "log_intensity_depth_pairs",
    "Lut",
    "LUT_CAP",
    "lut_invert",
    "lut_merits",
    "Peak",
    "prominences",
    "surface_and_bottom",
]
