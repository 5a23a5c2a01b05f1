import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from scipy.signal import find_peaks, peak_prominences, peak_widths

from bathywave.core.exceptions.inversion import NoBottomEcho, PeaksUnresolved
from bathywave.simulator._pulse import REFERENCE_WIDTH
from bathywave.wave import WATER_REFRACTIVE_INDEX, Waveform, time_of_flight_distance

logger = logging.getLogger(__name__)

#: bins before the surface echo used to estimate the noise floor
BACKGROUND_BINS = 32

#: smallest resolvable echo separation of the simulated instrument (seconds)
DEFAULT_PULSE_WIDTH = REFERENCE_WIDTH


@dataclass(frozen=True)
class Peak:
    """A local maximum of a waveform.

    ``index`` is the sample of the maximum; ``time`` and ``height`` are refined by a
    three-point parabola through the logarithm of the samples (exact for bell-shaped
    echoes), or through the samples themselves when one of them is not positive.
    """

    index: int
    time: float
    height: float
    prominence: float


def _refine(samples: np.ndarray, i: int):
    if i == 0 or i == len(samples) - 1:
        return 0.0, samples[i]
    y = samples[i - 1 : i + 2]
    log_scale = bool(np.all(y > 0))
    if log_scale:
        y = np.log(y)
    curvature = y[0] - 2 * y[1] + y[2]
    if curvature >= 0:
        return 0.0, samples[i]
    offset = float(np.clip(0.5 * (y[0] - y[2]) / curvature, -0.5, 0.5))
    vertex = y[1] - 0.25 * (y[0] - y[2]) * offset
    return offset, float(np.exp(vertex)) if log_scale else float(vertex)


def default_min_prominence(w: Waveform) -> float:
    """Prominence threshold separating echoes from noise.

    The larger of 2 % of the waveform range and four times the standard deviation of
    the background bins preceding the surface echo.
    """
    samples = w.samples.astype(np.float64)
    spread = float(samples.max() - samples.min())
    floor = float(np.std(samples[: min(BACKGROUND_BINS, len(samples))]))
    return max(0.02 * spread, 4.0 * floor, np.finfo(float).tiny)


def prominences(samples: np.ndarray, indices: np.ndarray) -> np.ndarray:
    """Height of each peak above the lower of its two flanking valleys.

    The valley on each side is the minimum between the peak and the nearest higher
    sample on that side, or the end of the waveform when there is none.
    """
    if len(indices) == 0:
        return np.zeros(0)
    _, left_bases, right_bases = peak_prominences(samples, indices)
    valleys = np.minimum(samples[left_bases], samples[right_bases])
    return samples[indices] - valleys


def detect_peaks(w: Waveform, min_prominence: Optional[float] = None) -> List[Peak]:
    """Local maxima of ``w`` with a prominence of at least ``min_prominence``, sorted by index.

    The prominence of a peak is its height above the lower of the two valleys which
    separate it from higher samples on each side (see :func:`prominences`). Flat tops
    report their middle sample.

    Args:
        w (Waveform): the waveform.
        min_prominence (float, optional): threshold. Defaults to :func:`default_min_prominence`.

    Returns:
        list: the :class:`Peak` objects, possibly empty.
    """
    samples = w.samples.astype(np.float64)
    if min_prominence is None:
        min_prominence = default_min_prominence(w)
    indices, _ = find_peaks(samples)

    peaks = []
    for i, prominence in zip(indices, prominences(samples, indices)):
        if not prominence >= min_prominence:
            continue
        offset, height = _refine(samples, int(i))
        peaks.append(
            Peak(
                index=int(i),
                time=w.grid.t0 + (int(i) + offset) * w.grid.dt,
                height=height,
                prominence=float(prominence),
            )
        )
    return peaks


def surface_and_bottom(
    w: Waveform,
    min_prominence: Optional[float] = None,
    pulse_width: Optional[float] = DEFAULT_PULSE_WIDTH,
):
    """The surface and bottom echoes: the two most prominent peaks, in time order.

    A lone echo wider than ``pulse_width`` at half maximum may hide a bottom echo
    closer than the resolution and is reported as unresolved. ``pulse_width=None``
    disables both resolution checks.

    Raises:
        NoBottomEcho: if fewer than two peaks are found and the waveform is not a merged echo.
        PeaksUnresolved: if the echoes are closer than ``pulse_width`` seconds, or merged into one wide peak.
    """
    peaks = detect_peaks(w, min_prominence)
    if len(peaks) < 2:
        if len(peaks) == 1 and pulse_width is not None:
            samples = w.samples.astype(np.float64)
            width = float(peak_widths(samples, [peaks[0].index], rel_height=0.5)[0][0]) * w.grid.dt
            if width > pulse_width:
                logger.debug(f"single echo {width:.3e} s wide at half maximum, wider than {pulse_width:.3e} s")
                raise PeaksUnresolved(0.0, pulse_width)
        raise NoBottomEcho(len(peaks))

    top = sorted(peaks, key=lambda p: (-p.prominence, p.index))[:2]
    surface, bottom = sorted(top, key=lambda p: p.index)
    separation = bottom.time - surface.time
    if pulse_width is not None and separation < pulse_width:
        raise PeaksUnresolved(separation, pulse_width)
    return surface, bottom


def depth_from_waveform(
    w: Waveform,
    n_w: float = WATER_REFRACTIVE_INDEX,
    min_prominence: Optional[float] = None,
    pulse_width: Optional[float] = DEFAULT_PULSE_WIDTH,
) -> float:
    """Water depth from the time between the surface and the bottom echo.

    Args:
        w (Waveform): the waveform.
        n_w (float, optional): water refractive index. Defaults to ``1.33``.
        min_prominence (float, optional): peak threshold. Defaults to :func:`default_min_prominence`.
        pulse_width (float, optional): smallest resolvable echo separation in seconds. Defaults to ``10e-9``; ``None`` skips the check.

    Raises:
        NoBottomEcho: if fewer than two echoes are detected.
        PeaksUnresolved: if the echoes are closer than ``pulse_width``.

    Returns:
        float: depth in meters.
    """
    surface, bottom = surface_and_bottom(w, min_prominence, pulse_width)
    return time_of_flight_distance(bottom.time - surface.time, n_w)
