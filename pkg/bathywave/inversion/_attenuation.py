import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import linregress

from bathywave.core.exceptions import BathywaveError
from bathywave.core.exceptions.inversion import SingularFit
from bathywave.core.exceptions.waveform import DegenerateWaveform
from bathywave.inversion._peaks import DEFAULT_PULSE_WIDTH, surface_and_bottom
from bathywave.wave import WATER_REFRACTIVE_INDEX, Waveform, time_of_flight_distance

logger = logging.getLogger(__name__)

#: depth offset of the log-linear attenuation model (meters)
DEPTH_OFFSET = 0.2


@dataclass(frozen=True)
class AttenuationFit:
    """Least-squares line through ``(depth, ln(bottom intensity))`` points.

    ``kd_hat`` is the magnitude of the slope; ``log_eta_e0`` recovers ``ln(eta * E0)``
    from the intercept under the model ``ln E = -C (z + 0.2) + ln(eta * E0)``.
    """

    kd_hat: float
    intercept: float
    r2: float
    n_points: int
    slope: float
    stderr: float

    @property
    def log_eta_e0(self) -> float:
        return self.intercept - DEPTH_OFFSET * self.slope


def log_intensity_depth_pairs(
    waveforms: Sequence[Waveform],
    n_w: float = WATER_REFRACTIVE_INDEX,
    min_prominence: Optional[float] = None,
    pulse_width: Optional[float] = DEFAULT_PULSE_WIDTH,
    report: Optional[list] = None,
) -> List[Tuple[float, float]]:
    """Depth and log bottom-echo height of every waveform with a resolvable bottom.

    The bottom height is taken from the raw waveform. Waveforms without a usable bottom
    echo are skipped; when ``report`` is a list, ``(index, error)`` is appended for each.

    Returns:
        list: ``(depth, log_intensity)`` pairs in input order.
    """
    pairs = []
    skipped = 0
    for i, w in enumerate(waveforms):
        try:
            surface, bottom = surface_and_bottom(w, min_prominence, pulse_width)
            if not bottom.height > 0:
                raise DegenerateWaveform(bottom.height)
        except BathywaveError as e:
            skipped += 1
            if report is not None:
                report.append((i, e))
            continue
        depth = time_of_flight_distance(bottom.time - surface.time, n_w)
        pairs.append((depth, float(np.log(bottom.height))))
    if skipped:
        logger.warning(f"skipped {skipped} of {len(waveforms)} waveform(s) without a resolvable bottom echo")
    return pairs


def fit_attenuation(points: Sequence[Tuple[float, float]]) -> AttenuationFit:
    """Ordinary least squares of log intensity on depth.

    Raises:
        SingularFit: if fewer than two distinct depths are given.
    """
    points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    depth, log_intensity = points[:, 0], points[:, 1]
    n_distinct = len(np.unique(depth))
    if len(points) < 2 or n_distinct < 2:
        raise SingularFit(len(points), n_distinct)

    result = linregress(depth, log_intensity)
    return AttenuationFit(
        kd_hat=abs(float(result.slope)),
        intercept=float(result.intercept),
        r2=float(result.rvalue) ** 2,
        n_points=len(points),
        slope=float(result.slope),
        stderr=float(result.stderr),
    )


def kd_scatter(
    waveforms: Sequence[Waveform],
    n_w: float = WATER_REFRACTIVE_INDEX,
    min_prominence: Optional[float] = None,
    pulse_width: Optional[float] = DEFAULT_PULSE_WIDTH,
):
    """Pairs, fit and skip report of a set of waveforms in one call.

    Returns:
        tuple: ``(pairs, fit, skipped)``.
    """
    skipped = []
    pairs = log_intensity_depth_pairs(waveforms, n_w, min_prominence, pulse_width, skipped)
    return pairs, fit_attenuation(pairs), skipped
