import numpy as np

from bathywave.core.exceptions.simulation import InvalidParams
from bathywave.core.exceptions.waveform import NegativeTime

#: speed of light in vacuum (m/s)
SPEED_OF_LIGHT = 299_792_458.0

#: refractive index of sea water used by the forward model and the inversions
WATER_REFRACTIVE_INDEX = 1.33


def time_of_flight_distance(delta_t, refractive_index: float = 1.0):
    """Convert a two-way travel time into a one-way distance.

    Args:
        delta_t (float or array): two-way travel time in seconds.
        refractive_index (float, optional): refractive index of the medium. Defaults to ``1.0``.

    Raises:
        NegativeTime: if any ``delta_t`` is negative.
        InvalidParams: if ``refractive_index < 1``.

    Returns:
        float or array: distance in meters, ``(c / n) * delta_t / 2``.
    """
    if not refractive_index >= 1.0:
        raise InvalidParams("refractive_index", refractive_index, "must be >= 1")
    dt = np.asarray(delta_t, dtype=np.float64)
    if np.any(dt < 0):
        raise NegativeTime(float(np.min(dt)))
    distance = (SPEED_OF_LIGHT / refractive_index) * dt / 2.0
    if np.ndim(distance) == 0:
        return float(distance)
    return distance


def two_way_time(distance, refractive_index: float = 1.0):
    """Inverse of :func:`time_of_flight_distance`: seconds needed to travel ``distance`` meters and back."""
    return 2.0 * np.asarray(distance, dtype=np.float64) * refractive_index / SPEED_OF_LIGHT
