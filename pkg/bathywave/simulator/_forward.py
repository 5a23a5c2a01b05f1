import logging
from typing import Optional

import numpy as np

from bathywave.core.exceptions.simulation import GridTooShort
from bathywave.simulator._pulse import PulseShape, pulse_value
from bathywave.wave import (
    SPEED_OF_LIGHT,
    WATER_REFRACTIVE_INDEX,
    TimeGrid,
    Waveform,
    WaveformParams,
    add_noise,
)

logger = logging.getLogger(__name__)

#: bin index of the air-water interface echo
SURFACE_BIN = 64


def bottom_travel_time(depth: float, n_w: float = WATER_REFRACTIVE_INDEX) -> float:
    """Two-way travel time between the surface and the bottom in seconds."""
    return 2.0 * depth * n_w / SPEED_OF_LIGHT


def echo_components(
    p: WaveformParams,
    grid: TimeGrid,
    surface_bin: int = SURFACE_BIN,
    n_w: float = WATER_REFRACTIVE_INDEX,
    pulse_family: Optional[int] = None,
    stretch: float = 1.0,
):
    """Noise-free surface, column and bottom components of the received power.

    Components are relative intensities before the amplitude ``A`` is applied. With
    ``stretch != 1`` the time axis is dilated about the surface echo.

    Returns:
        dict: ``"surface"``, ``"column"`` and ``"bottom"`` arrays of ``grid.n_bins`` values.
    """
    family = p.imp_type if pulse_family is None else pulse_family
    shape = PulseShape(family, p.w_c)

    t_s = grid.t0 + surface_bin * grid.dt
    travel = bottom_travel_time(p.depth, n_w)
    tau = (grid.times() - t_s) / stretch

    surface = p.i_s * pulse_value(shape, tau)

    column = np.zeros(grid.n_bins)
    inside = (tau > 0) & (tau < travel)
    z = tau[inside] * SPEED_OF_LIGHT / (2.0 * n_w)
    column[inside] = p.i_w * np.exp(-2.0 * p.kd * z)

    bottom = p.i_ref * np.exp(-2.0 * p.kd * p.depth) * pulse_value(shape, tau - travel)

    return {"surface": surface, "column": column, "bottom": bottom}


def simulate_waveform(
    p: WaveformParams,
    grid: TimeGrid = None,
    seed: int = 0,
    surface_bin: int = SURFACE_BIN,
    n_w: float = WATER_REFRACTIVE_INDEX,
    pulse_family: Optional[int] = None,
    stretch: float = 1.0,
    background_offset: float = 0.0,
) -> Waveform:
    """Simulate the received power of one laser shot over water.

    The waveform is ``A * (surface + column + bottom + background_offset) + base_intensity``
    plus zero-mean normal noise of standard deviation ``noise_sigma`` drawn from ``seed``.
    The surface echo sits at ``surface_bin``, the bottom echo ``2 * depth * n_w / c``
    seconds later and the water column decays as ``i_w * exp(-2 * kd * z)`` in between.

    Args:
        p (WaveformParams): the parameters of the shot.
        grid (TimeGrid, optional): time axis. Defaults to ``TimeGrid()``.
        seed (int, optional): seed of the noise. Defaults to ``0``.
        surface_bin (int, optional): bin of the surface echo. Defaults to ``64``.
        n_w (float, optional): water refractive index. Defaults to ``1.33``.
        pulse_family (int, optional): override of ``p.imp_type``. Defaults to ``None``.
        stretch (float, optional): dilation of the time axis about the surface. Defaults to ``1.0``.
        background_offset (float, optional): relative level added before scaling by ``A``. Defaults to ``0.0``.

    Raises:
        InvalidParams: if ``p`` violates its bounds.
        GridTooShort: if the bottom echo falls outside the grid.

    Returns:
        Waveform: the simulated waveform in float64.
    """
    grid = TimeGrid() if grid is None else grid
    p.validate()

    bottom_index = surface_bin + stretch * bottom_travel_time(p.depth, n_w) / grid.dt
    if not bottom_index < grid.n_bins:
        raise GridTooShort(int(np.ceil(bottom_index)), grid.n_bins)

    parts = echo_components(p, grid, surface_bin, n_w, pulse_family, stretch)
    samples = (
        p.amplitude
        * (parts["surface"] + parts["column"] + parts["bottom"] + background_offset)
        + p.base_intensity
    )
    return add_noise(Waveform(grid, samples), p.noise_sigma, seed)
