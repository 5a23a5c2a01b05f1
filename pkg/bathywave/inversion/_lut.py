import dataclasses
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from bathywave.core.exceptions import ConfigError
from bathywave.core.exceptions.inversion import LutTooLarge
from bathywave.core.exceptions.waveform import LengthMismatch
from bathywave.simulator import simulate_waveform
from bathywave.wave import FIELDS, TimeGrid, Waveform, WaveformParams, normalize_peak

logger = logging.getLogger(__name__)

#: default bound on the number of look-up-table entries
LUT_CAP = 100_000


@dataclass(frozen=True, eq=False)
class Lut:
    """Look-up table of noiseless, peak-normalized simulated waveforms.

    ``entries`` are in the order of the cartesian product of ``axes`` (last axis varying
    fastest); ``matrix`` stacks their samples for vectorized merit evaluation.
    """

    axes: Dict[str, Tuple[float, ...]]
    grid: TimeGrid
    entries: List[Tuple[WaveformParams, Waveform]]
    matrix: np.ndarray

    def __len__(self):
        return len(self.entries)


def build_lut(
    axes: Dict[str, Sequence[float]],
    grid: TimeGrid = None,
    base: WaveformParams = None,
    cap: int = LUT_CAP,
) -> Lut:
    """Simulate one normalized waveform per combination of axis values.

    Args:
        axes (dict): parameter name to the values it takes; names are :class:`WaveformParams` fields.
        grid (TimeGrid, optional): time axis. Defaults to ``TimeGrid()``.
        base (WaveformParams, optional): values of the fields which are not axes. Defaults to a unit-amplitude shot without column return.
        cap (int, optional): largest accepted table. Defaults to ``100_000``.

    Raises:
        LutTooLarge: if the product of the axis sizes exceeds ``cap``.
        ConfigError: if an axis is empty or not a parameter name.

    Returns:
        Lut: the table.
    """
    grid = TimeGrid() if grid is None else grid
    base = WaveformParams(depth=1.0, kd=0.0, i_ref=1.0, i_w=0.0) if base is None else base
    axes = {name: tuple(float(v) for v in values) for name, values in axes.items()}
    for name, values in axes.items():
        if name not in FIELDS or name == "noise_sigma":
            raise ConfigError(f"lut.axes.{name}", "is not a simulated parameter")
        if len(values) == 0:
            raise ConfigError(f"lut.axes.{name}", "must not be empty")

    size = int(np.prod([len(v) for v in axes.values()], dtype=np.int64))
    if size > cap:
        raise LutTooLarge(size, cap)

    logger.info(f"building a look-up table of {size} entries")
    names = list(axes)
    entries = []
    for combo in itertools.product(*axes.values()):
        values = dict(zip(names, combo))
        if "imp_type" in values:
            values["imp_type"] = int(values["imp_type"])
        values["noise_sigma"] = 0.0
        values["max_depth"] = max(base.max_depth, values.get("depth", base.depth))
        params = dataclasses.replace(base, **values)
        entries.append((params, normalize_peak(simulate_waveform(params, grid))))

    matrix = np.stack([w.samples for _, w in entries])
    return Lut(axes=axes, grid=grid, entries=entries, matrix=matrix)


def lut_merits(w_ref: Waveform, lut: Lut) -> np.ndarray:
    """Sum of squared residuals between the normalized ``w_ref`` and every entry."""
    if w_ref.grid.n_bins != lut.grid.n_bins:
        raise LengthMismatch(w_ref.grid.n_bins, lut.grid.n_bins)
    x = normalize_peak(w_ref).samples
    return np.sum((lut.matrix - x) ** 2, axis=1)


def lut_invert(w_ref: Waveform, lut: Lut):
    """Parameters of the table entry closest to ``w_ref`` after peak normalization.

    Ties go to the lowest entry index.

    Raises:
        DegenerateWaveform: if ``w_ref`` has no positive peak.
        LengthMismatch: if ``w_ref`` and the table use different grids.

    Returns:
        tuple: ``(WaveformParams, merit)``.
    """
    merits = lut_merits(w_ref, lut)
    best = int(np.argmin(merits))
    return lut.entries[best][0], float(merits[best])
