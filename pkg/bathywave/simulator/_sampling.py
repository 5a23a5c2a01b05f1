import dataclasses
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from bathywave.core.exceptions.simulation import BadRange
from bathywave.wave import WaveformParams

Range = Tuple[float, float]


@dataclass(frozen=True)
class ParamRanges:
    """Uniform sampling ranges of every :class:`WaveformParams` field.

    ``noise_fraction`` bounds ``noise_sigma / amplitude``; every other range bounds the
    field of the same name. Defaults follow the simulator input table: depth 0.15-19 m,
    kd 0-1, reflectance 1-100, column 0-2, amplitude 1-10, noise up to 4 % of the
    amplitude, width 0.1-1.
    """

    depth: Range = (0.15, 19.0)
    kd: Range = (0.0, 1.0)
    i_ref: Range = (1.0, 100.0)
    i_w: Range = (0.0, 2.0)
    amplitude: Range = (1.0, 10.0)
    noise_fraction: Range = (0.0, 0.04)
    imp_type: Tuple[int, int] = (0, 2)
    w_c: Range = (0.1, 1.0)
    base_intensity: Range = (0.0, 0.1)
    i_s: Range = (1.0, 10.0)
    max_depth: Range = (19.0, 19.0)

    def validate(self):
        """Raises:
        BadRange: if a range is empty or leaves its physical domain.
        """
        for f in dataclasses.fields(self):
            low, high = getattr(self, f.name)
            if not low <= high:
                raise BadRange(f.name, low, high)
        for name in ("depth", "w_c", "amplitude"):
            low, high = getattr(self, name)
            if low <= 0:
                raise BadRange(name, low, high, "must stay > 0")
        for name in ("kd", "i_ref", "i_w", "noise_fraction", "base_intensity", "i_s"):
            low, high = getattr(self, name)
            if low < 0:
                raise BadRange(name, low, high, "must stay >= 0")
        if self.imp_type[0] < 0 or self.imp_type[1] > 2:
            raise BadRange("imp_type", *self.imp_type, "must stay within {0, 1, 2}")
        if self.depth[0] > self.max_depth[1]:
            raise BadRange("depth", *self.depth, "exceeds the largest max_depth")


def sample_params(ranges: ParamRanges = None, seed: int = 0) -> WaveformParams:
    """Draw one parameter vector uniformly within ``ranges``.

    ``max_depth`` is drawn first and caps the depth range; ``noise_sigma`` is drawn after
    the amplitude as ``uniform(noise_fraction) * amplitude``; ``imp_type`` is uniform over
    the integers of its range.

    Raises:
        BadRange: if a range is empty.
    """
    ranges = ParamRanges() if ranges is None else ranges
    ranges.validate()
    rng = np.random.default_rng(seed)

    def draw(r):
        return float(rng.uniform(r[0], r[1]))

    max_depth = draw(ranges.max_depth)
    depth = draw((ranges.depth[0], min(ranges.depth[1], max_depth)))
    kd = draw(ranges.kd)
    i_ref = draw(ranges.i_ref)
    i_w = draw(ranges.i_w)
    amplitude = draw(ranges.amplitude)
    noise_sigma = draw(ranges.noise_fraction) * amplitude
    imp_type = int(rng.integers(ranges.imp_type[0], ranges.imp_type[1] + 1))
    w_c = draw(ranges.w_c)
    base_intensity = draw(ranges.base_intensity)
    i_s = draw(ranges.i_s)

    return WaveformParams(
        depth=depth,
        kd=kd,
        i_ref=i_ref,
        i_w=i_w,
        amplitude=amplitude,
        noise_sigma=noise_sigma,
        imp_type=imp_type,
        w_c=w_c,
        base_intensity=base_intensity,
        i_s=i_s,
        max_depth=max_depth,
    )
