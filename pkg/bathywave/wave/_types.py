"""Domain types shared by every bathywave module."""
import dataclasses
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence

import numpy as np

from bathywave.core.exceptions import ConfigError
from bathywave.core.exceptions.simulation import InvalidParams

SPLIT_TAGS = ("unsplit", "train", "val", "test")

#: names of the regression targets, in branch order
TARGETS = ("depth", "kd", "bottom")


@dataclass(frozen=True)
class TimeGrid:
    """Regular time axis of a waveform.

    Args:
        n_bins (int, optional): number of samples. Defaults to ``512``.
        dt (float, optional): seconds per bin. Defaults to ``1e-9``.
        t0 (float, optional): time of the first bin in seconds. Defaults to ``0.0``.
    """

    n_bins: int = 512
    dt: float = 1e-9
    t0: float = 0.0

    def __post_init__(self):
        self.validate()

    def validate(self):
        if int(self.n_bins) != self.n_bins or self.n_bins < 1:
            raise ConfigError("grid.n_bins", f"must be an integer >= 1, got {self.n_bins}")
        if not (np.isfinite(self.dt) and self.dt > 0):
            raise ConfigError("grid.dt", f"must be > 0, got {self.dt}")
        if not np.isfinite(self.t0):
            raise ConfigError("grid.t0", f"must be finite, got {self.t0}")

    def times(self) -> np.ndarray:
        """Time of every bin in seconds."""
        return self.t0 + np.arange(self.n_bins, dtype=np.float64) * self.dt

    def with_bins(self, n_bins: int) -> "TimeGrid":
        return dataclasses.replace(self, n_bins=n_bins)


@dataclass(frozen=True, eq=False)
class Waveform:
    """Intensity time series sampled on a :class:`TimeGrid`."""

    grid: TimeGrid
    samples: np.ndarray

    def __post_init__(self):
        samples = np.asarray(self.samples)
        if samples.dtype.kind != "f":
            samples = samples.astype(np.float64)
        if samples.ndim != 1 or samples.shape[0] != self.grid.n_bins:
            raise ConfigError(
                "waveform.samples",
                f"expected {self.grid.n_bins} samples, got shape {samples.shape}",
            )
        if not np.all(np.isfinite(samples)):
            raise ConfigError("waveform.samples", "all values must be finite")
        object.__setattr__(self, "samples", samples)

    def __len__(self):
        return self.grid.n_bins

    def __eq__(self, other):
        if not isinstance(other, Waveform):
            return NotImplemented
        return self.grid == other.grid and np.array_equal(self.samples, other.samples)

    def times(self) -> np.ndarray:
        return self.grid.times()


@dataclass(frozen=True)
class WaveformParams:
    """Physical and instrument parameters labeling a waveform.

    Units: ``depth`` and ``max_depth`` in meters, ``kd`` in 1/m, ``noise_sigma`` in
    intensity units; every other field is a unitless relative level. ``imp_type``
    selects the pulse family (0 bell, 1 Gumbel, 2 Fréchet) and ``w_c`` its width as a
    fraction of 10 ns.
    """

    depth: float
    kd: float
    i_ref: float
    i_w: float
    amplitude: float = 1.0
    noise_sigma: float = 0.0
    imp_type: int = 0
    w_c: float = 0.5
    base_intensity: float = 0.0
    i_s: float = 1.0
    max_depth: float = 19.0

    def validate(self):
        """Check the physical bounds shared by every parameter vector.

        Raises:
            InvalidParams: on the first field which violates its bound.
        """
        for name in FIELDS:
            value = getattr(self, name)
            if not np.isfinite(value):
                raise InvalidParams(name, value, "must be finite")
        if self.depth <= 0:
            raise InvalidParams("depth", self.depth, "must be > 0")
        if self.depth > self.max_depth:
            raise InvalidParams("depth", self.depth, f"exceeds max_depth={self.max_depth}")
        for name in ("kd", "i_ref", "i_w", "noise_sigma", "i_s"):
            if getattr(self, name) < 0:
                raise InvalidParams(name, getattr(self, name), "must be >= 0")
        if self.amplitude <= 0:
            raise InvalidParams("amplitude", self.amplitude, "must be > 0")
        if self.imp_type not in (0, 1, 2):
            raise InvalidParams("imp_type", self.imp_type, "must be one of 0, 1, 2")
        if self.w_c <= 0:
            raise InvalidParams("w_c", self.w_c, "must be > 0")

    def to_array(self) -> np.ndarray:
        return np.array([getattr(self, name) for name in FIELDS], dtype=np.float64)

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "WaveformParams":
        values = [float(v) for v in values]
        if len(values) != len(FIELDS):
            raise ConfigError("params", f"expected {len(FIELDS)} values, got {len(values)}")
        kwargs = dict(zip(FIELDS, values))
        kwargs["imp_type"] = int(round(kwargs["imp_type"]))
        return cls(**kwargs)

    def targets(self) -> np.ndarray:
        """Regression targets ``(depth, kd, i_ref)`` in natural units."""
        return np.array([self.depth, self.kd, self.i_ref], dtype=np.float64)


FIELDS = tuple(f.name for f in dataclasses.fields(WaveformParams))


@dataclass(frozen=True)
class LabeledSample:
    waveform: Waveform
    params: WaveformParams


@dataclass
class Dataset:
    """Ordered labeled samples sharing one time grid.

    Args:
        samples (list): the :class:`LabeledSample` objects.
        seed (int): seed the dataset was generated or split with.
        split_tag (str): one of ``"unsplit"``, ``"train"``, ``"val"``, ``"test"``.
    """

    samples: List[LabeledSample]
    seed: int = 0
    split_tag: str = "unsplit"

    def __post_init__(self):
        self.samples = list(self.samples)
        if self.split_tag not in SPLIT_TAGS:
            raise ConfigError("dataset.split_tag", f"must be one of {SPLIT_TAGS}")
        if not 0 <= int(self.seed) < 2**64:
            raise ConfigError("dataset.seed", "must fit an unsigned 64-bit integer")
        grids = {s.waveform.grid for s in self.samples}
        if len(grids) > 1:
            raise ConfigError("dataset.samples", "all waveforms must share one time grid")

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self) -> Iterator[LabeledSample]:
        return iter(self.samples)

    def __getitem__(self, index) -> LabeledSample:
        return self.samples[index]

    @property
    def grid(self) -> Optional[TimeGrid]:
        return self.samples[0].waveform.grid if self.samples else None

    @property
    def waveforms(self) -> List[Waveform]:
        return [s.waveform for s in self.samples]

    def waveform_matrix(self) -> np.ndarray:
        """Samples of every waveform stacked as ``(n, n_bins)`` float64."""
        if not self.samples:
            return np.zeros((0, 0))
        return np.stack([s.waveform.samples for s in self.samples]).astype(np.float64)

    def params_matrix(self) -> np.ndarray:
        return np.stack([s.params.to_array() for s in self.samples])

    def targets(self) -> np.ndarray:
        """Regression targets as ``(n, 3)`` in :data:`TARGETS` order."""
        return np.stack([s.params.targets() for s in self.samples])

    def subset(self, indices, split_tag: Optional[str] = None) -> "Dataset":
        return Dataset(
            samples=[self.samples[int(i)] for i in indices],
            seed=self.seed,
            split_tag=self.split_tag if split_tag is None else split_tag,
        )

    @classmethod
    def from_arrays(cls, grid: TimeGrid, samples, params, seed=0, split_tag="unsplit"):
        """Build a dataset from a ``(n, n_bins)`` sample matrix and a ``(n, 11)`` parameter matrix."""
        items = [
            LabeledSample(Waveform(grid, row), WaveformParams.from_array(p))
            for row, p in zip(samples, params)
        ]
        return cls(items, seed=seed, split_tag=split_tag)


@dataclass(frozen=True)
class Metrics:
    """Regression quality of one target. ``r2`` is ``None`` when undefined."""

    mae: float
    rmse: float
    r2: Optional[float]

    def __post_init__(self):
        assert self.mae >= 0
        # equal when every residual has the same magnitude
        assert self.rmse >= self.mae * (1 - 1e-12)
        assert self.r2 is None or self.r2 <= 1.0
