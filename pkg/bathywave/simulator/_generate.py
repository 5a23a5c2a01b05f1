import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from bathywave.core.exceptions import ConfigError
from bathywave.core.utils import default_num_workers, derive_seed
from bathywave.evaluator import Evaluator
from bathywave.evaluator.callback import TqdmCallback
from bathywave.simulator._forward import simulate_waveform
from bathywave.simulator._sampling import ParamRanges, sample_params
from bathywave.wave import (
    Dataset,
    LabeledSample,
    TimeGrid,
    Waveform,
    WaveformParams,
    add_noise,
)

logger = logging.getLogger(__name__)

#: samples simulated by one evaluator job
CHUNK_SIZE = 256


@dataclass(frozen=True)
class ShiftConfig:
    """Deliberate departures from the reference simulator.

    Args:
        pulse_substitution (int, optional): pulse family used instead of each sample's ``imp_type``. Defaults to None (no substitution).
        background_offset (float, optional): relative level added under the echoes, scaled by the amplitude. Defaults to ``0.0``.
        stretch (float, optional): dilation of the time axis about the surface echo. Defaults to ``1.0``.
        extra_noise (float, optional): standard deviation of additional normal noise. Defaults to ``0.0``.
    """

    pulse_substitution: Optional[int] = None
    background_offset: float = 0.0
    stretch: float = 1.0
    extra_noise: float = 0.0

    def validate(self):
        if self.pulse_substitution not in (None, 0, 1, 2):
            raise ConfigError("shift.pulse_substitution", "must be null, 0, 1 or 2")
        if not self.stretch > 0:
            raise ConfigError("shift.stretch", f"must be > 0, got {self.stretch}")
        if self.extra_noise < 0:
            raise ConfigError("shift.extra_noise", f"must be >= 0, got {self.extra_noise}")

    @property
    def is_identity(self) -> bool:
        return self == ShiftConfig()


def simulate_sample(index: int, ranges: ParamRanges, grid: TimeGrid, seed: int, shift=None):
    """Simulate sample ``index`` of a dataset seeded with ``seed``.

    The sample seed ``seed ^ index`` is expanded into three streams: parameters, noise of
    the forward model and extra noise of the shift.
    """
    param_seed, noise_seed, shift_seed = derive_seed(seed, index, n_streams=3)
    params = sample_params(ranges, param_seed)
    if shift is None or shift.is_identity:
        w = simulate_waveform(params, grid, noise_seed)
    else:
        w = simulate_waveform(
            params,
            grid,
            noise_seed,
            pulse_family=shift.pulse_substitution,
            stretch=shift.stretch,
            background_offset=shift.background_offset,
        )
        w = add_noise(w, shift.extra_noise, shift_seed)
    return params, w


def _simulate_chunk(config: dict):
    """Evaluator job: simulate samples ``start`` to ``stop`` and return their arrays."""
    params, samples = [], []
    for index in range(config["start"], config["stop"]):
        p, w = simulate_sample(
            index, config["ranges"], config["grid"], config["seed"], config["shift"]
        )
        params.append(p.to_array())
        samples.append(w.samples.astype(np.float32))
    return np.stack(params), np.stack(samples)


def _generate(n, ranges, grid, seed, shift, method, num_workers, progress):
    if n < 1:
        raise ConfigError("n", f"must be >= 1, got {n}")
    ranges = ParamRanges() if ranges is None else ranges
    grid = TimeGrid() if grid is None else grid
    ranges.validate()
    if shift is not None:
        shift.validate()
    num_workers = default_num_workers() if num_workers is None else num_workers

    configs = [
        {
            "start": start,
            "stop": min(start + CHUNK_SIZE, n),
            "ranges": ranges,
            "grid": grid,
            "seed": seed,
            "shift": shift,
        }
        for start in range(0, n, CHUNK_SIZE)
    ]
    callbacks = [TqdmCallback(total=len(configs), desc="simulate")] if progress else []

    logger.info(f"simulating {n} waveform(s) with {method} evaluator and {num_workers} worker(s)")
    with Evaluator.create(
        _simulate_chunk,
        method=method,
        method_kwargs={"num_workers": num_workers, "callbacks": callbacks},
    ) as evaluator:
        evaluator.submit(configs)
        jobs = evaluator.gather()

    params = np.concatenate([job.result[0] for job in jobs])
    samples = np.concatenate([job.result[1] for job in jobs])
    items = [
        LabeledSample(Waveform(grid, row), WaveformParams.from_array(p))
        for row, p in zip(samples, params)
    ]
    return Dataset(items, seed=seed, split_tag="unsplit")


def generate_dataset(
    n: int,
    ranges: ParamRanges = None,
    grid: TimeGrid = None,
    seed: int = 0,
    method: str = "serial",
    num_workers: int = None,
    progress: bool = False,
) -> Dataset:
    """Simulate ``n`` labeled waveforms.

    Sample ``i`` only depends on ``seed ^ i``, so the output is identical for every
    backend and worker count. Waveforms are stored in float32.

    Args:
        n (int): number of samples.
        ranges (ParamRanges, optional): sampling ranges. Defaults to ``ParamRanges()``.
        grid (TimeGrid, optional): time axis. Defaults to ``TimeGrid()``.
        seed (int, optional): seed of the dataset. Defaults to ``0``.
        method (str, optional): evaluator backend, ``"serial"``, ``"thread"`` or ``"process"``. Defaults to ``"serial"``.
        num_workers (int, optional): number of workers. Defaults to ``BATHYWAVE_NUM_WORKERS`` or 1.
        progress (bool, optional): show a progress bar. Defaults to ``False``.

    Returns:
        Dataset: ``n`` samples in index order.
    """
    return _generate(n, ranges, grid, seed, None, method, num_workers, progress)


def generate_shifted_dataset(
    n: int,
    ranges: ParamRanges = None,
    grid: TimeGrid = None,
    shift: ShiftConfig = None,
    seed: int = 0,
    method: str = "serial",
    num_workers: int = None,
    progress: bool = False,
) -> Dataset:
    """Like :func:`generate_dataset` with the departures of ``shift`` applied.

    Labels are the sampled parameters themselves, so a model trained on the reference
    simulator can be scored on the shifted domain. The identity shift reproduces
    :func:`generate_dataset` exactly.
    """
    shift = ShiftConfig() if shift is None else shift
    return _generate(n, ranges, grid, seed, shift, method, num_workers, progress)
