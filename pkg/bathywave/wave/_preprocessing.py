import logging

import numpy as np

from bathywave.core.exceptions.waveform import (
    DegenerateWaveform,
    LengthExceedsTarget,
    NegativeSigma,
)
from bathywave.wave._types import Dataset, Waveform

logger = logging.getLogger(__name__)

#: number of time bins the network consumes
NETWORK_INPUT_LENGTH = 512


def zero_pad(w: Waveform, target_len: int) -> Waveform:
    """Append zeros to ``w`` until it has ``target_len`` bins.

    Raises:
        LengthExceedsTarget: if ``w`` is longer than ``target_len``.
    """
    n = w.grid.n_bins
    if n > target_len:
        raise LengthExceedsTarget(n, target_len)
    if n == target_len:
        return w
    samples = np.zeros(target_len, dtype=w.samples.dtype)
    samples[:n] = w.samples
    return Waveform(w.grid.with_bins(target_len), samples)


def normalize_peak(w: Waveform) -> Waveform:
    """Divide ``w`` by its highest sample so that the peak equals one.

    Raises:
        DegenerateWaveform: if the highest sample is not positive.
    """
    samples = w.samples.astype(np.float64)
    peak = samples.max()
    if not peak > 0:
        raise DegenerateWaveform(float(peak))
    return Waveform(w.grid, samples / peak)


def add_noise(w: Waveform, sigma: float, seed: int) -> Waveform:
    """Add zero-mean normal noise of standard deviation ``sigma`` drawn from ``seed``."""
    if sigma < 0:
        raise NegativeSigma(sigma)
    samples = w.samples.astype(np.float64)
    if sigma == 0:
        return Waveform(w.grid, samples)
    rng = np.random.default_rng(seed)
    return Waveform(w.grid, samples + rng.normal(0.0, sigma, size=samples.shape))


def prepare_inputs(data, target_len: int = NETWORK_INPUT_LENGTH) -> np.ndarray:
    """Zero-pad and peak-normalize waveforms into a network batch.

    Args:
        data (Dataset, list of Waveform or array): waveforms to prepare; a 2D array is
            read as ``(n, n_bins)`` raw samples.
        target_len (int, optional): padded length. Defaults to ``512``.

    Returns:
        np.ndarray: float64 tensor of shape ``(n, target_len, 1)``.
    """
    if isinstance(data, Dataset):
        matrix = data.waveform_matrix()
    elif isinstance(data, np.ndarray):
        matrix = np.asarray(data, dtype=np.float64)
        if matrix.ndim == 3 and matrix.shape[-1] == 1:
            matrix = matrix[..., 0]
    else:
        matrix = np.stack([w.samples for w in data]).astype(np.float64)

    n, n_bins = matrix.shape
    if n_bins > target_len:
        raise LengthExceedsTarget(n_bins, target_len)

    peaks = matrix.max(axis=1)
    bad = np.flatnonzero(~(peaks > 0))
    if bad.size:
        raise DegenerateWaveform(float(peaks[bad[0]]))

    batch = np.zeros((n, target_len, 1), dtype=np.float64)
    batch[:, :n_bins, 0] = matrix / peaks[:, None]
    return batch
