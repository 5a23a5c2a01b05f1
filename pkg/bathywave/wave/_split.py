import math

import numpy as np

from bathywave.core.exceptions.waveform import BadRatios
from bathywave.wave._types import Dataset

#: train/val/test ratios used throughout
DEFAULT_RATIOS = (0.80, 0.15, 0.05)


def split_sizes(n: int, ratios=DEFAULT_RATIOS):
    """Sizes of the train, val and test splits: floor of each share, remainder to train."""
    ratios = tuple(float(r) for r in ratios)
    if len(ratios) != 3 or any(not r > 0 for r in ratios) or abs(sum(ratios) - 1) > 1e-9:
        raise BadRatios(ratios)
    # products such as 20 * 0.15 land a few ulps away from the integer
    n_val = math.floor(n * ratios[1] + 1e-9)
    n_test = math.floor(n * ratios[2] + 1e-9)
    return n - n_val - n_test, n_val, n_test


def split_dataset(ds: Dataset, ratios=DEFAULT_RATIOS, seed: int = 0):
    """Shuffle ``ds`` with ``seed`` and cut it into train, val and test datasets.

    Args:
        ds (Dataset): the dataset to split.
        ratios (tuple, optional): positive ``(train, val, test)`` shares summing to one. Defaults to ``(0.80, 0.15, 0.05)``.
        seed (int, optional): seed of the shuffle. Defaults to ``0``.

    Raises:
        BadRatios: if the ratios are not positive or do not sum to one.

    Returns:
        tuple: the three datasets, tagged ``train``, ``val`` and ``test``.
    """
    n_train, n_val, _ = split_sizes(len(ds), ratios)
    order = np.random.default_rng(seed).permutation(len(ds))
    return (
        ds.subset(order[:n_train], "train"),
        ds.subset(order[n_train : n_train + n_val], "val"),
        ds.subset(order[n_train + n_val :], "test"),
    )
