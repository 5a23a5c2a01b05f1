import numpy as np

from bathywave.core.exceptions.nn import EmptyDataset
from bathywave.wave import NETWORK_INPUT_LENGTH, Dataset, prepare_inputs


def input_length_of(model) -> int:
    config = getattr(model, "config", None)
    return getattr(config, "input_length", NETWORK_INPUT_LENGTH)


def as_inputs(data, input_length: int = NETWORK_INPUT_LENGTH) -> np.ndarray:
    """Network inputs of ``data``: a 3D array is taken as already prepared, anything else
    goes through :func:`~bathywave.wave.prepare_inputs`."""
    if isinstance(data, np.ndarray) and data.ndim == 3:
        return np.asarray(data, dtype=np.float64)
    return prepare_inputs(data, input_length)


def as_arrays(data, input_length: int = NETWORK_INPUT_LENGTH, name: str = "training"):
    """Network inputs and ``(n, 3)`` targets of ``data``.

    ``data`` is a :class:`Dataset`, prepared with :func:`prepare_inputs`, or a pair
    ``(inputs, targets)`` of arrays whose inputs are already padded and normalized.

    Raises:
        EmptyDataset: if ``data`` has no sample.
    """
    if isinstance(data, Dataset):
        if len(data) == 0:
            raise EmptyDataset(name)
        return prepare_inputs(data, input_length), data.targets()
    x, y = data
    x = np.asarray(x, dtype=np.float64)
    if len(x) == 0:
        raise EmptyDataset(name)
    return x, np.asarray(y, dtype=np.float64).reshape(len(x), -1)
