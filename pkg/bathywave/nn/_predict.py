from collections import OrderedDict

import numpy as np

from bathywave.nn._data import as_arrays, as_inputs, input_length_of
from bathywave.wave import TARGETS, compute_metrics


def predict(m, waveforms, batch_size: int = 256) -> np.ndarray:
    """Infer-mode predictions ``(depth_hat, kd_hat, bottom_hat)`` per sample.

    Args:
        m (TriBranchModel): any object with a ``predict_batch(x) -> (batch, 3)`` method.
        waveforms (Dataset, list of Waveform or array): raw waveforms, or an already
            prepared ``(n, length, 1)`` array.
        batch_size (int, optional): samples per forward call. Defaults to ``256``.

    Raises:
        ShapeMismatch: if prepared inputs do not match the model input.

    Returns:
        np.ndarray: ``(n, 3)`` predictions in target order.
    """
    x = as_inputs(waveforms, input_length_of(m))
    if len(x) == 0:
        return np.zeros((0, len(TARGETS)))
    return np.concatenate(
        [m.predict_batch(x[start : start + batch_size]) for start in range(0, len(x), batch_size)]
    )


def evaluate(m, ds, strict: bool = False):
    """Per-target :class:`~bathywave.wave.Metrics` of ``m`` on a labeled dataset.

    Args:
        m (TriBranchModel): the model.
        ds (Dataset or tuple): a labeled dataset or prepared ``(inputs, targets)`` arrays.
        strict (bool, optional): raise on constant targets instead of reporting ``r2=None``.

    Returns:
        OrderedDict: target name -> Metrics.
    """
    x, y = as_arrays(ds, input_length_of(m), "evaluation")
    pred = predict(m, x)
    return OrderedDict(
        (name, compute_metrics(pred[:, k], y[:, k], strict=strict))
        for k, name in enumerate(TARGETS)
    )
