import logging
import warnings

import numpy as np
from sklearn.metrics import mean_absolute_error, mean_squared_error, r2_score

from bathywave.core.exceptions.waveform import (
    ConstantTruth,
    ConstantTruthWarning,
    LengthMismatch,
)
from bathywave.wave._types import Metrics

logger = logging.getLogger(__name__)


def compute_metrics(pred, truth, strict: bool = False) -> Metrics:
    """Mean absolute error, root mean squared error and coefficient of determination.

    Args:
        pred (array): predicted values.
        truth (array): true values.
        strict (bool, optional): raise instead of warning when ``truth`` is constant. Defaults to ``False``.

    Raises:
        LengthMismatch: if the inputs differ in length or are empty.
        ConstantTruth: if ``strict`` and every truth value is identical.

    Returns:
        Metrics: with ``r2=None`` when the truth is constant.
    """
    pred = np.asarray(pred, dtype=np.float64).ravel()
    truth = np.asarray(truth, dtype=np.float64).ravel()
    if pred.shape != truth.shape or pred.size == 0:
        raise LengthMismatch(pred.size, truth.size)

    mae = float(mean_absolute_error(truth, pred))
    rmse = float(np.sqrt(mean_squared_error(truth, pred)))

    if np.all(truth == truth[0]):
        if strict:
            raise ConstantTruth()
        warnings.warn("r2 is undefined for a constant truth vector", ConstantTruthWarning)
        logger.warning("constant truth vector, r2 reported as undefined")
        r2 = None
    else:
        r2 = float(r2_score(truth, pred))

    return Metrics(mae=mae, rmse=rmse, r2=r2)
