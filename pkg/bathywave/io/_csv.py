"""CSV exports for external plotting. Floats are written with 17 significant digits,
so every value reads back to the same float64.
"""
import logging

import numpy as np
import pandas as pd

from bathywave.core.exceptions.io import EmptyPayload
from bathywave.nn.trainer import TrainReport
from bathywave.wave import FIELDS, TARGETS, Dataset, Metrics

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"

METRICS_COLUMNS = ("target", "mae", "rmse", "r2")
CURVES_COLUMNS = ("epoch", "train_loss", "val_loss")
SCATTER_COLUMNS = ("depth", "log_intensity")
PREDICTION_COLUMNS = tuple(f"{t}_hat" for t in TARGETS)


def _write(df: pd.DataFrame, path, what):
    if df.empty:
        raise EmptyPayload(what)
    df.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep="", lineterminator="\n")
    logger.info(f"Exported {len(df)} {what} rows to {path}")


def metrics_frame(metrics) -> pd.DataFrame:
    rows = [
        {"target": name, "mae": m.mae, "rmse": m.rmse, "r2": np.nan if m.r2 is None else m.r2}
        for name, m in metrics.items()
    ]
    return pd.DataFrame(rows, columns=METRICS_COLUMNS)


def curves_frame(curves) -> pd.DataFrame:
    if isinstance(curves, TrainReport):
        curves = curves.curves()
    return pd.DataFrame(list(curves), columns=CURVES_COLUMNS).astype({"epoch": int})


def export_metrics(metrics, path):
    """``target,mae,rmse,r2`` rows, one per target; an undefined r2 is left empty."""
    _write(metrics_frame(metrics), path, "metrics")


def export_curves(curves, path):
    """``epoch,train_loss,val_loss`` rows in ascending epoch order."""
    _write(curves_frame(curves), path, "curves")


def export_scatter(pairs, path):
    """``depth,log_intensity`` rows in the order of ``pairs``."""
    _write(pd.DataFrame(list(pairs), columns=SCATTER_COLUMNS), path, "scatter")


def export_predictions(predictions, path):
    """``depth_hat,kd_hat,bottom_hat`` rows, one per sample."""
    predictions = np.asarray(predictions, dtype=np.float64).reshape(-1, len(TARGETS))
    _write(pd.DataFrame(predictions, columns=PREDICTION_COLUMNS), path, "predictions")


def export_params(ds: Dataset, path):
    """The parameters of every sample, one column per WaveformParams field."""
    params = ds.params_matrix() if len(ds) else np.zeros((0, len(FIELDS)))
    _write(pd.DataFrame(params, columns=FIELDS), path, "dataset")


def export_csv(payload, path):
    """Export a dataset, metrics, curves or scatter pairs according to their type.

    Raises:
        EmptyPayload: if there is nothing to write.
    """
    if isinstance(payload, Dataset):
        export_params(payload, path)
    elif isinstance(payload, TrainReport):
        export_curves(payload, path)
    elif isinstance(payload, dict) and all(isinstance(v, Metrics) for v in payload.values()):
        if not payload:
            raise EmptyPayload("metrics")
        export_metrics(payload, path)
    elif isinstance(payload, pd.DataFrame):
        _write(payload, path, "table")
    else:
        export_scatter(payload, path)
