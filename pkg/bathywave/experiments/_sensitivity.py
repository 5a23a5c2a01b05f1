import dataclasses
import logging

import numpy as np
import pandas as pd
from sklearn.model_selection import ParameterGrid

from bathywave.core.exceptions import ConfigError
from bathywave.evaluator import Evaluator
from bathywave.evaluator.callback import TqdmCallback
from bathywave.nn import ModelConfig, TrainConfig, as_arrays, build_tribranch, evaluate, train
from bathywave.wave import TARGETS

logger = logging.getLogger(__name__)

#: knobs studied by default: branch depth, batch size, loss and noise augmentation
DEFAULT_KNOBS = {
    "convs_per_branch": [6, 10, 18],
    "batch_size": [12, 32],
    "loss": ["mae", "mse"],
    "noise_augment_sigma": [0.0, 0.02],
}

MODEL_KNOBS = {f.name for f in dataclasses.fields(ModelConfig)}
TRAIN_KNOBS = {f.name for f in dataclasses.fields(TrainConfig)}


def apply_knobs(model_cfg: ModelConfig, train_cfg: TrainConfig, point: dict):
    """Split a grid point into model and training overrides.

    Raises:
        ConfigError: if a knob is neither a ModelConfig nor a TrainConfig field.
    """
    model_changes, train_changes = {}, {}
    for key, value in point.items():
        if key in MODEL_KNOBS:
            model_changes[key] = value
        elif key in TRAIN_KNOBS:
            train_changes[key] = value
        else:
            raise ConfigError(f"knobs.{key}", "not a model or training parameter")
    return (
        dataclasses.replace(model_cfg, **model_changes),
        dataclasses.replace(train_cfg, **train_changes),
    )


def _train_point(config: dict, train_data, val_data, test_data) -> dict:
    """Evaluator job: train one grid point and score it on the test arrays.

    The arrays are shared by every job through the evaluator's ``run_function_kwargs``;
    the job configuration only holds the knob values and the derived settings.
    """
    model_cfg, train_cfg = config["model"], config["train"]
    model = build_tribranch(model_cfg, seed=config["model_seed"])
    report = train(model, train_data, val_data, train_cfg)
    row = dict(config["point"])
    row.update(
        best_val_loss=report.best_val_loss,
        best_epoch=report.best_epoch,
        stopped_epoch=report.stopped_epoch,
    )
    for name, m in evaluate(model, test_data).items():
        row[f"{name}_mae"] = m.mae
        row[f"{name}_rmse"] = m.rmse
        row[f"{name}_r2"] = np.nan if m.r2 is None else m.r2
    return row


def run_sensitivity(
    base,
    knobs,
    train_ds,
    val_ds,
    test_ds,
    method: str = "serial",
    workers: int = 1,
    progress: bool = False,
    callbacks: list = None,
) -> pd.DataFrame:
    """Train one model per point of the knob grid and tabulate its test metrics.

    Args:
        base (RunConfig): model and training settings shared by every point.
        knobs (dict): knob name -> list of values; names are ModelConfig or TrainConfig fields.
        train_ds (Dataset): training set.
        val_ds (Dataset): validation set, used for early stopping.
        test_ds (Dataset): test set the metrics are computed on.
        method (str, optional): evaluator backend. Defaults to ``"serial"``.
        workers (int, optional): number of workers. Defaults to ``1``.
        progress (bool, optional): show a progress bar over grid points. Defaults to ``False``.
        callbacks (list, optional): extra evaluator callbacks. Defaults to None.

    Raises:
        ConfigError: if a knob is unknown or a grid point is invalid.

    Returns:
        pd.DataFrame: one row per grid point (in grid order) with the knob values,
        ``best_val_loss``, ``best_epoch``, ``stopped_epoch`` and ``<target>_{mae,rmse,r2}``.
    """
    points = list(ParameterGrid({k: list(v) for k, v in knobs.items()}))
    length = base.model.input_length
    arrays = {
        "train_data": as_arrays(train_ds, length, "training"),
        "val_data": as_arrays(val_ds, length, "validation"),
        "test_data": as_arrays(test_ds, length, "test"),
    }
    configs = []
    for point in points:
        model_cfg, train_cfg = apply_knobs(base.model, base.train, point)
        model_cfg.validate()
        train_cfg.validate()
        configs.append(
            {
                "point": point,
                "model": model_cfg,
                "train": dataclasses.replace(train_cfg, progress=False),
                "model_seed": base.model_seed,
            }
        )

    logger.info(f"Sensitivity study over {len(configs)} grid points: {knobs}")
    callbacks = list(callbacks or [])
    if progress:
        callbacks.append(TqdmCallback(total=len(configs), desc="sensitivity"))
    method_kwargs = {"num_workers": workers, "callbacks": callbacks, "run_function_kwargs": arrays}
    with Evaluator.create(_train_point, method=method, method_kwargs=method_kwargs) as evaluator:
        evaluator.submit(configs)
        jobs = evaluator.gather()

    columns = list(knobs) + ["best_val_loss", "best_epoch", "stopped_epoch"]
    columns += [f"{t}_{m}" for t in TARGETS for m in ("mae", "rmse", "r2")]
    return pd.DataFrame([job.result for job in jobs], columns=columns)
