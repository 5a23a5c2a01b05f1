import dataclasses
import logging

import numpy as np
import pandas as pd

from bathywave.adapt import AdaptConfig, adapt_and_predict, fine_tune, select_fine_tune_subset
from bathywave.experiments._pinned import PINNED
from bathywave.nn import ModelConfig, TrainConfig, build_tribranch, evaluate, train
from bathywave.simulator import ShiftConfig, generate_dataset, generate_shifted_dataset
from bathywave.wave import split_dataset

logger = logging.getLogger(__name__)

STAGES = ("unadapted", "sinkhorn", "fine-tuned", "emd")
COLUMNS = ("stage", "target", "mae", "rmse", "r2")


def _rows(stage, metrics):
    return [
        {"stage": stage, "target": name, "mae": m.mae, "rmse": m.rmse, "r2": np.nan if m.r2 is None else m.r2}
        for name, m in metrics.items()
    ]


def adaptation_study(
    model,
    source_sample,
    target_ds,
    adapt_cfg: AdaptConfig = None,
    fine_tune_cfg: TrainConfig = None,
) -> pd.DataFrame:
    """Score a source-trained model on a shifted target domain at every adaptation stage.

    A share ``adapt_cfg.fine_tune_fraction`` of the labeled target is held out for
    fine-tuning; every stage is scored on the remaining target samples:

    * ``unadapted``: the model applied directly;
    * ``sinkhorn``: target inputs mapped onto ``source_sample`` with the Sinkhorn plan;
    * ``fine-tuned``: a copy of the model further trained on the held-out share;
    * ``emd``: target inputs mapped with the exact transport plan.

    Returns:
        pd.DataFrame: columns ``stage, target, mae, rmse, r2``.
    """
    adapt_cfg = AdaptConfig() if adapt_cfg is None else adapt_cfg
    fine_tune_cfg = TrainConfig(max_epochs=PINNED.adapt_fine_tune_epochs) if fine_tune_cfg is None else fine_tune_cfg
    subset, rest = select_fine_tune_subset(target_ds, adapt_cfg.fine_tune_fraction, adapt_cfg.seed)

    rows = _rows("unadapted", evaluate(model, rest))
    sinkhorn = adapt_and_predict(model, rest, source_sample, dataclasses.replace(adapt_cfg, solver="sinkhorn"))
    rows += _rows("sinkhorn", sinkhorn.metrics)
    tuned, _ = fine_tune(model, subset, fine_tune_cfg, lr_scale=adapt_cfg.lr_scale)
    rows += _rows("fine-tuned", evaluate(tuned, rest))
    emd = adapt_and_predict(model, rest, source_sample, dataclasses.replace(adapt_cfg, solver="emd"))
    rows += _rows("emd", emd.metrics)

    table = pd.DataFrame(rows, columns=COLUMNS)
    logger.info(f"Adaptation study on {len(rest)} target samples:\n{table}")
    return table


def pinned_shift(pinned=PINNED) -> ShiftConfig:
    return ShiftConfig(
        pulse_substitution=pinned.shift_pulse,
        background_offset=pinned.shift_background,
        stretch=pinned.shift_stretch,
        extra_noise=pinned.shift_noise,
    )


def run_adaptation_experiment(pinned=PINNED, model_cfg: ModelConfig = None, method="serial", workers=None):
    """Train a source model on the reference simulator and run :func:`adaptation_study`
    against a shifted simulator, with the pinned seeds and sizes.

    Returns:
        tuple: ``(table, model)``.
    """
    model_cfg = ModelConfig.desk() if model_cfg is None else model_cfg
    source = generate_dataset(
        pinned.adapt_source_samples, seed=pinned.generate_seed, method=method, num_workers=workers
    )
    train_ds, val_ds, _ = split_dataset(source, seed=pinned.split_seed)
    model = build_tribranch(model_cfg, seed=pinned.model_seed)
    train(
        model,
        train_ds,
        val_ds,
        TrainConfig(
            max_epochs=pinned.adapt_epochs,
            early_stop_patience=pinned.early_stop_patience,
            seed=pinned.train_seed,
        ),
    )

    target = generate_shifted_dataset(
        pinned.adapt_target_samples,
        shift=pinned_shift(pinned),
        seed=pinned.shift_seed,
        method=method,
        num_workers=workers,
    )
    adapt_cfg = AdaptConfig(fine_tune_fraction=pinned.adapt_fine_tune_fraction, seed=pinned.subset_seed)
    fine_tune_cfg = TrainConfig(
        max_epochs=pinned.adapt_fine_tune_epochs,
        early_stop_patience=pinned.early_stop_patience,
        seed=pinned.train_seed,
    )
    table = adaptation_study(model, val_ds, target, adapt_cfg, fine_tune_cfg)
    return table, model
