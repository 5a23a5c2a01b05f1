import logging
import math
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
from tqdm import tqdm

from bathywave.core.exceptions import ConfigError
from bathywave.core.exceptions.nn import DivergedLoss
from bathywave.nn._data import as_arrays
from bathywave.nn._predict import evaluate
from bathywave.nn.callbacks import CurveLogger, EarlyStopping
from bathywave.nn.losses import losses_func, tribranch_loss
from bathywave.nn.optimizers import Adam
from bathywave.wave import Metrics

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrainConfig:
    """Hyperparameters of a training run.

    Args:
        batch_size (int, optional): Defaults to ``12``.
        max_epochs (int, optional): Defaults to ``30``.
        learning_rate (float, optional): Adam step size. Defaults to ``1e-3``.
        early_stop_patience (int, optional): epochs without validation improvement before stopping. Defaults to ``5``.
        min_delta (float, optional): minimal improvement of the validation loss. Defaults to ``0.0``.
        noise_augment_sigma (float, optional): standard deviation of the Gaussian noise added to every
            training batch of normalized inputs, drawn anew each epoch. Defaults to ``0.0``.
        seed (int, optional): seed of the shuffling and augmentation stream. Defaults to ``0``.
        loss (str, optional): one of ``mae``, ``mse``, ``huber``, ``logcosh``. Defaults to ``"mae"``.
        init_output_bias (bool, optional): start each output bias at the median of its training
            targets. Defaults to ``True``.
        shuffle (bool, optional): reshuffle the training set every epoch. Defaults to ``True``.
        progress (bool, optional): display a tqdm progress bar over epochs. Defaults to ``False``.
    """

    batch_size: int = 12
    max_epochs: int = 30
    learning_rate: float = 1e-3
    early_stop_patience: int = 5
    min_delta: float = 0.0
    noise_augment_sigma: float = 0.0
    seed: int = 0
    loss: str = "mae"
    init_output_bias: bool = True
    shuffle: bool = True
    progress: bool = False

    def validate(self):
        """Raises:
        ConfigError: if a value is out of bounds.
        """
        if self.batch_size < 1:
            raise ConfigError("train.batch_size", "must be >= 1")
        if self.max_epochs < 0:
            raise ConfigError("train.max_epochs", "must be >= 0")
        if not self.learning_rate > 0:
            raise ConfigError("train.learning_rate", "must be > 0")
        if self.early_stop_patience < 1:
            raise ConfigError("train.early_stop_patience", "must be >= 1")
        if self.min_delta < 0:
            raise ConfigError("train.min_delta", "must be >= 0")
        if self.noise_augment_sigma < 0:
            raise ConfigError("train.noise_augment_sigma", "must be >= 0")
        if self.loss not in losses_func:
            raise ConfigError("train.loss", f"unknown loss '{self.loss}'")


@dataclass
class TrainReport:
    """Curves and outcome of a training run.

    ``best_val_loss`` is the minimum of ``val_loss`` and ``best_epoch`` its first epoch
    (epochs count from 1); both are ``None`` when no epoch ran.
    """

    train_loss: List[float] = field(default_factory=list)
    val_loss: List[float] = field(default_factory=list)
    stopped_epoch: int = 0
    best_epoch: Optional[int] = None
    best_val_loss: Optional[float] = None
    val_metrics: Dict[str, Metrics] = field(default_factory=dict)
    training_time: float = 0.0

    def curves(self):
        """Rows ``(epoch, train_loss, val_loss)`` in ascending epoch order."""
        return [
            (i + 1, t, v) for i, (t, v) in enumerate(zip(self.train_loss, self.val_loss))
        ]


def dataset_loss(model, x, y, loss="mae", batch_size=256) -> float:
    """Infer-mode loss of ``model`` over ``(x, y)``, averaged per sample."""
    total = 0.0
    for start in range(0, len(x), batch_size):
        stop = start + batch_size
        outputs, _ = model.forward(x[start:stop], training=False)
        value, _ = tribranch_loss(outputs, y[start:stop], loss)
        total += value * len(x[start:stop])
    return total / len(x)


class Trainer:
    """Mini-batch Adam training of a :class:`TriBranchModel`.

    The model is updated in place. Each epoch shuffles the training set, adds
    augmentation noise when configured, performs one Adam step per batch on the mean of
    the per-branch losses, then evaluates the validation loss in infer mode.

    Args:
        model (TriBranchModel): the model to train.
        config (TrainConfig): hyperparameters.
        callbacks (list, optional): extra :class:`~bathywave.nn.callbacks.Callback` objects.
        curves_path (str, optional): stream the curves to this CSV file.
    """

    def __init__(self, model, config: TrainConfig = None, callbacks=None, curves_path=None):
        self.model = model
        self.config = TrainConfig() if config is None else config
        self.config.validate()
        self.optimizer = Adam(learning_rate=self.config.learning_rate)
        self.early_stopping = EarlyStopping(
            patience=self.config.early_stop_patience, min_delta=self.config.min_delta
        )
        self.curve_logger = CurveLogger(curves_path)
        self.callbacks = [self.early_stopping, self.curve_logger] + list(callbacks or [])
        for cb in self.callbacks:
            cb.set_model(model)

    def init_output_bias(self, y):
        for k, name in enumerate(self.model.targets):
            self.model.output_layer(name).params["bias"] = np.array([np.median(y[:, k])])

    def train(self, train_data, val_data) -> TrainReport:
        cfg = self.config
        x_train, y_train = as_arrays(train_data, self.model.config.input_length, "training")
        x_val, y_val = as_arrays(val_data, self.model.config.input_length, "validation")
        self.model.check_input(x_train)
        self.model.check_input(x_val)

        if cfg.init_output_bias and cfg.max_epochs > 0:
            self.init_output_bias(y_train)

        rng = np.random.default_rng(cfg.seed)
        report = TrainReport()
        time_start = time.time()
        logger.info(
            f"Training on {len(x_train)} samples, validating on {len(x_val)} samples: {cfg}"
        )

        for cb in self.callbacks:
            cb.on_train_begin()

        epochs = range(1, cfg.max_epochs + 1)
        if cfg.progress:
            epochs = tqdm(epochs, desc="train", unit="epoch")

        for epoch in epochs:
            train_loss = self._train_epoch(x_train, y_train, rng, epoch, report)
            val_loss = dataset_loss(self.model, x_val, y_val, cfg.loss)
            report.train_loss.append(train_loss)
            report.val_loss.append(val_loss)
            report.stopped_epoch = epoch
            logger.debug(f"epoch {epoch}: train_loss={train_loss} val_loss={val_loss}")
            if cfg.progress:
                epochs.set_postfix(train_loss=train_loss, val_loss=val_loss)

            logs = {"train_loss": train_loss, "val_loss": val_loss}
            for cb in self.callbacks:
                cb.on_epoch_end(epoch, logs)
            if any(cb.stop_training for cb in self.callbacks):
                break

        for cb in self.callbacks:
            cb.on_train_end()

        if report.val_loss:
            report.best_epoch = int(np.argmin(report.val_loss)) + 1
            report.best_val_loss = float(min(report.val_loss))
        report.training_time = time.time() - time_start

        report.val_metrics = evaluate(self.model, (x_val, y_val))
        logger.info(
            f"Training stopped at epoch {report.stopped_epoch}, best val loss {report.best_val_loss} "
            f"at epoch {report.best_epoch}"
        )
        return report

    def _train_epoch(self, x, y, rng, epoch, report) -> float:
        cfg = self.config
        order = rng.permutation(len(x)) if cfg.shuffle else np.arange(len(x))
        total = 0.0
        for start in range(0, len(x), cfg.batch_size):
            idx = order[start : start + cfg.batch_size]
            xb, yb = x[idx], y[idx]
            if cfg.noise_augment_sigma > 0:
                xb = xb + rng.normal(0.0, cfg.noise_augment_sigma, size=xb.shape)
            outputs, caches = self.model.forward(xb, training=True)
            value, grads = tribranch_loss(outputs, yb, cfg.loss)
            if not math.isfinite(value):
                for cb in self.callbacks:
                    cb.on_train_end()
                raise DivergedLoss(epoch, report)
            self.optimizer.step(self.model, self.model.backward(grads, caches))
            total += value * len(idx)
        return total / len(x)


def train(m, train_ds, val_ds, cfg: TrainConfig = None, callbacks=None, curves_path=None) -> TrainReport:
    """Train ``m`` in place and leave it with the weights of its best validation epoch.

    Args:
        m (TriBranchModel): the model.
        train_ds (Dataset or tuple): training data, see :func:`as_arrays`.
        val_ds (Dataset or tuple): validation data.
        cfg (TrainConfig, optional): hyperparameters. Defaults to ``TrainConfig()``.
        callbacks (list, optional): extra callbacks.
        curves_path (str, optional): stream the loss curves to this CSV file.

    Raises:
        EmptyDataset: if a dataset has no sample.
        DivergedLoss: if the training loss becomes non-finite; the exception carries the partial report.

    Returns:
        TrainReport: the curves, early-stopping outcome and per-target validation metrics.
    """
    return Trainer(m, cfg, callbacks=callbacks, curves_path=curves_path).train(train_ds, val_ds)
