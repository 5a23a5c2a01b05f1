import dataclasses
import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from bathywave.experiments._pinned import PINNED
from bathywave.nn import ModelConfig, TrainConfig, as_arrays, build_tribranch, train
from bathywave.simulator import generate_dataset
from bathywave.wave import split_dataset

logger = logging.getLogger(__name__)


@dataclass
class NoiseEffect:
    """Validation-loss curves of a noise-augmented and a noise-free run on the same noisy validation set."""

    sigma: float
    augmented_curve: List[float]
    plain_curve: List[float]
    tail: int

    @property
    def augmented_tail_variance(self) -> float:
        return float(np.var(self.augmented_curve[-self.tail :]))

    @property
    def plain_tail_variance(self) -> float:
        return float(np.var(self.plain_curve[-self.tail :]))

    @property
    def augmented_final(self) -> float:
        return float(self.augmented_curve[-1])

    @property
    def plain_final(self) -> float:
        return float(self.plain_curve[-1])

    @property
    def noise_helps(self) -> bool:
        return (
            self.augmented_tail_variance < self.plain_tail_variance
            and self.augmented_final <= self.plain_final
        )

    def summary(self) -> dict:
        return {
            "sigma": self.sigma,
            "augmented_tail_variance": self.augmented_tail_variance,
            "plain_tail_variance": self.plain_tail_variance,
            "augmented_final": self.augmented_final,
            "plain_final": self.plain_final,
            "noise_helps": self.noise_helps,
        }


def noise_effect_experiment(
    train_ds,
    val_ds,
    model_cfg: ModelConfig = None,
    train_cfg: TrainConfig = None,
    sigma: float = PINNED.noise_sigma,
    model_seed: int = PINNED.model_seed,
    val_noise_seed: int = PINNED.shift_seed,
    tail: int = PINNED.noise_tail,
) -> NoiseEffect:
    """Train the same initial model with and without input-noise augmentation.

    The validation inputs receive Gaussian noise of standard deviation ``sigma`` once;
    both runs are scored on that noisy set after every epoch. Early stopping is disabled
    so both curves span every epoch.
    """
    model_cfg = ModelConfig.desk() if model_cfg is None else model_cfg
    train_cfg = TrainConfig(max_epochs=PINNED.noise_epochs) if train_cfg is None else train_cfg
    if train_cfg.max_epochs < tail:
        raise ValueError(f"max_epochs={train_cfg.max_epochs} is shorter than the tail of {tail} epochs")
    train_cfg = dataclasses.replace(train_cfg, early_stop_patience=train_cfg.max_epochs + 1)

    x_train, y_train = as_arrays(train_ds, model_cfg.input_length, "training")
    x_val, y_val = as_arrays(val_ds, model_cfg.input_length, "validation")
    rng = np.random.default_rng(val_noise_seed)
    x_val_noisy = x_val + rng.normal(0.0, sigma, size=x_val.shape)

    curves = {}
    for name, augment in (("augmented", sigma), ("plain", 0.0)):
        model = build_tribranch(model_cfg, seed=model_seed)
        report = train(
            model,
            (x_train, y_train),
            (x_val_noisy, y_val),
            dataclasses.replace(train_cfg, noise_augment_sigma=augment),
        )
        curves[name] = report.val_loss
        logger.info(f"{name} run: final noisy val loss {report.val_loss[-1]}")

    return NoiseEffect(sigma, curves["augmented"], curves["plain"], tail)


def run_noise_experiment(pinned=PINNED, model_cfg: ModelConfig = None, method="serial", workers=None):
    """:func:`noise_effect_experiment` on a freshly simulated dataset with the pinned seeds and sizes."""
    ds = generate_dataset(
        pinned.noise_n_samples, seed=pinned.generate_seed, method=method, num_workers=workers
    )
    train_ds, val_ds, _ = split_dataset(ds, seed=pinned.split_seed)
    train_cfg = TrainConfig(max_epochs=pinned.noise_epochs, seed=pinned.train_seed)
    return noise_effect_experiment(
        train_ds,
        val_ds,
        model_cfg,
        train_cfg,
        sigma=pinned.noise_sigma,
        model_seed=pinned.model_seed,
        val_noise_seed=pinned.shift_seed,
        tail=pinned.noise_tail,
    )
