import copy
import dataclasses
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from bathywave.adapt._mapping import barycentric_map
from bathywave.adapt._transport import (
    SinkhornConfig,
    TransportPlan,
    cost_matrix,
    emd_transport,
    sinkhorn_transport,
    uniform_marginal,
)
from bathywave.core.exceptions import ConfigError
from bathywave.nn import TrainConfig, predict, train
from bathywave.nn._data import as_inputs, input_length_of
from bathywave.wave import Dataset, Metrics, TARGETS, compute_metrics

logger = logging.getLogger(__name__)

PLAN_SOLVERS = ("sinkhorn", "emd")


@dataclass(frozen=True)
class AdaptConfig:
    """Domain adaptation settings.

    Args:
        solver (str, optional): ``"sinkhorn"`` or ``"emd"``. Defaults to ``"sinkhorn"``.
        sinkhorn (SinkhornConfig, optional): entropic solver settings.
        max_samples (int, optional): cap on each side of a dense coupling; larger source
            samples are subsampled and larger targets processed in chunks. Defaults to ``5000``.
        seed (int, optional): subsampling seed. Defaults to ``0``.
        fine_tune_fraction (float, optional): share of the labeled target used to
            fine-tune. Defaults to ``0.1``.
        lr_scale (float, optional): fine-tuning learning rate relative to the base one. Defaults to ``0.1``.
    """

    solver: str = "sinkhorn"
    sinkhorn: SinkhornConfig = field(default_factory=SinkhornConfig)
    max_samples: int = 5000
    seed: int = 0
    fine_tune_fraction: float = 0.1
    lr_scale: float = 0.1

    def validate(self):
        if self.solver not in PLAN_SOLVERS:
            raise ConfigError("adapt.solver", f"must be one of {PLAN_SOLVERS}")
        self.sinkhorn.validate()
        if self.max_samples < 1:
            raise ConfigError("adapt.max_samples", "must be >= 1")
        if not 0 < self.fine_tune_fraction <= 1:
            raise ConfigError("adapt.fine_tune_fraction", "must be in (0, 1]")
        if not self.lr_scale > 0:
            raise ConfigError("adapt.lr_scale", "must be > 0")

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "AdaptConfig":
        d = dict(d)
        if "sinkhorn" in d:
            d["sinkhorn"] = SinkhornConfig(**d["sinkhorn"])
        return cls(**d)


@dataclass
class AdaptResult:
    predictions: np.ndarray
    mapped: np.ndarray
    plans: list
    metrics: Optional[Dict[str, Metrics]] = None


def transport_plan(xs, xt, cfg: AdaptConfig) -> TransportPlan:
    """Uniform-marginal plan between source rows ``xs`` and target columns ``xt``."""
    C = cost_matrix(xs, xt)
    a, b = uniform_marginal(len(xs)), uniform_marginal(len(xt))
    if cfg.solver == "emd":
        return emd_transport(a, b, C)
    return sinkhorn_transport(a, b, C, cfg.sinkhorn)


def adapt_inputs(xs, xt, cfg: AdaptConfig = None):
    """Map prepared target inputs ``xt`` onto the support of prepared source inputs ``xs``.

    Returns:
        tuple: ``(mapped, plans)`` where ``mapped`` has the shape of ``xt``.
    """
    cfg = AdaptConfig() if cfg is None else cfg
    cfg.validate()
    if len(xs) > cfg.max_samples:
        rng = np.random.default_rng(cfg.seed)
        xs = xs[np.sort(rng.choice(len(xs), cfg.max_samples, replace=False))]
        logger.info(f"Subsampled the source to {cfg.max_samples} samples")

    mapped, plans = np.empty_like(xt), []
    for start in range(0, len(xt), cfg.max_samples):
        chunk = xt[start : start + cfg.max_samples]
        plan = transport_plan(xs, chunk, cfg)
        plans.append(plan)
        mapped[start : start + len(chunk)] = barycentric_map(plan, xs, chunk, "target->source")
        logger.info(
            f"Mapped target samples {start}-{start + len(chunk)} with {plan.method} "
            f"(cost={plan.cost:.6g}, violation={plan.violation:.3g})"
        )
    return mapped, plans


def adapt_and_predict(m, target_waveforms, source_sample, cfg: AdaptConfig = None, labels=None) -> AdaptResult:
    """Predict on target-domain waveforms after transporting them onto the source domain.

    Both sides are zero-padded and peak-normalized, coupled by the configured solver with
    uniform marginals and a squared Euclidean cost, and the target is moved onto the
    source by barycentric mapping before inference. The model is left untouched.

    Args:
        m (TriBranchModel): a trained model.
        target_waveforms (Dataset, list or array): the target domain.
        source_sample (Dataset, list or array): samples of the training distribution.
        cfg (AdaptConfig, optional): Defaults to ``AdaptConfig()``.
        labels (array, optional): ``(n, 3)`` targets; taken from ``target_waveforms`` when it is a Dataset.

    Returns:
        AdaptResult: predictions, mapped inputs, plans, and per-target metrics when labels exist.
    """
    length = input_length_of(m)
    xt = as_inputs(target_waveforms, length)
    xs = as_inputs(source_sample, length)
    mapped, plans = adapt_inputs(xs, xt, cfg)
    predictions = predict(m, mapped)

    if labels is None and isinstance(target_waveforms, Dataset):
        labels = target_waveforms.targets()
    metrics = None
    if labels is not None:
        labels = np.asarray(labels, dtype=np.float64)
        metrics = {
            name: compute_metrics(predictions[:, k], labels[:, k]) for k, name in enumerate(TARGETS)
        }
    return AdaptResult(predictions=predictions, mapped=mapped, plans=plans, metrics=metrics)


def select_fine_tune_subset(ds: Dataset, fraction: float = 0.1, seed: int = 0):
    """Random labeled share of ``ds`` for fine-tuning and the remaining samples.

    Returns:
        tuple: ``(subset, rest)``; the subset holds ``max(1, floor(fraction * n))`` samples.
    """
    n = len(ds)
    k = max(1, int(np.floor(fraction * n + 1e-9))) if n else 0
    order = np.random.default_rng(seed).permutation(n)
    return ds.subset(np.sort(order[:k]), "train"), ds.subset(np.sort(order[k:]), "test")


def fine_tune(m, labeled_target_subset, cfg: TrainConfig = None, val_ds=None, lr_scale: float = 0.1):
    """Continue training a copy of ``m`` on a small labeled target set.

    The copy starts from the current weights with the learning rate multiplied by
    ``lr_scale`` and keeps its output biases. ``val_ds`` defaults to the subset itself.

    Raises:
        EmptyDataset: if the subset has no sample.

    Returns:
        tuple: ``(new_model, TrainReport)``; ``m`` is not modified.
    """
    cfg = TrainConfig() if cfg is None else cfg
    tuned_cfg = dataclasses.replace(
        cfg, learning_rate=cfg.learning_rate * lr_scale, init_output_bias=False
    )
    model = copy.deepcopy(m)
    val_ds = labeled_target_subset if val_ds is None else val_ds
    report = train(model, labeled_target_subset, val_ds, tuned_cfg)
    logger.info(f"Fine-tuned on {len(labeled_target_subset)} samples: best val loss {report.best_val_loss}")
    return model, report
