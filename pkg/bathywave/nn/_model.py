import logging
from collections import OrderedDict
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import numpy as np

from bathywave.core.exceptions.nn import BadConfig, ShapeMismatch
from bathywave.nn.layers import (
    BatchNorm1D,
    Conv1D,
    Dense,
    Flatten,
    Layer,
    MaxPool1D,
    ReLU,
    layer_backward,
    layer_forward,
)
from bathywave.wave import NETWORK_INPUT_LENGTH, TARGETS

logger = logging.getLogger(__name__)

#: 512 samples halve at most nine times
MAX_POOLS = 9


@dataclass(frozen=True)
class ModelConfig:
    """Architecture of the tri-branch regression network.

    Each branch stacks ``convs_per_branch`` blocks of conv1d, batch-norm and ReLU with a
    max-pool of size 2 after every ``pool_every`` blocks, then flatten, a dense hidden
    layer with ReLU and a linear dense output of one unit.

    Args:
        convs_per_branch (int, optional): convolution blocks per branch. Defaults to ``18``.
        pool_every (int, optional): blocks between two pooling layers. Defaults to ``2``.
        kernel_size (int, optional): taps of every convolution. Defaults to ``7``.
        filters_start (int, optional): filters of the first convolution. Defaults to ``16``.
        filters_end (int, optional): filters of the last convolution. Defaults to ``64``.
            The schedule ramps geometrically between both ends.
        filters (tuple, optional): explicit per-convolution filters, overriding the ramp.
        dense_units (int, optional): width of the hidden dense layer. Defaults to ``256``.
        input_length (int, optional): length of the input waveforms. Defaults to ``512``.
        bn_momentum (float, optional): batch-norm running-statistics momentum. Defaults to ``0.99``.
        bn_eps (float, optional): batch-norm variance offset. Defaults to ``1e-3``.
    """

    convs_per_branch: int = 18
    pool_every: int = 2
    kernel_size: int = 7
    filters_start: int = 16
    filters_end: int = 64
    filters: Optional[Tuple[int, ...]] = None
    dense_units: int = 256
    input_length: int = NETWORK_INPUT_LENGTH
    bn_momentum: float = 0.99
    bn_eps: float = 1e-3

    @classmethod
    def desk(cls) -> "ModelConfig":
        """Reduced configuration trainable on a laptop CPU: 10 convolutions, filters 8 to 32, dense 128."""
        return cls(convs_per_branch=10, filters_start=8, filters_end=32, dense_units=128)

    @property
    def n_pools(self) -> int:
        return self.convs_per_branch // self.pool_every

    def filter_schedule(self) -> Tuple[int, ...]:
        if self.filters is not None:
            return tuple(int(f) for f in self.filters)
        n = self.convs_per_branch
        if n == 1:
            return (self.filters_start,)
        ratio = self.filters_end / self.filters_start
        return tuple(
            int(round(self.filters_start * ratio ** (i / (n - 1)))) for i in range(n)
        )

    def validate(self):
        """Raises:
        BadConfig: if the configuration cannot produce a valid architecture.
        """
        for key in ("convs_per_branch", "pool_every", "kernel_size", "dense_units", "input_length"):
            if getattr(self, key) < 1:
                raise BadConfig(key, "must be >= 1")
        if self.filters is None:
            for key in ("filters_start", "filters_end"):
                if getattr(self, key) < 1:
                    raise BadConfig(key, "must be >= 1")
        elif len(self.filters) != self.convs_per_branch or min(self.filters) < 1:
            raise BadConfig(
                "filters", f"needs {self.convs_per_branch} positive values, got {self.filters}"
            )
        if self.n_pools > MAX_POOLS or self.input_length >> self.n_pools < 1:
            raise BadConfig(
                "pool_every",
                f"{self.n_pools} pooling layers do not fit an input of length {self.input_length}",
            )
        if not 0 <= self.bn_momentum < 1:
            raise BadConfig("bn_momentum", "must be in [0, 1)")
        if self.bn_eps <= 0:
            raise BadConfig("bn_eps", "must be > 0")

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        if self.filters is not None:
            d["filters"] = list(self.filters)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ModelConfig":
        d = dict(d)
        if d.get("filters") is not None:
            d["filters"] = tuple(d["filters"])
        return cls(**d)


class Branch:
    """A sequential stack of layers mapping ``(batch, length, 1)`` to ``(batch, 1)``."""

    def __init__(self, name: str, layers):
        self.name = name
        self.layers = list(layers)

    def __repr__(self):
        return f"Branch({self.name!r}, {len(self.layers)} layers)"

    def forward(self, x, training: bool):
        mode = "train" if training else "infer"
        caches = []
        for layer in self.layers:
            x, cache = layer_forward(layer, x, mode)
            caches.append(cache)
        return x, caches

    def backward(self, grad, caches):
        """Returns the parameter gradients of every layer, in layer order."""
        grads = [None] * len(self.layers)
        for i in reversed(range(len(self.layers))):
            grad, grads[i] = layer_backward(self.layers[i], grad, caches[i])
        return grads

    def shapes(self, input_shape):
        """Output shape after every layer."""
        shapes = []
        for layer in self.layers:
            input_shape = layer.output_shape(tuple(input_shape))
            shapes.append(input_shape)
        return shapes


class TriBranchModel:
    """Three independent branches sharing the same input, one per target (depth, kd, bottom)."""

    def __init__(self, config: ModelConfig, branches, seed: int = 0):
        self.config = config
        self.seed = seed
        self.branches = OrderedDict((b.name, b) for b in branches)

    def __repr__(self):
        return f"TriBranchModel({self.config}, seed={self.seed})"

    @property
    def targets(self):
        return tuple(self.branches)

    def layers(self) -> Iterable[Layer]:
        for branch in self.branches.values():
            yield from branch.layers

    def output_layer(self, target: str) -> Dense:
        return self.branches[target].layers[-1]

    def check_input(self, x):
        expected = (self.config.input_length, 1)
        if x.ndim != 3 or x.shape[1:] != expected:
            raise ShapeMismatch("TriBranchModel", ("batch",) + expected, x.shape)

    def forward(self, x, training: bool = False):
        """Returns ``(outputs, caches)``, both keyed by target; outputs are ``(batch, 1)``."""
        x = np.asarray(x, dtype=np.float64)
        self.check_input(x)
        outputs, caches = OrderedDict(), {}
        for name, branch in self.branches.items():
            outputs[name], caches[name] = branch.forward(x, training)
        return outputs, caches

    def backward(self, output_grads, caches):
        return {
            name: branch.backward(output_grads[name], caches[name])
            for name, branch in self.branches.items()
        }

    def predict_batch(self, x) -> np.ndarray:
        """Infer-mode outputs as a ``(batch, 3)`` array in target order."""
        outputs, _ = self.forward(x, training=False)
        return np.concatenate(list(outputs.values()), axis=1)

    def get_weights(self):
        """Every parameter then every state array of every layer, branch by branch."""
        weights = []
        for layer in self.layers():
            weights.extend(layer.params[k] for k in sorted(layer.params))
            weights.extend(layer.state[k] for k in sorted(layer.state))
        return [w.copy() for w in weights]

    def set_weights(self, weights):
        weights = iter(weights)
        for layer in self.layers():
            for store in (layer.params, layer.state):
                for k in sorted(store):
                    w = np.asarray(next(weights), dtype=np.float64)
                    if w.shape != store[k].shape:
                        raise ShapeMismatch(repr(layer), store[k].shape, w.shape)
                    store[k] = w.copy()


def _branch_layers(cfg: ModelConfig):
    layers = []
    channels, length = 1, cfg.input_length
    for i, filters in enumerate(cfg.filter_schedule()):
        layers.append(Conv1D(channels, filters, cfg.kernel_size))
        layers.append(BatchNorm1D(filters, momentum=cfg.bn_momentum, eps=cfg.bn_eps))
        layers.append(ReLU())
        channels = filters
        if (i + 1) % cfg.pool_every == 0:
            layers.append(MaxPool1D(2))
            length //= 2
    layers.append(Flatten())
    layers.append(Dense(length * channels, cfg.dense_units))
    layers.append(ReLU())
    layers.append(Dense(cfg.dense_units, 1))
    return layers


def build_tribranch(cfg: ModelConfig = None, seed: int = 0) -> TriBranchModel:
    """Build and initialize a tri-branch model.

    Kernels are drawn uniformly in ``[-sqrt(6 / fan_in), sqrt(6 / fan_in)]`` and biases
    start at zero. Branch ``k`` draws from the ``k``-th child of ``SeedSequence(seed)``.

    Args:
        cfg (ModelConfig, optional): architecture. Defaults to ``ModelConfig()``.
        seed (int, optional): initialization seed. Defaults to ``0``.

    Raises:
        BadConfig: if ``cfg`` is invalid.
    """
    cfg = ModelConfig() if cfg is None else cfg
    cfg.validate()
    children = np.random.SeedSequence(seed).spawn(len(TARGETS))
    branches = []
    for name, child in zip(TARGETS, children):
        rng = np.random.default_rng(child)
        layers = _branch_layers(cfg)
        for layer in layers:
            layer.build(rng)
        branches.append(Branch(name, layers))
    model = TriBranchModel(cfg, branches, seed=seed)
    total, _, _ = count_params(model)
    logger.info(f"Built tri-branch model with {total} parameters: {cfg}")
    return model


def count_params(m) -> Tuple[int, int, int]:
    """Parameter counts ``(total, trainable, non_trainable)`` of a model, a branch, a layer or a list of layers.

    Batch-norm running mean and variance are the only non-trainable arrays.
    """
    if isinstance(m, Layer):
        layers = [m]
    elif isinstance(m, TriBranchModel):
        layers = list(m.layers())
    elif isinstance(m, Branch):
        layers = m.layers
    else:
        layers = list(m)
    trainable = sum(int(p.size) for layer in layers for p in layer.params.values())
    non_trainable = sum(int(s.size) for layer in layers for s in layer.state.values())
    return trainable + non_trainable, trainable, non_trainable
