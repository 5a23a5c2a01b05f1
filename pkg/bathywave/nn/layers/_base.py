"""Layer protocol of the numpy network stack.

Tensors are float64 arrays shaped ``(batch, length, channels)`` or ``(batch, features)``.
A layer maps ``forward(x, training) -> (y, cache)`` and
``backward(upstream_grad, cache) -> (input_grad, param_grads)``; the cache carries
everything the backward pass needs, so one layer object can serve many forward calls.
"""
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from bathywave.core.exceptions.nn import MissingCache, ShapeMismatch

#: layer kind -> checkpoint code
KIND_CODES = {"conv1d": 1, "batchnorm": 2, "relu": 3, "maxpool": 4, "flatten": 5, "dense": 6}

MODES = ("train", "infer")


@dataclass(frozen=True)
class LayerSpec:
    """Kind and hyperparameters of a layer, enough to rebuild it without its weights."""

    kind: str
    config: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KIND_CODES:
            raise ValueError(f"unknown layer kind '{self.kind}'")


class Layer:
    """Base class of every layer.

    Subclasses fill ``params`` (trainable arrays) and ``state`` (non-trainable arrays,
    updated by the forward pass in train mode) and implement :meth:`forward`,
    :meth:`backward`, :meth:`output_shape` and :meth:`get_config`.
    """

    kind = None
    #: order of the integer and float hyperparameters in the checkpoint record
    INT_FIELDS: Tuple[str, ...] = ()
    FLOAT_FIELDS: Tuple[str, ...] = ()

    def __init__(self):
        self.params: Dict[str, np.ndarray] = {}
        self.state: Dict[str, np.ndarray] = {}

    def __repr__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.get_config().items())
        return f"{type(self).__name__}({args})"

    def get_config(self) -> dict:
        return {}

    def spec(self) -> LayerSpec:
        return LayerSpec(self.kind, self.get_config())

    def build(self, rng: np.random.Generator):
        """Initialize the parameters from ``rng``. Layers without parameters ignore it."""

    def output_shape(self, input_shape):
        return input_shape

    def check_input(self, x: np.ndarray):
        """Raises:
        ShapeMismatch: if ``x`` cannot be consumed by this layer.
        """

    def forward(self, x: np.ndarray, training: bool):
        raise NotImplementedError

    def backward(self, grad: np.ndarray, cache: dict):
        raise NotImplementedError

    def _expect(self, x, ndim, channels=None, channels_name="channels"):
        if x.ndim != ndim or (channels is not None and x.shape[-1] != channels):
            expected = ("batch",) + ("length",) * (ndim == 3) + (channels or channels_name,)
            raise ShapeMismatch(repr(self), expected, x.shape)


def fan_in_uniform(rng: np.random.Generator, shape, fan_in: int) -> np.ndarray:
    """Uniform draw in ``[-sqrt(6 / fan_in), sqrt(6 / fan_in)]``."""
    limit = np.sqrt(6.0 / fan_in)
    return rng.uniform(-limit, limit, size=shape)


def layer_forward(layer: Layer, x, mode: str = "train"):
    """Run ``layer`` on ``x`` in ``"train"`` or ``"infer"`` mode.

    Raises:
        ShapeMismatch: if ``x`` does not match the input the layer expects.

    Returns:
        tuple: ``(output, cache)``.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    x = np.asarray(x, dtype=np.float64)
    layer.check_input(x)
    y, cache = layer.forward(x, training=(mode == "train"))
    cache["layer"] = id(layer)
    return y, cache


def layer_backward(layer: Layer, upstream_grad, cache):
    """Gradients of a scalar loss with respect to the input and parameters of ``layer``.

    Args:
        layer (Layer): the layer.
        upstream_grad (array): gradient of the loss with respect to the layer output.
        cache (dict): the cache returned by the matching :func:`layer_forward` call.

    Raises:
        MissingCache: if ``cache`` is missing or comes from another layer.

    Returns:
        tuple: ``(input_grad, param_grads)`` with ``param_grads`` keyed like ``layer.params``.
    """
    if not cache or cache.get("layer") != id(layer):
        raise MissingCache(repr(layer))
    grad = np.asarray(upstream_grad, dtype=np.float64)
    if grad.shape != cache["output_shape"]:
        raise ShapeMismatch(repr(layer), cache["output_shape"], grad.shape)
    return layer.backward(grad, cache)
