"""Central finite-difference checks of the analytic layer gradients.

The checked scalar is ``L = sum(y * R)`` with ``y`` the layer output and ``R`` a fixed
standard normal projection, so the upstream gradient fed to the backward pass is ``R``.
Relative errors are ``|analytic - numeric| / max(|analytic|, |numeric|, floor)``.
"""
import logging

import numpy as np
import pandas as pd

from bathywave.nn.layers import (
    LAYERS,
    BatchNorm1D,
    Conv1D,
    Dense,
    Flatten,
    MaxPool1D,
    ReLU,
    layer_backward,
    layer_forward,
)

logger = logging.getLogger(__name__)

#: ReLU inputs closer to zero than this are left out of the comparison
RELU_MARGIN = 1e-6


def numerical_gradient(f, array: np.ndarray, h: float = 1e-5) -> np.ndarray:
    """Central differences of the scalar ``f()`` with respect to ``array``, perturbed in place."""
    grad = np.zeros_like(array)
    for idx in np.ndindex(array.shape):
        orig = array[idx]
        array[idx] = orig + h
        f_plus = f()
        array[idx] = orig - h
        f_minus = f()
        array[idx] = orig
        grad[idx] = (f_plus - f_minus) / (2 * h)
    return grad


def relative_error(analytic, numeric, mask=None, floor: float = 1e-4) -> float:
    err = np.abs(analytic - numeric) / np.maximum(
        np.maximum(np.abs(analytic), np.abs(numeric)), floor
    )
    if mask is not None:
        err = err[mask]
    return float(err.max()) if err.size else 0.0


def check_layer_gradients(layer, x, seed: int = 0, h: float = 1e-5, mode: str = "train", floor: float = 1e-4):
    """Compare the analytic gradients of ``layer`` at ``x`` with central differences.

    Args:
        layer (Layer): the layer; its parameters are perturbed and restored.
        x (array): the input.
        seed (int, optional): seed of the projection ``R``. Defaults to ``0``.
        h (float, optional): finite-difference step. Defaults to ``1e-5``.
        mode (str, optional): ``"train"`` or ``"infer"``. Defaults to ``"train"``.
        floor (float, optional): denominator floor of the relative error. Defaults to ``1e-4``.

    Returns:
        dict: ``"input"`` and every parameter name -> max relative error.
    """
    x = np.array(x, dtype=np.float64)
    state = {k: v.copy() for k, v in layer.state.items()}

    y, cache = layer_forward(layer, x, mode)
    projection = np.random.default_rng(seed).standard_normal(y.shape)
    dx, grads = layer_backward(layer, projection, cache)

    def loss():
        out, _ = layer_forward(layer, x, mode)
        return float(np.sum(out * projection))

    mask = None
    if layer.kind == "relu":
        mask = np.abs(x) >= max(RELU_MARGIN, 2 * h)

    errors = {"input": relative_error(dx, numerical_gradient(loss, x, h), mask, floor)}
    for name, param in layer.params.items():
        errors[name] = relative_error(grads[name], numerical_gradient(loss, param, h), None, floor)

    layer.state.update(state)
    return errors


def random_instance(kind: str, rng: np.random.Generator):
    """A randomly sized and initialized layer of ``kind`` with a matching input.

    Max-pool inputs are spaced by at least ``0.05`` so no finite-difference step changes
    the argmax.
    """
    batch = int(rng.integers(2, 4))
    length = int(rng.integers(4, 11))
    channels = int(rng.integers(1, 4))

    if kind == "conv1d":
        layer = Conv1D(channels, int(rng.integers(1, 5)), int(rng.integers(1, 6)))
        layer.build(rng)
        layer.params["bias"] = rng.normal(size=layer.filters)
    elif kind == "batchnorm":
        layer = BatchNorm1D(channels, eps=float(rng.uniform(1e-3, 1e-1)))
        layer.params["gamma"] = rng.uniform(0.5, 2.0, size=channels)
        layer.params["beta"] = rng.normal(size=channels)
        layer.state["running_mean"] = rng.normal(size=channels)
        layer.state["running_var"] = rng.uniform(0.5, 2.0, size=channels)
        if rng.random() < 0.5:
            return layer, rng.normal(size=(batch + 1, channels))
    elif kind == "relu":
        layer = ReLU()
    elif kind == "maxpool":
        layer = MaxPool1D(2)
        values = rng.permutation(batch * length * channels) * 0.05
        return layer, values.reshape(batch, length, channels) - values.mean()
    elif kind == "flatten":
        layer = Flatten()
    elif kind == "dense":
        layer = Dense(int(rng.integers(1, 7)), int(rng.integers(1, 5)))
        layer.build(rng)
        layer.params["bias"] = rng.normal(size=layer.units)
        return layer, rng.normal(size=(batch, layer.in_features))
    else:
        raise ValueError(f"unknown layer kind '{kind}'")
    return layer, rng.normal(size=(batch, length, channels))


def gradcheck_all(n_instances: int = 50, seed: int = 0, h: float = 1e-5, kinds=None) -> pd.DataFrame:
    """Check ``n_instances`` random instances of every layer kind in both modes.

    Returns:
        pd.DataFrame: one row per (kind, instance, mode) with the max relative error.
    """
    rng = np.random.default_rng(seed)
    rows = []
    for kind in kinds or LAYERS:
        for i in range(n_instances):
            layer, x = random_instance(kind, rng)
            for mode in ("train", "infer"):
                errors = check_layer_gradients(layer, x, seed=i, h=h, mode=mode)
                rows.append(
                    {"kind": kind, "instance": i, "mode": mode, "max_rel_error": max(errors.values())}
                )
    table = pd.DataFrame(rows)
    logger.info(f"Gradient check worst errors per kind:\n{table.groupby('kind').max_rel_error.max()}")
    return table
