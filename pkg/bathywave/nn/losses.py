"""Training losses. A loss maps ``(pred, target)`` arrays of equal shape to ``(value, grad)``
where ``value`` is the mean loss and ``grad`` its gradient with respect to ``pred``.
The losses available by name are:

* Mean absolute error: ``mae`` (default training loss)
* Mean squared error: ``mse``
* Huber loss with delta 1: ``huber``
* Log-cosh: ``logcosh``
"""
from collections import OrderedDict

import numpy as np

from bathywave.core.exceptions import ConfigError


def mae(pred, target):
    r = pred - target
    return float(np.mean(np.abs(r))), np.sign(r) / r.size


def mse(pred, target):
    r = pred - target
    return float(np.mean(r**2)), 2.0 * r / r.size


def huber(pred, target, delta: float = 1.0):
    r = pred - target
    small = np.abs(r) <= delta
    value = np.where(small, 0.5 * r**2, delta * (np.abs(r) - 0.5 * delta))
    grad = np.where(small, r, delta * np.sign(r))
    return float(np.mean(value)), grad / r.size


def logcosh(pred, target):
    r = pred - target
    a = np.abs(r)
    value = a + np.log1p(np.exp(-2.0 * a)) - np.log(2.0)
    return float(np.mean(value)), np.tanh(r) / r.size


losses_func = OrderedDict()
losses_func["mae"] = losses_func["mean_absolute_error"] = mae
losses_func["mse"] = losses_func["mean_squared_error"] = mse
losses_func["huber"] = huber
losses_func["logcosh"] = logcosh


def select_loss(name):
    """Return the loss defined by name.

    Args:
        name (str or callable): a name registered in ``losses_func`` or a callable following the same interface.

    Raises:
        ConfigError: if ``name`` is not a registered loss.
    """
    if callable(name):
        return name
    if name not in losses_func:
        raise ConfigError("train.loss", f"unknown loss '{name}', expected one of {list(losses_func)}")
    return losses_func[name]


def tribranch_loss(outputs, targets, loss="mae"):
    """Mean over the branches of the per-branch loss.

    Args:
        outputs (dict): branch name -> ``(batch, 1)`` predictions.
        targets (array): ``(batch, n_branches)`` targets in branch order.
        loss (str or callable, optional): Defaults to ``"mae"``.

    Returns:
        tuple: ``(value, grads)`` with ``grads`` keyed like ``outputs``.
    """
    loss = select_loss(loss)
    n = len(outputs)
    value, grads = 0.0, OrderedDict()
    for k, (name, pred) in enumerate(outputs.items()):
        v, g = loss(pred, targets[:, k : k + 1])
        value += v / n
        grads[name] = g / n
    return value, grads
