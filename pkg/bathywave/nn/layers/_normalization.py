import numpy as np

from bathywave.nn.layers._base import Layer


class BatchNorm1D(Layer):
    """Per-channel batch normalization over the batch (and length) axes.

    Train mode normalizes with the batch mean and biased variance and updates the
    running statistics as ``running = momentum * running + (1 - momentum) * batch``;
    infer mode applies the running statistics, which makes it a per-channel affine map.

    Args:
        channels (int): number of channels (last axis).
        momentum (float, optional): decay of the running statistics. Defaults to ``0.99``.
        eps (float, optional): added to the variance. Defaults to ``1e-3``.
    """

    kind = "batchnorm"
    INT_FIELDS = ("channels",)
    FLOAT_FIELDS = ("momentum", "eps")

    def __init__(self, channels: int, momentum: float = 0.99, eps: float = 1e-3):
        super().__init__()
        self.channels = int(channels)
        self.momentum = float(momentum)
        self.eps = float(eps)
        self.params = {"gamma": np.ones(self.channels), "beta": np.zeros(self.channels)}
        self.state = {
            "running_mean": np.zeros(self.channels),
            "running_var": np.ones(self.channels),
        }

    def get_config(self):
        return {"channels": self.channels, "momentum": self.momentum, "eps": self.eps}

    def check_input(self, x):
        if x.ndim not in (2, 3) or x.shape[-1] != self.channels:
            self._expect(x, 3, self.channels)

    def forward(self, x, training):
        axes = tuple(range(x.ndim - 1))
        if training:
            mean = x.mean(axis=axes)
            var = x.var(axis=axes)
            self.state["running_mean"] = (
                self.momentum * self.state["running_mean"] + (1 - self.momentum) * mean
            )
            self.state["running_var"] = (
                self.momentum * self.state["running_var"] + (1 - self.momentum) * var
            )
        else:
            mean = self.state["running_mean"]
            var = self.state["running_var"]
        inv_std = 1.0 / np.sqrt(var + self.eps)
        x_hat = (x - mean) * inv_std
        y = self.params["gamma"] * x_hat + self.params["beta"]
        cache = {
            "x_hat": x_hat,
            "inv_std": inv_std,
            "training": training,
            "output_shape": y.shape,
        }
        return y, cache

    def backward(self, grad, cache):
        axes = tuple(range(grad.ndim - 1))
        x_hat, inv_std = cache["x_hat"], cache["inv_std"]
        d_gamma = (grad * x_hat).sum(axis=axes)
        d_beta = grad.sum(axis=axes)
        d_x_hat = grad * self.params["gamma"]

        if cache["training"]:
            n = np.prod([grad.shape[a] for a in axes])
            dx = (inv_std / n) * (
                n * d_x_hat
                - d_x_hat.sum(axis=axes)
                - x_hat * (d_x_hat * x_hat).sum(axis=axes)
            )
        else:
            dx = d_x_hat * inv_std

        return dx, {"gamma": d_gamma, "beta": d_beta}
