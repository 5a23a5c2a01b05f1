import numpy as np

from bathywave.nn.layers._base import Layer, fan_in_uniform


class Dense(Layer):
    """Affine map ``x @ kernel + bias`` on ``(batch, features)`` inputs."""

    kind = "dense"
    INT_FIELDS = ("in_features", "units")

    def __init__(self, in_features: int, units: int):
        super().__init__()
        self.in_features = int(in_features)
        self.units = int(units)
        self.params = {
            "kernel": np.zeros((self.in_features, self.units)),
            "bias": np.zeros(self.units),
        }

    def get_config(self):
        return {"in_features": self.in_features, "units": self.units}

    def build(self, rng):
        self.params["kernel"] = fan_in_uniform(
            rng, (self.in_features, self.units), self.in_features
        )
        self.params["bias"] = np.zeros(self.units)

    def output_shape(self, input_shape):
        return (input_shape[0], self.units)

    def check_input(self, x):
        self._expect(x, 2, self.in_features, "features")

    def forward(self, x, training):
        y = x @ self.params["kernel"] + self.params["bias"]
        return y, {"x": x, "output_shape": y.shape}

    def backward(self, grad, cache):
        x = cache["x"]
        return grad @ self.params["kernel"].T, {
            "kernel": x.T @ grad,
            "bias": grad.sum(axis=0),
        }


class Flatten(Layer):
    """Reshape ``(batch, length, channels)`` into ``(batch, length * channels)``."""

    kind = "flatten"

    def output_shape(self, input_shape):
        return (input_shape[0], int(np.prod(input_shape[1:])))

    def check_input(self, x):
        self._expect(x, 3)

    def forward(self, x, training):
        y = x.reshape(x.shape[0], -1)
        return y, {"input_shape": x.shape, "output_shape": y.shape}

    def backward(self, grad, cache):
        return grad.reshape(cache["input_shape"]), {}
