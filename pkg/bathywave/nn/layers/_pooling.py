import numpy as np

from bathywave.core.exceptions.nn import ShapeMismatch
from bathywave.nn.layers._base import Layer


class MaxPool1D(Layer):
    """Non-overlapping max pooling along the length axis (stride = pool size).

    Trailing samples which do not fill a window are dropped. Ties route the gradient
    to the first maximal position of the window.
    """

    kind = "maxpool"
    INT_FIELDS = ("pool_size",)

    def __init__(self, pool_size: int = 2):
        super().__init__()
        self.pool_size = int(pool_size)

    def get_config(self):
        return {"pool_size": self.pool_size}

    def output_shape(self, input_shape):
        return (input_shape[0], input_shape[1] // self.pool_size, input_shape[2])

    def check_input(self, x):
        self._expect(x, 3)
        if x.shape[1] < self.pool_size:
            raise ShapeMismatch(repr(self), f"length >= {self.pool_size}", x.shape)

    def forward(self, x, training):
        batch, length, channels = x.shape
        out_len = length // self.pool_size
        windows = x[:, : out_len * self.pool_size].reshape(
            batch, out_len, self.pool_size, channels
        )
        argmax = windows.argmax(axis=2)
        y = np.take_along_axis(windows, argmax[:, :, None, :], axis=2)[:, :, 0, :]
        return y, {"argmax": argmax, "input_shape": x.shape, "output_shape": y.shape}

    def backward(self, grad, cache):
        batch, length, channels = cache["input_shape"]
        out_len = grad.shape[1]
        d_windows = np.zeros((batch, out_len, self.pool_size, channels))
        np.put_along_axis(d_windows, cache["argmax"][:, :, None, :], grad[:, :, None, :], axis=2)
        dx = np.zeros(cache["input_shape"])
        dx[:, : out_len * self.pool_size] = d_windows.reshape(batch, -1, channels)
        return dx, {}
