import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from bathywave.nn.layers._base import Layer, fan_in_uniform


class Conv1D(Layer):
    """1D cross-correlation with stride 1 and zero "same" padding.

    Kernels are stored as ``(kernel_size, in_channels, filters)``. Even kernels pad one
    more zero on the right than on the left.

    Args:
        in_channels (int): channels of the input.
        filters (int): channels of the output.
        kernel_size (int): taps of each kernel.
    """

    kind = "conv1d"
    INT_FIELDS = ("in_channels", "filters", "kernel_size")

    def __init__(self, in_channels: int, filters: int, kernel_size: int):
        super().__init__()
        self.in_channels = int(in_channels)
        self.filters = int(filters)
        self.kernel_size = int(kernel_size)
        self.params = {
            "kernel": np.zeros((self.kernel_size, self.in_channels, self.filters)),
            "bias": np.zeros(self.filters),
        }

    def get_config(self):
        return {
            "in_channels": self.in_channels,
            "filters": self.filters,
            "kernel_size": self.kernel_size,
        }

    def build(self, rng):
        fan_in = self.kernel_size * self.in_channels
        self.params["kernel"] = fan_in_uniform(rng, self.params["kernel"].shape, fan_in)
        self.params["bias"] = np.zeros(self.filters)

    @property
    def padding(self):
        left = (self.kernel_size - 1) // 2
        return left, self.kernel_size - 1 - left

    def output_shape(self, input_shape):
        return input_shape[:-1] + (self.filters,)

    def check_input(self, x):
        self._expect(x, 3, self.in_channels)

    def forward(self, x, training):
        left, right = self.padding
        padded = np.pad(x, ((0, 0), (left, right), (0, 0)))
        # (batch, length, in_channels, kernel_size)
        windows = sliding_window_view(padded, self.kernel_size, axis=1)
        y = np.tensordot(windows, self.params["kernel"], axes=([3, 2], [0, 1]))
        y += self.params["bias"]
        return y, {"windows": windows, "input_shape": x.shape, "output_shape": y.shape}

    def backward(self, grad, cache):
        windows = cache["windows"]
        batch, length, _ = cache["input_shape"]
        kernel = self.params["kernel"]

        d_kernel = np.tensordot(windows, grad, axes=([0, 1], [0, 1])).transpose(1, 0, 2)
        d_bias = grad.sum(axis=(0, 1))

        # (batch, length, kernel_size, in_channels)
        d_windows = np.tensordot(grad, kernel, axes=([2], [2]))
        d_padded = np.zeros((batch, length + self.kernel_size - 1, self.in_channels))
        for k in range(self.kernel_size):
            d_padded[:, k : k + length, :] += d_windows[:, :, k, :]
        left, _ = self.padding
        dx = d_padded[:, left : left + length, :]

        return dx, {"kernel": d_kernel, "bias": d_bias}
