import numpy as np

from bathywave.nn.layers._base import Layer


class ReLU(Layer):
    """Elementwise ``max(0, x)``; the gradient at exactly zero is taken as zero."""

    kind = "relu"

    def forward(self, x, training):
        mask = x > 0
        return np.where(mask, x, 0.0), {"mask": mask, "output_shape": x.shape}

    def backward(self, grad, cache):
        return grad * cache["mask"], {}
