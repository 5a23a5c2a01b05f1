"""Layers of the numpy network stack and the functional entry points :func:`layer_forward` and :func:`layer_backward`.
"""
from bathywave.nn.layers._activation import ReLU
from bathywave.nn.layers._base import (
    KIND_CODES,
    Layer,
    LayerSpec,
    fan_in_uniform,
    layer_backward,
    layer_forward,
)
from bathywave.nn.layers._conv import Conv1D
from bathywave.nn.layers._core import Dense, Flatten
from bathywave.nn.layers._normalization import BatchNorm1D
from bathywave.nn.layers._pooling import MaxPool1D

LAYERS = {
    "conv1d": Conv1D,
    "batchnorm": BatchNorm1D,
    "relu": ReLU,
    "maxpool": MaxPool1D,
    "flatten": Flatten,
    "dense": Dense,
}


def layer_from_spec(spec: LayerSpec) -> Layer:
    """Rebuild an unweighted layer from its :class:`LayerSpec`."""
    return LAYERS[spec.kind](**spec.config)


__all__ = [
    "BatchNorm1D",
    "Conv1D",
    "Dense",
    "fan_in_uniform",
    "Flatten",
    "KIND_CODES",
    "Layer",
    "layer_backward",
    "layer_forward",
    "layer_from_spec",
    "LAYERS",
    "LayerSpec",
    "MaxPool1D",
    "ReLU",
]
