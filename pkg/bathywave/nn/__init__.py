"""Numpy 1D convolutional network stack and the tri-branch regression model.

Everything runs in float64 on the CPU. A model is built from a :class:`ModelConfig`,
trained with :func:`train` on datasets of simulated waveforms, and queried with
:func:`predict` or :func:`evaluate`.
"""
from bathywave.nn._data import as_arrays, as_inputs
from bathywave.nn._model import (
    Branch,
    ModelConfig,
    TriBranchModel,
    build_tribranch,
    count_params,
)
from bathywave.nn._predict import evaluate, predict
from bathywave.nn.callbacks import Callback, CurveLogger, EarlyStopping
from bathywave.nn.gradcheck import check_layer_gradients, gradcheck_all
from bathywave.nn.layers import LayerSpec, layer_backward, layer_forward
from bathywave.nn.losses import select_loss, tribranch_loss
from bathywave.nn.optimizers import Adam
from bathywave.nn.trainer import TrainConfig, Trainer, TrainReport, train

__all__ = [
    "Adam",
    "as_arrays",
    "as_inputs",
    "Branch",
    "build_tribranch",
    "Callback",
    "check_layer_gradients",
    "count_params",
    "CurveLogger",
    "EarlyStopping",
    "evaluate",
    "gradcheck_all",
    "layer_backward",
    "layer_forward",
    "LayerSpec",
    "ModelConfig",
    "predict",
    "select_loss",
    "train",
    "TrainConfig",
    "Trainer",
    "TrainReport",
    "tribranch_loss",
    "TriBranchModel",
]
