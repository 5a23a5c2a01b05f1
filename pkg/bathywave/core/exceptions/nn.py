"""Exceptions related with the neural network stack.
"""
from bathywave.core.exceptions import BathywaveError, ConfigError


class ShapeMismatch(BathywaveError):
    """Raised when a tensor does not have the shape a layer expects."""

    def __init__(self, layer, expected, received):
        super().__init__(layer, expected, received)
        self.layer = layer
        self.expected = expected
        self.received = received

    def __str__(self):
        return f"{self.layer} expects input of shape {self.expected} but received {self.received}"


class MissingCache(BathywaveError):
    """Raised when a backward pass is requested without the cache of its forward pass."""

    def __init__(self, layer):
        super().__init__(layer)
        self.layer = layer

    def __str__(self):
        return f"{self.layer}: backward called without a cache from a matching forward call"


class BadConfig(ConfigError):
    """Raised when a model configuration cannot produce a valid architecture."""

    def __str__(self):
        return f"invalid model configuration '{self.key}': {self.reason}"


class EmptyDataset(BathywaveError):
    """Raised when training or fine-tuning receives a dataset without samples."""

    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"the {self.name} dataset is empty"


class DivergedLoss(BathywaveError):
    """Raised when the training loss becomes non-finite.

    Args:
        epoch (int): epoch at which the loss diverged.
        report (TrainReport): the curves recorded up to the divergence.
    """

    def __init__(self, epoch, report=None):
        super().__init__(epoch, report)
        self.epoch = epoch
        self.report = report

    def __str__(self):
        return f"training loss became non-finite at epoch {self.epoch}"
