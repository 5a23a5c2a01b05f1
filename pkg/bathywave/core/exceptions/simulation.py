"""Exceptions related with the forward model and parameter sampling.
"""
from bathywave.core.exceptions import BathywaveError


class InvalidParams(BathywaveError):
    """Raised when a parameter vector violates its physical bounds."""

    def __init__(self, field, value, reason):
        super().__init__(field, value, reason)
        self.field = field
        self.value = value
        self.reason = reason

    def __str__(self):
        return f"invalid parameter {self.field}={self.value}: {self.reason}"


class GridTooShort(BathywaveError):
    """Raised when the time grid ends before the bottom echo."""

    def __init__(self, bottom_index, n_bins):
        super().__init__(bottom_index, n_bins)
        self.bottom_index = bottom_index
        self.n_bins = n_bins

    def __str__(self):
        return (
            f"bottom echo falls at bin {self.bottom_index} but the grid only has "
            f"{self.n_bins} bins"
        )


class BadRange(BathywaveError):
    """Raised when a sampling range has its lower bound above its upper bound."""

    def __init__(self, field, low, high, reason="low > high"):
        super().__init__(field, low, high, reason)
        self.field = field
        self.low = low
        self.high = high
        self.reason = reason

    def __str__(self):
        return f"invalid range of '{self.field}' ({self.low}, {self.high}): {self.reason}"
