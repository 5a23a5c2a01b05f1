"""Exceptions related with waveforms, datasets and metrics.
"""
from bathywave.core.exceptions import BathywaveError, BathywaveWarning


class LengthExceedsTarget(BathywaveError):
    """Raised when a waveform is longer than the length it should be padded to."""

    def __init__(self, length, target_len):
        super().__init__(length, target_len)
        self.length = length
        self.target_len = target_len

    def __str__(self):
        return f"waveform has {self.length} bins which exceeds the target length {self.target_len}"


class DegenerateWaveform(BathywaveError):
    """Raised when a waveform has no positive peak to normalize by."""

    def __init__(self, peak):
        super().__init__(peak)
        self.peak = peak

    def __str__(self):
        return f"waveform cannot be peak-normalized, its maximum is {self.peak}"


class NegativeSigma(BathywaveError):
    """Raised when a noise standard deviation is negative."""

    def __init__(self, sigma):
        super().__init__(sigma)
        self.sigma = sigma

    def __str__(self):
        return f"noise sigma must be >= 0, got {self.sigma}"


class BadRatios(BathywaveError):
    """Raised when split ratios are not positive or do not sum to one."""

    def __init__(self, ratios):
        super().__init__(ratios)
        self.ratios = tuple(ratios)

    def __str__(self):
        return f"split ratios {self.ratios} must be positive and sum to 1"


class LengthMismatch(BathywaveError):
    """Raised when two sequences which must be aligned have different lengths."""

    def __init__(self, left, right):
        super().__init__(left, right)
        self.left = left
        self.right = right

    def __str__(self):
        return f"length mismatch: {self.left} != {self.right}"


class ConstantTruth(BathywaveError):
    """Raised in strict mode when r2 is requested for a constant truth vector."""

    def __str__(self):
        return "r2 is undefined when every truth value is identical"


class ConstantTruthWarning(BathywaveWarning):
    """Issued when r2 is reported as undefined because the truth vector is constant."""


class NegativeTime(BathywaveError):
    """Raised when a time of flight is negative."""

    def __init__(self, delta_t):
        super().__init__(delta_t)
        self.delta_t = delta_t

    def __str__(self):
        return f"time of flight must be >= 0, got {self.delta_t}"
