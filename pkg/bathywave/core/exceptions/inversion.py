"""Exceptions related with classical waveform inversion.
"""
from bathywave.core.exceptions import BathywaveError


class NoBottomEcho(BathywaveError):
    """Raised when a waveform has fewer than two detectable echoes."""

    def __init__(self, n_peaks):
        super().__init__(n_peaks)
        self.n_peaks = n_peaks

    def __str__(self):
        return f"expected a surface and a bottom echo, found {self.n_peaks} peak(s)"


class PeaksUnresolved(BathywaveError):
    """Raised when the surface and bottom echoes are closer than one pulse width."""

    def __init__(self, separation, pulse_width):
        super().__init__(separation, pulse_width)
        self.separation = separation
        self.pulse_width = pulse_width

    def __str__(self):
        return (
            f"echo separation {self.separation:.3e} s is below the pulse width "
            f"{self.pulse_width:.3e} s"
        )


class LutTooLarge(BathywaveError):
    """Raised when the cartesian product of the look-up-table axes exceeds the cap."""

    def __init__(self, size, cap):
        super().__init__(size, cap)
        self.size = size
        self.cap = cap

    def __str__(self):
        return f"look-up table would hold {self.size} entries, the cap is {self.cap}"


class SingularFit(BathywaveError):
    """Raised when a regression has fewer than two distinct depths."""

    def __init__(self, n_points, n_distinct):
        super().__init__(n_points, n_distinct)
        self.n_points = n_points
        self.n_distinct = n_distinct

    def __str__(self):
        return (
            f"cannot fit a line through {self.n_points} point(s) with "
            f"{self.n_distinct} distinct depth(s)"
        )
