"""Unit-peak transmitted pulse shapes.

Three families are available, all re-parameterized so that the value at the mode is
exactly one and the standard deviation equals ``w_c * 10 ns``:

* ``0``: symmetric bell, ``exp(-t**2 / (2 sigma**2))``.
* ``1``: Gumbel (right-skewed), ``exp(1 - z - exp(-z))`` with ``z = t / beta`` and
  ``beta = sigma * sqrt(6) / pi``.
* ``2``: Fréchet with shape ``alpha = 4`` (heavy right tail, bounded left support),
  ``u**-(1 + alpha) * exp(-(1 + alpha) / alpha * (u**-alpha - 1))`` with ``u = 1 + t / m``
  and ``m`` the distance from the support edge to the mode.
"""
from dataclasses import dataclass

import numpy as np
from scipy.special import gamma

from bathywave.core.exceptions import ConfigError

#: reference width the ``w_c`` fraction applies to (seconds)
REFERENCE_WIDTH = 10e-9

FRECHET_SHAPE = 4.0

PULSE_FAMILIES = {0: "bell", 1: "gumbel", 2: "frechet"}

# mode and standard deviation of a unit-scale Fréchet law
_FRECHET_MODE = (FRECHET_SHAPE / (1.0 + FRECHET_SHAPE)) ** (1.0 / FRECHET_SHAPE)
_FRECHET_STD = np.sqrt(gamma(1 - 2 / FRECHET_SHAPE) - gamma(1 - 1 / FRECHET_SHAPE) ** 2)


@dataclass(frozen=True)
class PulseShape:
    """Family and width of the transmitted pulse.

    Args:
        imp_type (int): pulse family, ``0`` bell, ``1`` Gumbel, ``2`` Fréchet.
        w_c (float): width as a fraction of 10 ns.
    """

    imp_type: int = 0
    w_c: float = 0.5

    def __post_init__(self):
        if self.imp_type not in PULSE_FAMILIES:
            raise ConfigError("pulse.imp_type", f"must be one of {sorted(PULSE_FAMILIES)}")
        if not self.w_c > 0:
            raise ConfigError("pulse.w_c", f"must be > 0, got {self.w_c}")

    @property
    def sigma(self) -> float:
        """Standard deviation of the pulse in seconds."""
        return self.w_c * REFERENCE_WIDTH


def pulse_value(shape: PulseShape, t):
    """Value of the unit-peak pulse at offset ``t`` (seconds) from its mode.

    Args:
        shape (PulseShape): the pulse family and width.
        t (float or array): offsets from the mode in seconds.

    Returns:
        float or array: values in ``[0, 1]``, exactly ``1`` at ``t = 0``.
    """
    t = np.asarray(t, dtype=np.float64)
    sigma = shape.sigma

    if shape.imp_type == 0:
        g = np.exp(-0.5 * (t / sigma) ** 2)
    elif shape.imp_type == 1:
        beta = sigma * np.sqrt(6.0) / np.pi
        # below -40 the double exponential is zero in float64
        z = np.maximum(t / beta, -40.0)
        g = np.exp(1.0 - z - np.exp(-z))
    else:
        alpha = FRECHET_SHAPE
        m = _FRECHET_MODE * sigma / _FRECHET_STD
        u = 1.0 + t / m
        g = np.zeros_like(u)
        inside = u > 0
        with np.errstate(over="ignore"):
            log_g = -(1 + alpha) * np.log(u[inside]) - (1 + alpha) / alpha * (
                u[inside] ** -alpha - 1.0
            )
        g[inside] = np.exp(log_g)

    if g.ndim == 0:
        return float(g)
    return g
