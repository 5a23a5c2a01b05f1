"""Parametric forward model of over-water full-waveform LiDAR returns.

A waveform is the sum of a surface echo, an exponentially decaying water-column return and an attenuated bottom echo, scaled by the amplitude, on top of a background level, plus additive normal noise:

.. code-block:: text

    A * [i_s g(t - t_s) + i_w exp(-2 kd z(t)) 1{t_s < t < t_b} + i_ref exp(-2 kd depth) g(t - t_b)] + base + noise

The module also samples parameter vectors within the simulator input ranges and generates labeled datasets, optionally shifted to emulate a different simulator.
"""
from bathywave.simulator._forward import (
    SURFACE_BIN,
    bottom_travel_time,
    echo_components,
    simulate_waveform,
)
from bathywave.simulator._generate import (
    ShiftConfig,
    generate_dataset,
    generate_shifted_dataset,
    simulate_sample,
)
from bathywave.simulator._pulse import PULSE_FAMILIES, PulseShape, pulse_value
from bathywave.simulator._sampling import ParamRanges, sample_params

__all__ = [
    "bottom_travel_time",
    "echo_components",
    "generate_dataset",
    "generate_shifted_dataset",
    "ParamRanges",
    "PULSE_FAMILIES",
    "pulse_value",
    "PulseShape",
    "sample_params",
    "ShiftConfig",
    "simulate_sample",
    "simulate_waveform",
    "SURFACE_BIN",
]
