"""Core waveform types, preprocessing, dataset splits and regression metrics shared by all other sub-packages.

All functions here are pure: given the same inputs (seeds included) they return the same outputs and they never mutate their arguments.
"""
from bathywave.wave._metrics import compute_metrics
from bathywave.wave._physics import (
    SPEED_OF_LIGHT,
    WATER_REFRACTIVE_INDEX,
    time_of_flight_distance,
    two_way_time,
)
from bathywave.wave._preprocessing import (
    NETWORK_INPUT_LENGTH,
    add_noise,
    normalize_peak,
    prepare_inputs,
    zero_pad,
)
from bathywave.wave._split import DEFAULT_RATIOS, split_dataset, split_sizes
from bathywave.wave._types import (
    FIELDS,
    SPLIT_TAGS,
    TARGETS,
    Dataset,
    LabeledSample,
    Metrics,
    TimeGrid,
    Waveform,
    WaveformParams,
)

__all__ = [
    "add_noise",
    "compute_metrics",
    "Dataset",
    "DEFAULT_RATIOS",
    "FIELDS",
    "LabeledSample",
    "Metrics",
    "NETWORK_INPUT_LENGTH",
    "normalize_peak",
    "prepare_inputs",
    "SPEED_OF_LIGHT",
    "split_dataset",
    "split_sizes",
    "SPLIT_TAGS",
    "TARGETS",
    "time_of_flight_distance",
    "TimeGrid",
    "two_way_time",
    "WATER_REFRACTIVE_INDEX",
    "Waveform",
    "WaveformParams",
    "zero_pad",
]
