"""Documented studies: the sensitivity grid over architecture and training knobs, the
noise-augmentation comparison and the domain-adaptation protocol, with their pinned
seeds and desk sizes in :data:`PINNED`.
"""
from bathywave.experiments._adaptation import (
    STAGES,
    adaptation_study,
    pinned_shift,
    run_adaptation_experiment,
)
from bathywave.experiments._noise import NoiseEffect, noise_effect_experiment, run_noise_experiment
from bathywave.experiments._pinned import PINNED, Pinned
from bathywave.experiments._sensitivity import DEFAULT_KNOBS, apply_knobs, run_sensitivity

__all__ = [
    "adaptation_study",
    "apply_knobs",
    "DEFAULT_KNOBS",
    "noise_effect_experiment",
    "NoiseEffect",
    "Pinned",
    "PINNED",
    "pinned_shift",
    "run_adaptation_experiment",
    "run_noise_experiment",
    "run_sensitivity",
    "STAGES",
]
