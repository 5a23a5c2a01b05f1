"""
Bathywave is a full-waveform bathymetric LiDAR toolkit. It simulates over-water laser return waveforms from physical parameters, inverts them for depth, attenuation coefficient and bottom reflectance, and bridges gaps between waveform populations with optimal transport.

It comprises the following modules:

* :mod:`bathywave.wave`: core waveform types, preprocessing, dataset splits and regression metrics.
* :mod:`bathywave.simulator`: parametric forward model of the received power and dataset generation.
* :mod:`bathywave.inversion`: peak detection, time-of-flight depth, look-up-table inversion and attenuation regression.
* :mod:`bathywave.nn`: a numpy 1D convolutional network stack and the tri-branch regressor.
* :mod:`bathywave.adapt`: exact and entropic optimal transport, barycentric mapping and fine-tuning.
* :mod:`bathywave.io`: dataset and checkpoint files, CSV exports and run configuration.
* :mod:`bathywave.evaluator`: a common interface to execute independent jobs with different parallel backends.
* :mod:`bathywave.experiments`: the sensitivity, noise-augmentation and adaptation studies.

Bathywave installation requires **Python >= 3.10**.
"""
from bathywave.__version__ import __version__, __version_suffix__  # noqa: F401

name = "bathywave"
version = __version__
