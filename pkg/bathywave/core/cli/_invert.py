"""
Classical inversion
-------------------

``invert`` estimates the depth of every waveform from the time between its surface and
bottom echoes and, when look-up-table axes are given, the parameters of the closest table
entry. ``kdfit`` regresses the log bottom intensity on depth to estimate the diffuse
attenuation coefficient.

.. code-block:: console

    $ bathywave invert --in d.bwf --out inversion.csv --lut-depth 0.5:19:80 --lut-kd 0:1:21
    $ bathywave kdfit --in d.bwf --scatter kd_scatter.csv
"""
import logging

import numpy as np
import pandas as pd

from bathywave.core.cli._common import add_common_arguments, finish, load_run_config, with_paths
from bathywave.core.exceptions import BathywaveError, ConfigError
from bathywave.inversion import DEFAULT_PULSE_WIDTH, build_lut, depth_from_waveform, kd_scatter, lut_invert
from bathywave.io import export_csv, export_scatter, read_dataset
from bathywave.wave import WATER_REFRACTIVE_INDEX

logger = logging.getLogger(__name__)

LUT_AXES = ("depth", "kd", "i_ref", "i_w")


def parse_axis(name: str, text: str) -> np.ndarray:
    """Parse ``START:STOP:N`` into ``N`` evenly spaced values.

    :meta private:
    """
    try:
        start, stop, num = text.split(":")
        start, stop, num = float(start), float(stop), int(num)
    except ValueError:
        raise ConfigError(f"lut.axes.{name}", f"expected START:STOP:N, got '{text}'")
    if num < 1:
        raise ConfigError(f"lut.axes.{name}", "needs at least one value")
    return np.linspace(start, stop, num)


def add_subparser(subparsers):
    """
    :meta private:
    """
    parser = subparsers.add_parser("invert", help="Peak-based depth and look-up-table inversion.")
    parser.add_argument("--in", dest="input", required=True, help="Type[str]. Dataset file.")
    parser.add_argument("--out", default="inversion.csv", help="Type[str]. Output CSV. Defaults to 'inversion.csv'.")
    parser.add_argument("--n-w", type=float, default=WATER_REFRACTIVE_INDEX, help="Type[float]. Water refractive index. Defaults to '1.33'.")
    parser.add_argument("--pulse-width", type=float, default=DEFAULT_PULSE_WIDTH, help="Type[float]. Smallest resolvable echo separation in seconds. Defaults to '10e-9'.")
    for name in LUT_AXES:
        flag = name.replace("_", "-")
        parser.add_argument(f"--lut-{flag}", dest=f"lut_{name}", default=None, help=f"START:STOP:N values of '{name}' in the look-up table.")
    add_common_arguments(parser)
    parser.set_defaults(func=main_invert, command="invert")

    parser = subparsers.add_parser("kdfit", help="Estimate the diffuse attenuation coefficient.")
    parser.add_argument("--in", dest="input", required=True, help="Type[str]. Dataset file.")
    parser.add_argument("--scatter", default="kd_scatter.csv", help="Type[str]. Scatter CSV. Defaults to 'kd_scatter.csv'.")
    parser.add_argument("--n-w", type=float, default=WATER_REFRACTIVE_INDEX, help="Type[float]. Water refractive index. Defaults to '1.33'.")
    parser.add_argument("--pulse-width", type=float, default=DEFAULT_PULSE_WIDTH, help="Type[float]. Smallest resolvable echo separation in seconds. Defaults to '10e-9'.")
    add_common_arguments(parser)
    parser.set_defaults(func=main_kdfit, command="kdfit")


def main_invert(**kwargs):
    """
    :meta private:
    """
    config = load_run_config(kwargs)
    axes = {
        name: parse_axis(name, kwargs[f"lut_{name}"])
        for name in LUT_AXES
        if kwargs[f"lut_{name}"] is not None
    }
    config = with_paths(config, dataset=kwargs["input"], out=kwargs["out"])
    ds = read_dataset(kwargs["input"])
    lut = build_lut(axes, grid=ds.grid) if axes and len(ds) else None

    rows = []
    failed = 0
    for i, sample in enumerate(ds):
        row = {"index": i, "depth_peak": np.nan}
        try:
            row["depth_peak"] = depth_from_waveform(sample.waveform, kwargs["n_w"], pulse_width=kwargs["pulse_width"])
        except BathywaveError as e:
            failed += 1
            logger.info(f"sample {i}: {type(e).__name__}: {e}")
        if lut is not None:
            params, merit = lut_invert(sample.waveform, lut)
            for name in axes:
                row[f"{name}_lut"] = getattr(params, name)
            row["merit"] = merit
        rows.append(row)

    export_csv(pd.DataFrame(rows), kwargs["out"])
    print(f"inverted {len(ds) - failed} of {len(ds)} waveform(s), wrote {kwargs['out']}")
    return finish(config, kwargs, kwargs["out"])


def main_kdfit(**kwargs):
    """
    :meta private:
    """
    config = load_run_config(kwargs)
    config = with_paths(config, dataset=kwargs["input"], scatter=kwargs["scatter"])
    ds = read_dataset(kwargs["input"])
    pairs, fit, skipped = kd_scatter(ds.waveforms, kwargs["n_w"], pulse_width=kwargs["pulse_width"])
    export_scatter(pairs, kwargs["scatter"])

    print(f"kd_hat={fit.kd_hat:.17g}")
    print(f"kd={fit.kd_hat / 2:.17g}")
    print(f"slope={fit.slope:.17g} intercept={fit.intercept:.17g} r2={fit.r2:.17g}")
    print(f"n_points={fit.n_points} skipped={len(skipped)}")
    return finish(config, kwargs, kwargs["scatter"])
