"""
Studies
-------

``sensitivity`` trains one model per point of a grid of architecture and training knobs;
``experiment`` runs one of the documented studies with its pinned seeds and sizes.

.. code-block:: console

    $ bathywave sensitivity --in d.bwf --out sensitivity.csv --knob convs_per_branch=6,10 --knob loss=mae,mse
    $ bathywave experiment noise --out noise.csv
    $ bathywave experiment adaptation --out adaptation.csv
"""
import argparse
import logging

import pandas as pd

from bathywave.core.cli._common import add_common_arguments, finish, load_run_config, with_paths
from bathywave.core.exceptions import ConfigError
from bathywave.core.utils import default_num_workers
from bathywave.evaluator import EVALUATORS
from bathywave.experiments import DEFAULT_KNOBS, run_adaptation_experiment, run_noise_experiment, run_sensitivity
from bathywave.io import export_csv, read_dataset
from bathywave.wave import split_dataset

logger = logging.getLogger(__name__)

EXPERIMENTS = ("noise", "adaptation")


def _value(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


def parse_knobs(items) -> dict:
    """Parse repeated ``NAME=v1,v2`` flags; numbers are converted, other values stay strings.

    :meta private:
    """
    knobs = {}
    for item in items:
        name, sep, values = item.partition("=")
        if not sep or not name or not values:
            raise ConfigError("knobs", f"expected NAME=v1,v2,..., got '{item}'")
        knobs[name] = [_value(v) for v in values.split(",")]
    return knobs


def add_subparser(subparsers):
    """
    :meta private:
    """
    parser = subparsers.add_parser("sensitivity", help="Train a grid of architecture and training knobs.")
    parser.add_argument("--in", dest="input", required=True, help="Type[str]. Dataset to split into train/val/test.")
    parser.add_argument("--out", default="sensitivity.csv", help="Type[str]. Output CSV. Defaults to 'sensitivity.csv'.")
    parser.add_argument("--knob", action="append", default=[], help="NAME=v1,v2 grid values; repeatable. Defaults to the documented knob grid.")
    parser.add_argument("--method", choices=list(EVALUATORS), dest="run.method", default=argparse.SUPPRESS, help="Evaluator backend of the grid points.")
    parser.add_argument("--progress", action="store_true", help="Show a progress bar.")
    add_common_arguments(parser)
    parser.set_defaults(func=main_sensitivity, command="sensitivity")

    parser = subparsers.add_parser("experiment", help="Run a documented study with its pinned seeds.")
    parser.add_argument("name", choices=EXPERIMENTS, help="Study to run.")
    parser.add_argument("--out", default=None, help="Type[str]. Output CSV. Defaults to '<name>.csv'.")
    parser.add_argument("--method", choices=list(EVALUATORS), dest="run.method", default=argparse.SUPPRESS, help="Evaluator backend of the simulation.")
    add_common_arguments(parser)
    parser.set_defaults(func=main_experiment, command="experiment")


def main_sensitivity(**kwargs):
    """
    :meta private:
    """
    config = load_run_config(kwargs)
    knobs = parse_knobs(kwargs["knob"]) if kwargs["knob"] else dict(DEFAULT_KNOBS)
    config = with_paths(config, dataset=kwargs["input"], out=kwargs["out"])
    train_ds, val_ds, test_ds = split_dataset(read_dataset(kwargs["input"]), config.split_ratios, config.split_seed)

    table = run_sensitivity(
        config,
        knobs,
        train_ds,
        val_ds,
        test_ds,
        method=config.method,
        workers=default_num_workers() if config.workers is None else config.workers,
        progress=kwargs["progress"],
    )
    export_csv(table, kwargs["out"])
    print(table.to_string(index=False))
    return finish(config, kwargs, kwargs["out"])


def main_experiment(**kwargs):
    """
    :meta private:
    """
    config = load_run_config(kwargs)
    name = kwargs["name"]
    out = kwargs["out"] or f"{name}.csv"
    config = with_paths(config, out=out)

    if name == "noise":
        effect = run_noise_experiment(model_cfg=config.model, method=config.method, workers=config.workers)
        table = pd.DataFrame(
            {
                "epoch": range(1, len(effect.plain_curve) + 1),
                "plain_val_loss": effect.plain_curve,
                "augmented_val_loss": effect.augmented_curve,
            }
        )
        for key, value in effect.summary().items():
            print(f"{key}: {value}")
    else:
        table, _ = run_adaptation_experiment(model_cfg=config.model, method=config.method, workers=config.workers)
        print(table.to_string(index=False))

    export_csv(table, out)
    return finish(config, kwargs, out)
