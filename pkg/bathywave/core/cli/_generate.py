"""
Dataset generation
------------------

Simulate labeled waveforms into a dataset file.

.. code-block:: console

    $ bathywave generate --n 1000 --seed 7 --out d.bwf
    $ bathywave generate-shifted --n 1000 --seed 7 --pulse-substitution 2 --out t.bwf
"""
import argparse

from bathywave.core.cli._common import add_common_arguments, finish, load_run_config, with_paths
from bathywave.core.parser import add_arguments_from_signature
from bathywave.evaluator import EVALUATORS
from bathywave.io import write_dataset
from bathywave.simulator import ShiftConfig, generate_dataset, generate_shifted_dataset
from bathywave.wave import TimeGrid


def _add_generate_arguments(parser):
    parser.add_argument("--n", type=int, dest="run.n_samples", default=argparse.SUPPRESS, help="Type[int]. Number of samples.")
    parser.add_argument("--seed", type=int, dest="run.seed", default=argparse.SUPPRESS, help="Type[int]. Dataset seed.")
    parser.add_argument(
        "--method",
        choices=list(EVALUATORS),
        dest="run.method",
        default=argparse.SUPPRESS,
        help="Evaluator backend of the simulation.",
    )
    parser.add_argument("--out", required=True, help="Type[str]. Output dataset file.")
    parser.add_argument("--progress", action="store_true", help="Show a progress bar.")
    add_arguments_from_signature(parser, TimeGrid, dest_prefix="grid.")
    add_common_arguments(parser)


def add_subparser(subparsers):
    """
    :meta private:
    """
    parser = subparsers.add_parser("generate", help="Simulate a labeled dataset.")
    _add_generate_arguments(parser)
    parser.set_defaults(func=main, command="generate")

    parser = subparsers.add_parser(
        "generate-shifted", help="Simulate a labeled dataset with a shifted simulator."
    )
    _add_generate_arguments(parser)
    add_arguments_from_signature(parser, ShiftConfig, dest_prefix="shift.")
    parser.set_defaults(func=main, command="generate-shifted")


def main(**kwargs):
    """
    :meta private:
    """
    config = load_run_config(kwargs)
    out = kwargs["out"]
    config = with_paths(config, out=out)

    common = dict(
        ranges=config.ranges,
        grid=config.grid,
        seed=config.seed,
        method=config.method,
        num_workers=config.workers,
        progress=kwargs["progress"],
    )
    if kwargs["command"] == "generate-shifted":
        ds = generate_shifted_dataset(config.n_samples, shift=config.shift, **common)
    else:
        ds = generate_dataset(config.n_samples, **common)

    write_dataset(ds, out)
    print(f"wrote {len(ds)} samples to {out}")
    return finish(config, kwargs, out)
