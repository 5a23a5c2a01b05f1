"""Helpers shared by the sub-commands.

:meta private:
"""
import dataclasses
import logging
import os

from bathywave.core.parser import pop_prefixed
from bathywave.io import RunConfig, load_config, write_context

SECTIONS = ("grid", "ranges", "shift", "model", "train", "adapt")


def add_common_arguments(parser):
    """
    :meta private:
    """
    parser.add_argument(
        "--config", default=None, help="Type[str]. JSON run configuration. Defaults to 'None'."
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Type[int]. Number of workers. Defaults to 'BATHYWAVE_NUM_WORKERS' or 1.",
    )
    parser.add_argument(
        "--verbose", action="store_true", help="Write INFO logs to 'bathywave.log'."
    )
    parser.add_argument(
        "--no-context", action="store_true", help="Do not write 'context.yaml'."
    )


def load_run_config(kwargs) -> RunConfig:
    """Configure logging, read the configuration file and apply every flag override.

    :meta private:
    """
    if kwargs.pop("verbose"):
        logging.basicConfig(filename="bathywave.log", level=logging.INFO)

    path = kwargs.pop("config")
    config = RunConfig() if path is None else load_config(path)
    workers = kwargs.pop("workers")
    if workers is not None:
        config = config.replace(workers=workers)

    run_changes = pop_prefixed(kwargs, "run.")
    if run_changes:
        config = config.replace(**run_changes)
    sinkhorn_changes = pop_prefixed(kwargs, "sinkhorn.")
    if sinkhorn_changes:
        sinkhorn = dataclasses.replace(config.adapt.sinkhorn, **sinkhorn_changes)
        config = config.replace("adapt", sinkhorn=sinkhorn)
    for section in SECTIONS:
        changes = pop_prefixed(kwargs, f"{section}.")
        if changes:
            config = config.replace(section, **changes)
    return config


def with_paths(config: RunConfig, **paths) -> RunConfig:
    """Record the files of the run and validate the whole configuration before any output.

    :meta private:
    """
    config = config.replace(paths={k: v for k, v in paths.items() if v is not None})
    config.validate()
    return config


def finish(config: RunConfig, kwargs, output):
    """
    :meta private:
    """
    if not kwargs.get("no_context"):
        write_context(
            os.path.dirname(os.path.abspath(output)),
            kwargs["command"],
            config.to_dict(),
            kwargs.get("argv"),
        )
    return 0
