"""bathywave command line interface.

It can be used in the shell with:

.. code-block:: console

    $ bathywave --help

    usage: bathywave [-h] {generate,generate-shifted,train,predict,evaluate,invert,kdfit,adapt,finetune,gradcheck,sensitivity,experiment} ...

    bathywave command line.

Every command exits with status 0 on success. Library errors are reported on stderr as
one line ``error: <ErrorClass>: <message>`` with exit status 1; usage errors exit with
status 2.
"""
import argparse
import logging
import sys

from bathywave.core.cli import _adapt, _generate, _gradcheck, _invert, _predict, _studies, _train
from bathywave.core.exceptions import BathywaveError, UnknownCommand

logger = logging.getLogger(__name__)

COMMANDS = (
    "generate",
    "generate-shifted",
    "train",
    "predict",
    "evaluate",
    "invert",
    "kdfit",
    "adapt",
    "finetune",
    "gradcheck",
    "sensitivity",
    "experiment",
)


def create_parser():
    """
    :meta private:
    """
    parser = argparse.ArgumentParser(prog="bathywave", description="bathywave command line.")

    subparsers = parser.add_subparsers()

    # simulation
    _generate.add_subparser(subparsers)

    # neural network
    _train.add_subparser(subparsers)
    _predict.add_subparser(subparsers)

    # classical inversion
    _invert.add_subparser(subparsers)

    # domain adaptation
    _adapt.add_subparser(subparsers)

    _gradcheck.add_subparser(subparsers)
    _studies.add_subparser(subparsers)

    return parser


def main(argv=None) -> int:
    """Run one command and return its exit status.

    :meta private:
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = create_parser()

    try:
        if argv and not argv[0].startswith("-") and argv[0] not in COMMANDS:
            raise UnknownCommand(argv[0])

        args = parser.parse_args(argv)
        if not hasattr(args, "func"):
            parser.print_help()
            return 0

        kwargs = vars(args)
        func = kwargs.pop("func")
        kwargs["argv"] = argv
        return func(**kwargs)
    except BathywaveError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


run_command = main
