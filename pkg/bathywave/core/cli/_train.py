"""
Training
--------

Train a tri-branch model on a dataset file. With ``--in`` the dataset is split into
train, validation and test sets (``split_ratios`` and ``split_seed`` of the configuration);
``--test-out`` writes the test split for a later ``evaluate``.

.. code-block:: console

    $ bathywave train --in d.bwf --out m.bwnn --curves curves.csv --test-out test.bwf
    $ bathywave train --train train.bwf --val val.bwf --out m.bwnn --max-epochs 10
"""
import argparse
import logging

from bathywave.core.cli._common import add_common_arguments, finish, load_run_config, with_paths
from bathywave.core.exceptions import ConfigError
from bathywave.core.parser import add_arguments_from_signature
from bathywave.io import export_metrics, read_dataset, save_model, write_dataset
from bathywave.nn import ModelConfig, TrainConfig, build_tribranch, count_params, train
from bathywave.wave import split_dataset

logger = logging.getLogger(__name__)


def add_subparser(subparsers):
    """
    :meta private:
    """
    parser = subparsers.add_parser("train", help="Train a tri-branch model.")
    parser.add_argument("--in", dest="input", default=None, help="Type[str]. Dataset to split into train/val/test.")
    parser.add_argument("--train", dest="train_path", default=None, help="Type[str]. Training dataset.")
    parser.add_argument("--val", dest="val_path", default=None, help="Type[str]. Validation dataset.")
    parser.add_argument("--out", required=True, help="Type[str]. Output model checkpoint.")
    parser.add_argument("--curves", default=None, help="Type[str]. Loss curves CSV.")
    parser.add_argument("--metrics", default=None, help="Type[str]. Validation metrics CSV.")
    parser.add_argument("--test-out", default=None, help="Type[str]. Write the test split to this dataset file.")
    parser.add_argument("--model-seed", type=int, dest="run.model_seed", default=argparse.SUPPRESS, help="Type[int]. Initialization seed.")
    parser.add_argument("--split-seed", type=int, dest="run.split_seed", default=argparse.SUPPRESS, help="Type[int]. Split seed.")
    add_arguments_from_signature(parser, TrainConfig, dest_prefix="train.")
    add_arguments_from_signature(parser, ModelConfig, exclude=["input_length"], dest_prefix="model.")
    add_common_arguments(parser)
    parser.set_defaults(func=main, command="train")


def main(**kwargs):
    """
    :meta private:
    """
    config = load_run_config(kwargs)
    source, train_path, val_path = kwargs["input"], kwargs["train_path"], kwargs["val_path"]
    if (source is None) == (train_path is None or val_path is None):
        raise ConfigError("paths", "give either --in or both --train and --val")
    config = with_paths(
        config,
        dataset=source,
        train=train_path,
        val=val_path,
        out=kwargs["out"],
        curves=kwargs["curves"],
        metrics=kwargs["metrics"],
        test=kwargs["test_out"],
    )

    if source is not None:
        train_ds, val_ds, test_ds = split_dataset(read_dataset(source), config.split_ratios, config.split_seed)
    else:
        train_ds, val_ds, test_ds = read_dataset(train_path), read_dataset(val_path), None

    model = build_tribranch(config.model, seed=config.model_seed)
    total, trainable, non_trainable = count_params(model)
    print(f"model: {total} parameters ({trainable} trainable, {non_trainable} non-trainable)")

    report = train(model, train_ds, val_ds, config.train, curves_path=kwargs["curves"])
    save_model(model, kwargs["out"])
    if kwargs["metrics"]:
        export_metrics(report.val_metrics, kwargs["metrics"])
    if kwargs["test_out"] and test_ds is not None:
        write_dataset(test_ds, kwargs["test_out"])

    print(
        f"stopped at epoch {report.stopped_epoch}, best val loss {report.best_val_loss} "
        f"at epoch {report.best_epoch}"
    )
    for name, m in report.val_metrics.items():
        print(f"{name}: mae={m.mae:.6g} rmse={m.rmse:.6g} r2={m.r2}")
    return finish(config, kwargs, kwargs["out"])
