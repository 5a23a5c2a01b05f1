"""
Domain adaptation
-----------------

``adapt`` transports target-domain waveforms onto a sample of the training domain before
prediction; ``finetune`` continues training a model on a labeled share of the target
domain and scores it on the rest.

.. code-block:: console

    $ bathywave adapt --model m.bwnn --source d.bwf --target t.bwf --out adapted.csv --metrics adapted_metrics.csv
    $ bathywave finetune --model m.bwnn --target t.bwf --out tuned.bwnn --fraction 0.1
"""
import argparse
import logging

from bathywave.adapt import AdaptConfig, SinkhornConfig, adapt_and_predict, fine_tune, select_fine_tune_subset
from bathywave.core.cli._common import add_common_arguments, finish, load_run_config, with_paths
from bathywave.core.parser import add_arguments_from_signature
from bathywave.io import export_curves, export_metrics, export_predictions, load_model, read_dataset, save_model
from bathywave.nn import TrainConfig, evaluate

logger = logging.getLogger(__name__)


def add_subparser(subparsers):
    """
    :meta private:
    """
    parser = subparsers.add_parser("adapt", help="Predict on a shifted domain after optimal-transport mapping.")
    parser.add_argument("--model", required=True, help="Type[str]. Model checkpoint.")
    parser.add_argument("--source", required=True, help="Type[str]. Dataset of the training domain.")
    parser.add_argument("--target", required=True, help="Type[str]. Dataset of the shifted domain.")
    parser.add_argument("--out", default="adapted.csv", help="Type[str]. Predictions CSV. Defaults to 'adapted.csv'.")
    parser.add_argument("--metrics", default=None, help="Type[str]. Metrics CSV of the adapted predictions.")
    add_arguments_from_signature(parser, AdaptConfig, exclude=["fine_tune_fraction", "lr_scale"], dest_prefix="adapt.")
    add_arguments_from_signature(parser, SinkhornConfig, prefix="sinkhorn", dest_prefix="sinkhorn.")
    add_common_arguments(parser)
    parser.set_defaults(func=main_adapt, command="adapt")

    parser = subparsers.add_parser("finetune", help="Fine-tune a model on a labeled share of a shifted domain.")
    parser.add_argument("--model", required=True, help="Type[str]. Model checkpoint.")
    parser.add_argument("--target", required=True, help="Type[str]. Labeled dataset of the shifted domain.")
    parser.add_argument("--out", required=True, help="Type[str]. Output model checkpoint.")
    parser.add_argument("--metrics", default=None, help="Type[str]. Metrics CSV on the held-out target samples.")
    parser.add_argument("--curves", default=None, help="Type[str]. Loss curves CSV.")
    parser.add_argument("--fraction", type=float, dest="adapt.fine_tune_fraction", default=argparse.SUPPRESS, help="Type[float]. Share of the target used for fine-tuning. Defaults to '0.1'.")
    parser.add_argument("--lr-scale", type=float, dest="adapt.lr_scale", default=argparse.SUPPRESS, help="Type[float]. Learning rate multiplier. Defaults to '0.1'.")
    parser.add_argument("--subset-seed", type=int, dest="adapt.seed", default=argparse.SUPPRESS, help="Type[int]. Seed of the fine-tuning share. Defaults to '0'.")
    add_arguments_from_signature(parser, TrainConfig, exclude=["init_output_bias"], dest_prefix="train.")
    add_common_arguments(parser)
    parser.set_defaults(func=main_finetune, command="finetune")


def main_adapt(**kwargs):
    """
    :meta private:
    """
    config = load_run_config(kwargs)
    config = with_paths(
        config,
        model=kwargs["model"],
        source=kwargs["source"],
        target=kwargs["target"],
        out=kwargs["out"],
        metrics=kwargs["metrics"],
    )
    model = load_model(kwargs["model"])
    source, target = read_dataset(kwargs["source"]), read_dataset(kwargs["target"])

    result = adapt_and_predict(model, target, source, config.adapt)
    export_predictions(result.predictions, kwargs["out"])
    if kwargs["metrics"]:
        export_metrics(result.metrics, kwargs["metrics"])
    for name, m in result.metrics.items():
        print(f"{name}: mae={m.mae:.6g} rmse={m.rmse:.6g} r2={m.r2}")
    converged = all(plan.converged for plan in result.plans)
    print(f"transport plans: {len(result.plans)}, converged: {converged}")
    return finish(config, kwargs, kwargs["out"])


def main_finetune(**kwargs):
    """
    :meta private:
    """
    config = load_run_config(kwargs)
    config = with_paths(
        config,
        model=kwargs["model"],
        target=kwargs["target"],
        out=kwargs["out"],
        metrics=kwargs["metrics"],
        curves=kwargs["curves"],
    )
    model = load_model(kwargs["model"])
    target = read_dataset(kwargs["target"])

    subset, rest = select_fine_tune_subset(target, config.adapt.fine_tune_fraction, config.adapt.seed)
    tuned, report = fine_tune(model, subset, config.train, lr_scale=config.adapt.lr_scale)
    save_model(tuned, kwargs["out"])
    if kwargs["curves"]:
        export_curves(report, kwargs["curves"])
    print(f"fine-tuned on {len(subset)} sample(s), best val loss {report.best_val_loss}")
    if len(rest):
        metrics = evaluate(tuned, rest)
        if kwargs["metrics"]:
            export_metrics(metrics, kwargs["metrics"])
        for name, m in metrics.items():
            print(f"{name}: mae={m.mae:.6g} rmse={m.rmse:.6g} r2={m.r2}")
    return finish(config, kwargs, kwargs["out"])
