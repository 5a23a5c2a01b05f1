"""
Prediction and evaluation
-------------------------

.. code-block:: console

    $ bathywave predict --model m.bwnn --in d.bwf --out predictions.csv
    $ bathywave evaluate --model m.bwnn --in test.bwf --out metrics.csv
"""
from bathywave.core.cli._common import add_common_arguments, finish, load_run_config, with_paths
from bathywave.io import export_metrics, export_predictions, load_model, read_dataset
from bathywave.nn import evaluate, predict


def add_subparser(subparsers):
    """
    :meta private:
    """
    for name, help, default_out in (
        ("predict", "Predict depth, kd and bottom reflectance.", "predictions.csv"),
        ("evaluate", "Score a model on a labeled dataset.", "metrics.csv"),
    ):
        parser = subparsers.add_parser(name, help=help)
        parser.add_argument("--model", required=True, help="Type[str]. Model checkpoint.")
        parser.add_argument("--in", dest="input", required=True, help="Type[str]. Dataset file.")
        parser.add_argument("--out", default=default_out, help=f"Type[str]. Output CSV. Defaults to '{default_out}'.")
        add_common_arguments(parser)
        parser.set_defaults(func=main, command=name)


def main(**kwargs):
    """
    :meta private:
    """
    config = load_run_config(kwargs)
    config = with_paths(config, model=kwargs["model"], dataset=kwargs["input"], out=kwargs["out"])
    model = load_model(kwargs["model"])
    ds = read_dataset(kwargs["input"])

    if kwargs["command"] == "predict":
        export_predictions(predict(model, ds), kwargs["out"])
    else:
        metrics = evaluate(model, ds)
        export_metrics(metrics, kwargs["out"])
        for name, m in metrics.items():
            print(f"{name}: mae={m.mae:.6g} rmse={m.rmse:.6g} r2={m.r2}")
    return finish(config, kwargs, kwargs["out"])
