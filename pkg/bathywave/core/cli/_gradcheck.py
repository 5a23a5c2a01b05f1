"""
Gradient check
--------------

Compare the analytic gradients of every layer kind with central finite differences.
The command exits with status 1 when an error exceeds the tolerance.

.. code-block:: console

    $ bathywave gradcheck --instances 50 --out gradcheck.csv
"""
from bathywave.core.cli._common import add_common_arguments, finish, load_run_config, with_paths
from bathywave.io import export_csv
from bathywave.nn import gradcheck_all

TOLERANCE = 1e-4


def add_subparser(subparsers):
    """
    :meta private:
    """
    parser = subparsers.add_parser("gradcheck", help="Check the layer gradients numerically.")
    parser.add_argument("--instances", type=int, default=50, help="Type[int]. Random instances per layer kind. Defaults to '50'.")
    parser.add_argument("--seed", type=int, default=0, help="Type[int]. Defaults to '0'.")
    parser.add_argument("--h", type=float, default=1e-5, help="Type[float]. Finite-difference step. Defaults to '1e-05'.")
    parser.add_argument("--tolerance", type=float, default=TOLERANCE, help="Type[float]. Largest accepted relative error. Defaults to '0.0001'.")
    parser.add_argument("--out", default="gradcheck.csv", help="Type[str]. Output CSV. Defaults to 'gradcheck.csv'.")
    add_common_arguments(parser)
    parser.set_defaults(func=main, command="gradcheck")


def main(**kwargs):
    """
    :meta private:
    """
    config = load_run_config(kwargs)
    config = with_paths(config, out=kwargs["out"])
    table = gradcheck_all(kwargs["instances"], seed=kwargs["seed"], h=kwargs["h"])
    export_csv(table, kwargs["out"])

    worst = table.groupby("kind").max_rel_error.max()
    for kind, error in worst.items():
        print(f"{kind}: max relative error {error:.3g}")
    status = finish(config, kwargs, kwargs["out"])
    if (worst > kwargs["tolerance"]).any():
        print(f"gradient check failed: tolerance {kwargs['tolerance']:g} exceeded")
        return 1
    return status
