"""
This evaluator sub-package provides a common interface to execute independent jobs with different parallel backends. It is used to fan out dataset generation and sensitivity studies.
An ``Evaluator``, when instanciated, is bound to a ``run``-function which takes as first argument a dictionnary and optionally has other keyword-arguments. The ``run``-function has to return a Python serializable value (under ``pickle`` protocol).

An example ``run``-function is:

.. code-block:: python

    def run(config: dict) -> float:
        return config["x"] ** 2

Jobs are gathered in submission order, so results never depend on the backend nor on the number of workers.
"""

from bathywave.evaluator._backends import ProcessPoolEvaluator, SerialEvaluator, ThreadPoolEvaluator
from bathywave.evaluator._evaluator import EVALUATORS, Evaluator
from bathywave.evaluator._job import Job

__all__ = [
    "Evaluator",
    "EVALUATORS",
    "Job",
    "ProcessPoolEvaluator",
    "SerialEvaluator",
    "ThreadPoolEvaluator",
]
