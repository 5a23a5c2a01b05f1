"""The callback module contains sub-classes of the ``Callback`` class used to trigger custom actions on the start and completion of jobs by the ``Evaluator``. Callbacks can be used with any Evaluator implementation.
"""
from tqdm import tqdm


class Callback:
    def on_launch(self, job):
        """Called each time a ``Job`` is created by the ``Evaluator``.

        Args:
            job (Job): The created job.
        """
        ...

    def on_done(self, job):
        """Called each time a Job is completed by the Evaluator.

        Args:
            job (Job): The completed job.
        """
        ...


class TqdmCallback(Callback):
    """Show a progress bar of the completed jobs.

    An example usage can be:

    .. code-block:: python

        Evaluator.create(run, method="thread", method_kwargs={"num_workers": 4, "callbacks": [TqdmCallback(total=10)]})

    Args:
        total (int, optional): expected number of jobs. Defaults to None.
        desc (str, optional): label of the bar. Defaults to None.
    """

    def __init__(self, total: int = None, desc: str = None):
        self._total = total
        self._desc = desc
        self._n_done = 0
        self._tqdm = None

    def on_done(self, job):

        if self._tqdm is None:
            self._tqdm = tqdm(total=self._total, desc=self._desc)

        self._n_done += 1
        self._tqdm.update(1)
        if self._total is not None and self._n_done >= self._total:
            self._tqdm.close()


class CollectCallback(Callback):
    """Keep the ids of launched and completed jobs, in the order the evaluator reported them."""

    def __init__(self):
        self.launched = []
        self.done = []

    def on_launch(self, job):
        self.launched.append(job.id)

    def on_done(self, job):
        self.done.append(job.id)
