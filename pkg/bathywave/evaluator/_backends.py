import asyncio
import copy
import functools
import logging
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor

from bathywave.evaluator._evaluator import Evaluator

logger = logging.getLogger(__name__)


def _timed(run_function, config, kwargs):
    start = time.perf_counter()
    result = run_function(config, **kwargs)
    return result, time.perf_counter() - start


class SerialEvaluator(Evaluator):
    """Runs the jobs one after the other in the calling thread.

    Each job receives a deep copy of its configuration, as a pool worker would.

    Args:
        run_function (callable): functions to be executed by the ``Evaluator``.
        num_workers (int, optional): ignored, jobs always run one at a time. Defaults to 1.
        callbacks (list, optional): A list of callbacks to trigger custom actions at the creation or completion of jobs. Defaults to None.
    """

    def __init__(
        self,
        run_function,
        num_workers: int = 1,
        callbacks: list = None,
        run_function_kwargs: dict = None,
    ):
        super().__init__(run_function, 1, callbacks, run_function_kwargs)
        logger.info(f"Serial Evaluator will execute {self.run_function}")

    async def execute(self, job):
        job.result, job.elapsed = _timed(
            self.run_function, copy.deepcopy(job.config), self.run_function_kwargs
        )
        return job


class _PoolEvaluator(Evaluator):
    """Runs the jobs on a ``concurrent.futures`` executor, at most ``num_workers`` at a time."""

    executor_class = None
    unit = "worker(s)"

    def __init__(
        self,
        run_function,
        num_workers: int = 1,
        callbacks: list = None,
        run_function_kwargs: dict = None,
    ):
        super().__init__(run_function, num_workers, callbacks, run_function_kwargs)
        self.sem = asyncio.Semaphore(num_workers)
        # one executor for every submit, workers are expensive to start
        self.executor = self.executor_class(max_workers=num_workers)

        logger.info(
            f"{type(self).__name__} will execute {self.run_function} on {num_workers} {self.unit}"
        )

    async def execute(self, job):
        async with self.sem:
            call = functools.partial(
                _timed, job.run_function, job.config, self.run_function_kwargs
            )
            job.result, job.elapsed = await self.loop.run_in_executor(self.executor, call)
        return job


class ThreadPoolEvaluator(_PoolEvaluator):
    """Runs the jobs on a ``ThreadPoolExecutor``.

    .. warning:: numpy releases the GIL only inside its kernels, expect a modest speed-up on the small arrays of a single waveform.
    """

    executor_class = ThreadPoolExecutor
    unit = "thread(s)"


class ProcessPoolEvaluator(_PoolEvaluator):
    """Runs the jobs on a ``ProcessPoolExecutor``.

    The ``run_function`` and the job configurations must be picklable.
    """

    executor_class = ProcessPoolExecutor
    unit = "process(es)"
