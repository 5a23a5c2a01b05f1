import time
import unittest

import pytest


def run(config, y=0):
    return config["x"] + y


def run_slow_first(config):
    # early jobs finish last
    time.sleep(0.01 * (5 - config["x"]))
    return config["x"] ** 2


def run_failing(config):
    if config["x"] == 2:
        raise RuntimeError("boom")
    return config["x"]


class TestEvaluator(unittest.TestCase):
    @pytest.mark.fast
    def test_import(self):
        from bathywave.evaluator import Evaluator

    @pytest.mark.fast
    def test_wrong_evaluator(self):
        from bathywave.evaluator import Evaluator

        with pytest.raises(ValueError):
            Evaluator.create(run, method="threadPool", method_kwargs={"num_workers": 1})

    @pytest.mark.fast
    def test_serial(self):
        from bathywave.evaluator import Evaluator, SerialEvaluator

        with Evaluator.create(run, method="serial", method_kwargs={"run_function_kwargs": {"y": 1}}) as evaluator:
            assert isinstance(evaluator, SerialEvaluator)
            evaluator.submit([{"x": i} for i in range(5)])
            jobs = evaluator.gather()
        assert [job.result for job in jobs] == [1, 2, 3, 4, 5]
        assert [job.id for job in jobs] == list(range(5))
        assert all("job_id" not in job.config for job in jobs)
        assert all(job.elapsed >= 0 for job in jobs)
        assert repr(jobs[0]) == "Job(id=0, status=done)"
        assert jobs[2][0] == {"x": 2}
        assert jobs[2][1] == 3

    @pytest.mark.fast
    def test_gather_without_submit(self):
        from bathywave.evaluator import SerialEvaluator

        with pytest.raises(ValueError):
            SerialEvaluator(run).gather()

    @pytest.mark.fast
    def test_thread_order(self):
        from bathywave.evaluator import Evaluator
        from bathywave.evaluator.callback import CollectCallback

        collect = CollectCallback()
        with Evaluator.create(
            run_slow_first, method="thread", method_kwargs={"num_workers": 5, "callbacks": [collect]}
        ) as evaluator:
            evaluator.submit([{"x": i} for i in range(5)])
            jobs = evaluator.gather()
        assert [job.result for job in jobs] == [0, 1, 4, 9, 16]
        assert collect.launched == list(range(5))
        assert collect.done == list(range(5))

    @pytest.mark.fast
    def test_process(self):
        from bathywave.evaluator import Evaluator

        with Evaluator.create(run, method="process", method_kwargs={"num_workers": 2}) as evaluator:
            evaluator.submit([{"x": i} for i in range(4)])
            jobs = evaluator.gather()
        assert [job.result for job in jobs] == [0, 1, 2, 3]

    @pytest.mark.fast
    def test_failure_propagates(self):
        from bathywave.evaluator import Evaluator

        with Evaluator.create(run_failing, method="thread", method_kwargs={"num_workers": 2}) as evaluator:
            evaluator.submit([{"x": i} for i in range(4)])
            with pytest.raises(RuntimeError):
                evaluator.gather()

    @pytest.mark.fast
    def test_tqdm_callback(self):
        from bathywave.evaluator import Evaluator
        from bathywave.evaluator.callback import TqdmCallback

        bar = TqdmCallback(total=3, desc="test")
        with Evaluator.create(run, method="serial", method_kwargs={"callbacks": [bar]}) as evaluator:
            evaluator.submit([{"x": i} for i in range(3)])
            evaluator.gather()
        assert bar._n_done == 3


class TestUtils(unittest.TestCase):
    @pytest.mark.fast
    def test_default_num_workers(self):
        from bathywave.core.utils import NUM_WORKERS_ENV, default_num_workers

        with pytest.MonkeyPatch.context() as mp:
            mp.delenv(NUM_WORKERS_ENV, raising=False)
            assert default_num_workers() == 1
            mp.setenv(NUM_WORKERS_ENV, "6")
            assert default_num_workers() == 6
            mp.setenv(NUM_WORKERS_ENV, "many")
            assert default_num_workers() == 1

    @pytest.mark.fast
    def test_derive_seed(self):
        from bathywave.core.utils import derive_seed

        streams = derive_seed(7, 3, n_streams=3)
        assert len(set(streams)) == 3
        assert derive_seed(7, 3, n_streams=3) == streams
        assert derive_seed(7, 4) != derive_seed(7, 3)
