import copy


class Job:
    """A unit of work of an ``Evaluator``: one call of the run function on one configuration.

    Args:
        id (int): submission rank of the job, unique within its evaluator.
        config (dict): argument dictionnary of the ``run_function``; the evaluator adds ``job_id`` to it while the job runs.
        run_function (callable): function executed by the ``Evaluator``.

    Attributes:
        result: value returned by ``run_function``, ``None`` until the job is done.
        elapsed (float): seconds spent inside ``run_function``.
    """

    READY = 0
    RUNNING = 1
    DONE = 2

    def __init__(self, id: int, config: dict, run_function):
        self.id = id
        self.config = copy.deepcopy(config)
        self.config["job_id"] = id
        self.run_function = run_function
        self.status = self.READY
        self.result = None
        self.elapsed = None
        self.timestamp_submit = None
        self.timestamp_gather = None

    def __repr__(self) -> str:
        status = ("ready", "running", "done")[self.status]
        return f"Job(id={self.id}, status={status})"

    def __getitem__(self, index):
        return (copy.deepcopy(self.config), self.result)[index]
