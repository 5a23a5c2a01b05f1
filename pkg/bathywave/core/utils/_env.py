import logging
import os

logger = logging.getLogger(__name__)

NUM_WORKERS_ENV = "BATHYWAVE_NUM_WORKERS"


def default_num_workers() -> int:
    """Worker count taken from ``BATHYWAVE_NUM_WORKERS``, ``1`` when unset or invalid."""
    value = os.environ.get(NUM_WORKERS_ENV)
    if value is None:
        return 1
    try:
        workers = int(value)
    except ValueError:
        logger.warning(f"ignoring {NUM_WORKERS_ENV}={value!r}, expected an integer")
        return 1
    return max(1, workers)
