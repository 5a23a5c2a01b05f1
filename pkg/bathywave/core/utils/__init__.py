from ._env import NUM_WORKERS_ENV, default_num_workers
from ._seeds import derive_seed

__all__ = ["default_num_workers", "derive_seed", "NUM_WORKERS_ENV"]
