# for the documentation
from . import _adapt, _generate, _gradcheck, _invert, _predict, _studies, _train
from . import _cli
from ._cli import main, run_command

commands = [_cli, _generate, _train, _predict, _invert, _adapt, _gradcheck, _studies]

__doc__ = ""

for c in commands:
    __doc__ += c.__doc__

__all__ = ["main", "run_command"]
