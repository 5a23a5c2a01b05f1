import logging
import os

import yaml

from bathywave.__version__ import __version__

logger = logging.getLogger(__name__)

CONTEXT_FILE = "context.yaml"


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "item"):
        return value.item()
    return value


def write_context(directory, command: str, config: dict, argv=None) -> str:
    """Dump the version, command and resolved configuration of a run to ``context.yaml``.

    Returns:
        str: the path written.
    """
    context = {
        "version": __version__,
        "command": command,
        "argv": list(argv or []),
        "config": _plain(config),
    }
    path = os.path.join(directory or ".", CONTEXT_FILE)
    with open(path, "w") as f:
        yaml.safe_dump(context, f, sort_keys=False)
    logger.info(f"Wrote run context to {path}")
    return path
