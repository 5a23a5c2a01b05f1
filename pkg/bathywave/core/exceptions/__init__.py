"""Bathywave exceptions
"""

# ! Root exceptions


class BathywaveError(Exception):
    """Root bathywave exception."""


class BathywaveWarning(UserWarning):
    """Root bathywave warning, used for conditions which are reported but do not stop a computation."""


from bathywave.core.exceptions.config import ConfigError, UnknownCommand  # noqa: E402
