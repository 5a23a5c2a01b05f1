"""Exceptions related with configuration files, flags and commands.
"""
from bathywave.core.exceptions import BathywaveError


class ConfigError(BathywaveError):
    """Raised when a configuration value is missing, unknown or out of its documented bounds.

    Args:
        key (str): dotted name of the offending key.
        reason (str): what is wrong with it.
    """

    def __init__(self, key, reason):
        super().__init__(key, reason)
        self.key = key
        self.reason = reason

    def __str__(self):
        return f"invalid configuration key '{self.key}': {self.reason}"


class UnknownCommand(BathywaveError):
    """Raised when the command line receives a sub-command it does not know."""

    def __init__(self, command):
        super().__init__(command)
        self.command = command

    def __str__(self):
        return f"unknown command '{self.command}'"
