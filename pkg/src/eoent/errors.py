"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`EOEntError`
and carries the CLI exit code used when it escapes a command.
"""
from __future__ import annotations


class EOEntError(Exception):
    exit_code = 3


class ParameterError(EOEntError, ValueError):
    """A physical or model parameter is outside its valid domain."""

    exit_code = 2

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class ConfigError(EOEntError):
    exit_code = 2


class NumericalError(EOEntError):
    """A numerical kernel failed (singular system, non-convergence)."""

    def __init__(self, message: str, matrix=None):
        self.matrix = matrix
        super().__init__(message)


class UnphysicalCovarianceError(NumericalError):
    pass


class InternalError(EOEntError):
    pass


class StabilityError(EOEntError):
    """An operation requires a stable drift matrix and did not get one."""

    exit_code = 4

    def __init__(self, message: str, branches=()):
        self.branches = tuple(branches)
        super().__init__(message)


class AllUnstableError(StabilityError):
    pass


class NoMaximumError(StabilityError):
    pass
