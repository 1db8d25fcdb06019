# pylint: disable=invalid-name
"""
Failure classes of the morphPairs pipeline. The numeric values double as process exit codes.
"""
from enum import IntEnum


class ErrorType(IntEnum):
    """
    Error classes based on the exit codes of the command line interface.
    """

    OK = 0
    USAGE = 1
    IO = 2
    COMPUTATION = 3
