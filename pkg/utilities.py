"""Utility variables, functions and exceptions for morphPairs"""
import math

from .ErrorType import ErrorType

# Don't change the order in this map, otherwise it might break!
_ESCAPE_MAP = [
    ("\\", r"\\"),
    ("\n", r"\n"),
    ("\r", r"\r"),
    ("\t", r"\t"),
    (",", r"\c"),
]

# Written in place of an empty rule pattern.
EPSILON = "ε"

# Comparisons against score floors use this tolerance.
SCORE_TOLERANCE = 1e-12


def escape(raw):
    """
    Escapes characters that need escaping according to _ESCAPE_MAP
    """
    for char, replacement in _ESCAPE_MAP:
        raw = raw.replace(char, replacement)
    return raw


def unescape(raw):
    """
    Undo escaping of characters according to _ESCAPE_MAP
    """
    # Single left-to-right scan: a chained replace would turn "\\c" back into ","
    out = []
    i = 0
    reverse = {replacement: char for char, replacement in _ESCAPE_MAP}
    while i < len(raw):
        pair = raw[i : i + 2]
        if pair in reverse:
            out.append(reverse[pair])
            i += 2
        else:
            out.append(raw[i])
            i += 1
    return "".join(out)


def join_list(values):
    """
    Joins a list of strings into one escaped, comma separated value.
    :type values: list[str]
    :rtype: str
    """
    return ",".join(escape(value) for value in values)


def split_list(raw):
    """
    Inverse of join_list.
    :type raw: str
    :rtype: list[str]
    """
    if raw == "":
        return []
    return [unescape(part) for part in raw.split(",")]


def canonical_pair(word_a, word_b):
    """
    Orders an unordered word pair lexicographically.
    :rtype: tuple[str, str]
    """
    if word_b < word_a:
        return word_b, word_a
    return word_a, word_b


def format_float(value):
    """
    Fixed 9 digit rendering used in every artifact file.
    """
    if value == 0:
        # avoids "-0.000000000"
        value = 0.0
    return f"{value:.9f}"


def at_least(value, floor):
    """
    value >= floor, tolerating representation error at the boundary.
    """
    return value >= floor or math.isclose(value, floor, rel_tol=0.0, abs_tol=SCORE_TOLERANCE)


def pattern_to_field(pattern):
    """
    Serializes a rule pattern, the empty pattern becomes EPSILON.
    """
    return pattern if pattern else EPSILON


def field_to_pattern(field):
    """
    Inverse of pattern_to_field.
    """
    return "" if field == EPSILON else field


class MorphPairsException(Exception):
    """
    Basic Exception for all morphPairs Exceptions.
    """

    error_type = ErrorType.COMPUTATION

    def __init__(self, message, error_type=None):
        """
        :param message: Error message.
        :param error_type: Overrides the class default error type.
        :type message: str
        :type error_type: ErrorType
        """
        if error_type is not None:
            self.error_type = error_type
        self._msg = message
        super().__init__(message)

    @property
    def message(self):
        """
        Get the exception message.
        """
        return self._msg

    @property
    def type(self):
        """
        Get the exception type.
        """
        return self.error_type

    @property
    def id(self):
        """
        Get the exception id, which is also the exit status.
        """
        return int(self.error_type)


class ConfigException(MorphPairsException):
    """
    Invalid or contradictory configuration, or a command line usage error.
    """

    error_type = ErrorType.USAGE


class CorpusDecodeException(MorphPairsException):
    """
    Corpus bytes that cannot be decoded with the configured encoding.
    """

    error_type = ErrorType.IO

    def __init__(self, path, offset, encoding):
        self._offset = offset
        super().__init__(
            f"cannot decode {path} as {encoding} at byte offset {offset}"
        )

    @property
    def offset(self):
        """
        Byte offset of the first undecodable byte.
        """
        return self._offset


class ReferenceParseException(MorphPairsException):
    """
    Malformed row in a TSV input file.
    """

    error_type = ErrorType.IO

    def __init__(self, path, line_number, reason):
        self._line_number = line_number
        super().__init__(f"{path}:{line_number}: {reason}")

    @property
    def line_number(self):
        """
        1-based line number of the offending row.
        """
        return self._line_number


class UndefinedInputException(MorphPairsException):
    """
    A score was requested for input it is not defined on.
    """


class UndefinedScoreException(MorphPairsException):
    """
    Mutual information requested for a pair with a zero count.
    """


class CalibrationException(MorphPairsException):
    """
    Automatic weight calibration is impossible, manual weights are required.
    """


class StageException(MorphPairsException):
    """
    Failure of one pipeline stage. Keeps the error type of its cause.
    """

    def __init__(self, stage, cause):
        """
        :param stage: Name of the failing stage.
        :param cause: The original exception.
        :type stage: str
        :type cause: Exception
        """
        self._stage = stage
        self._cause = cause
        if isinstance(cause, MorphPairsException):
            error_type = cause.type
        elif isinstance(cause, OSError):
            error_type = ErrorType.IO
        else:
            error_type = ErrorType.COMPUTATION
        super().__init__(f"stage '{stage}' failed: {cause}", error_type)

    @property
    def stage(self):
        """
        Name of the failing stage.
        """
        return self._stage

    @property
    def cause(self):
        """
        The exception raised inside the stage.
        """
        return self._cause
