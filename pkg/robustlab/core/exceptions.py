"""Exception hierarchy shared by all robustlab modules"""

from typing import Optional


class RobustlabError(Exception):
    """Root of every error raised by the library"""


class ConfigError(RobustlabError):
    pass


class FormulaSyntaxError(RobustlabError):
    """Formula text could not be parsed

    Carries the offending position (0-based offset plus 1-based line/column).
    """

    def __init__(self, message: str, position: Optional[int] = None,
                 line: Optional[int] = None, column: Optional[int] = None):
        self.position = position
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class IntervalError(RobustlabError):
    pass


class UnknownFunctionError(RobustlabError):
    pass


class TraceFormatError(RobustlabError):
    pass


class UnknownChannelError(RobustlabError):
    pass


class EmptyWindowError(RobustlabError):
    pass


class InsufficientTraceError(RobustlabError):
    pass


class MetricError(RobustlabError):
    pass


class NonFiniteError(RobustlabError):
    pass


class DivergenceError(RobustlabError):
    pass
