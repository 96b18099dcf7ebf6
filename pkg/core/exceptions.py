"""
Error hierarchy shared by every sgach module.
The CLI maps these onto its exit codes.
"""

from typing import Optional

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_SIZE_GUARD = 3
EXIT_MALFORMED = 4
EXIT_INTERRUPTED = 130


class SgachError(Exception):
    """Base class for all toolkit errors."""

    exit_code = EXIT_MALFORMED


class GraphError(SgachError, ValueError):
    """Illegal graph, vertex id or vertex pair."""


class FormatError(GraphError):
    """A line of a graph, coloring or instance file could not be parsed."""

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class UnderlyingGraphMismatch(GraphError):
    """Two 2-edge-colored graphs were compared but their underlying graphs differ."""


class NotIdentifiableError(GraphError):
    """A merge was requested for a pair that cannot be identified."""

    REASONS = ('loop', 'digon', 'uc4')

    def __init__(self, u: int, v: int, reason: str):
        self.u = u
        self.v = v
        self.reason = reason
        super().__init__(f"vertices {u} and {v} are not identifiable ({reason})")


class InvalidColoringError(GraphError):
    """A coloring map is not total, not surjective or uses colors out of range."""


class InstanceError(SgachError, ValueError):
    """3-partition instance, solution or reduction parameters violate their invariants."""


class SizeGuardError(SgachError, RuntimeError):
    """A configured size guard was exceeded; nothing was computed."""

    exit_code = EXIT_SIZE_GUARD

    def __init__(self, what: str, actual: int, limit: int):
        self.what = what
        self.actual = actual
        self.limit = limit
        super().__init__(f"{what}: size {actual} exceeds guard {limit}")
