"""Exception hierarchy shared by every module of the package."""


class GeometryError(ValueError):
    """Invalid or degenerate geometric input."""


class DegenerateError(GeometryError):
    """Input collapses to something lower-dimensional than required."""


class OpenPathError(GeometryError):
    """Consecutive segments of a closed path do not meet."""

    def __init__(self, message, junction=None):
        super().__init__(message)
        self.junction = junction


class RepairError(GeometryError):
    """A convexity repair could not produce a valid result."""


class PathSyntaxError(GeometryError):
    """Malformed path text.

    ``offset`` is a 0-based character offset into the source; ``line`` and
    ``column`` are 1-based and always filled in.
    """

    def __init__(self, message, offset, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.reason = message
        self.offset = offset
        self.line = line
        self.column = column
