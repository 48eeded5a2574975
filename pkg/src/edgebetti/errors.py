"""Exception hierarchy shared by all modules."""


class EdgeBettiError(Exception):
    """Base class for computation errors (CLI exit status 1)."""


class GraphFormatError(EdgeBettiError, ValueError):
    """Malformed graph or complex file."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class LoopEdge(GraphFormatError):
    pass


class DuplicateEdge(GraphFormatError):
    pass


class UnknownVertex(EdgeBettiError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotAForest(EdgeBettiError):
    pass


class Disconnected(EdgeBettiError):
    pass


class NotAFace(EdgeBettiError):
    pass


class NotADualFace(NotAFace):
    pass


class VoidComplex(EdgeBettiError):
    pass


class TooLarge(EdgeBettiError):
    """Input exceeds a configured vertex or face cap."""
