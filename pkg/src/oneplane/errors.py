"""Exception hierarchy.

Every error raised for bad input derives from :class:`DrawingError`, which is
a :class:`ValueError`; the CLI maps all of them to exit status 2.
"""

from __future__ import annotations


class DrawingError(ValueError):
    """Base class for rejected input or violated preconditions."""


class OPGSyntaxError(DrawingError):
    """Malformed OPG or edge-list line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RotationMismatch(OPGSyntaxError):
    """A rotation does not list exactly the incident edges of its vertex."""


class DuplicateEdge(DrawingError):
    pass


class LoopEdge(DrawingError):
    pass


class EdgeCrossedTwice(DrawingError):
    pass


class AdjacentCrossing(DrawingError):
    pass


class NotGenusZero(DrawingError):
    pass


class BadCrossOrientation(DrawingError):
    pass


class UnknownVertex(DrawingError, KeyError):
    pass


class UnknownFace(DrawingError, KeyError):
    pass


class Disconnected(DrawingError):
    pass


class TooFewVertices(DrawingError):
    pass


class HasCrossings(DrawingError):
    pass


class MinDegreeTooSmall(DrawingError):
    pass


class PreconditionNotK3Free(DrawingError):
    pass


class NotK4Free(DrawingError):
    pass


class BadParam(DrawingError):
    pass


class NoCrossedK4AtSeed(DrawingError):
    pass


class ResultNotSimple(DrawingError):
    pass


class UnknownFixture(DrawingError, KeyError):
    pass


class FixtureInvalid(DrawingError):
    pass


class SearchExhausted(DrawingError):
    """No drawing was found within the search limits.

    ``complete`` is true only when the limits covered the whole search space,
    in which case the graph has no 1-planar drawing.
    """

    def __init__(self, message: str, complete: bool = False):
        self.complete = complete
        super().__init__(message)


class RejectedByFilter(SearchExhausted):
    """A proven edge bound rules out every 1-planar drawing."""

    def __init__(self, message: str):
        super().__init__(message, complete=True)


class InvariantViolation(AssertionError):
    """A proven identity or inequality failed on a validated drawing.

    This signals a bug (or a counterexample), never bad user input.
    """
