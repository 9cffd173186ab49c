"""Exception types raised by the dynhull library."""


class DynHullError(Exception):
    """Base class for all dynhull errors."""


class DegenerateSegment(DynHullError):
    """A slope was requested for a zero-extent segment (both endpoints equal)."""


class ParallelLines(DynHullError):
    """Supporting-line intersection requested for segments of equal slope."""


class EdgeNotFound(DynHullError):
    """A split was asked to pivot on an edge that is not in the queue."""


class OrderViolation(DynHullError):
    """A join would put queue edges out of chain order (debug check)."""


class NoChild(DynHullError):
    """A cursor was stepped past a leaf."""


class NoPredecessor(DynHullError):
    """Covered-bridge navigation was asked for an edge before the first one."""


class DuplicatePoint(DynHullError):
    """The point is already stored."""


class PointNotFound(DynHullError):
    """The point is not stored."""


class DuplicateValue(DynHullError):
    """The value is already stored."""


class ValueNotFound(DynHullError):
    """The value is not stored."""


class EmptySide(DynHullError):
    """Bridge finding needs at least one point on each side."""


class EmptyHull(DynHullError):
    """The query needs a nonempty point set."""


class ZeroDirection(DynHullError):
    """Extreme-point queries need a nonzero direction vector."""


class ParseError(DynHullError):
    """A point file or ops script line could not be parsed."""

    def __init__(self, message, line_no=None):
        super().__init__(message if line_no is None else f"line {line_no}: {message}")
        self.line_no = line_no


class ScriptParseError(ParseError):
    """An ops script line could not be parsed."""


class UnknownStructure(DynHullError):
    """The CLI was asked for a structure name it does not know."""


class UnknownMode(DynHullError):
    """The CLI was asked for a benchmark mode it does not know."""
