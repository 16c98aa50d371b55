"""Exception hierarchy shared by every module."""


class SymDefectError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(SymDefectError, ValueError):
    """The graph document or the graph it describes is invalid."""


class GraphSyntaxError(GraphError):
    pass


class EvenCycle(GraphError):
    pass


class NotInduced(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotUnicyclic(GraphError):
    """Raised by operations that need G connected with a single cycle."""


class TooLarge(SymDefectError):
    """An exhaustive routine would exceed a configured guard."""


class DimensionMismatch(SymDefectError, ValueError):
    pass


class ConditionFails(SymDefectError):
    """Some vertex lies outside the closed neighbourhood of the cycle."""


class InsufficientData(SymDefectError, ValueError):
    pass


class OutOfRegime(SymDefectError, ValueError):
    pass
