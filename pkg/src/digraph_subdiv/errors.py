"""Exception hierarchy shared by every module of the package."""


class DigraphError(Exception):
    """Base class for all errors raised by this package."""


class GraphInputError(DigraphError, ValueError):
    """An edge list or vertex argument does not describe a valid simple digraph."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class LoopEdge(GraphInputError):
    pass


class OutOfRange(GraphInputError):
    pass


class DuplicateEdge(GraphInputError):
    pass


class ParseError(DigraphError, ValueError):
    """A text artifact is malformed. ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PreconditionError(DigraphError, ValueError):
    """Arguments violate an operation's stated precondition."""


class TooLarge(PreconditionError):
    pass


class InvariantViolation(DigraphError, AssertionError):
    """A proven invariant failed at runtime. Always indicates a bug."""


class EmptyResult(InvariantViolation):
    pass


class NotEnoughBranchVertices(DigraphError):
    def __init__(self, needed, available):
        super().__init__(
            f"need {needed} branch vertices of high indegree, only {available} available")
        self.needed = needed
        self.available = available


class SubdivisionFailure(DigraphError):
    """The greedy connection got stuck on an ordered branch pair.

    Legitimate in best-effort mode, where the requested order or path bound
    exceeds what the counting argument covers.
    """

    def __init__(self, pair, forbidden_size, connected, max_inner):
        super().__init__(
            f"no short dipath for pair {pair[0]}->{pair[1]} "
            f"(max_inner={max_inner}, forbidden={forbidden_size}, "
            f"connected={connected})")
        self.pair = pair
        self.forbidden_size = forbidden_size
        self.connected = connected
        self.max_inner = max_inner
