"""Exception types shared across the package."""


class RainbowLabError(Exception):
    """Base class for all package-specific errors."""


class ParseError(RainbowLabError):
    """A document could not be parsed (malformed JSON, wrong shape, bad types)."""


class InvariantError(RainbowLabError):
    """A structural invariant is violated (loop, duplicate edge, improper color, ...)."""


class BipartitionError(RainbowLabError):
    """A side tagging is inconsistent with the graph."""


class WorkCapExceeded(RainbowLabError):
    """An operation's work estimate or actual work exceeded the configured cap.

    When raised by a search routine, no non-existence claim is made.
    """

    def __init__(self, message: str, estimate: int | None = None, cap: int | None = None):
        super().__init__(message)
        self.estimate = estimate
        self.cap = cap


class SizeLimit(RainbowLabError):
    """A requested construction would exceed the configured size limit."""


class OddOrder(RainbowLabError):
    """A one-factorization was requested for an odd number of vertices."""


class TooManyEdges(RainbowLabError):
    """More edges were requested than the host graph can hold."""


class EmptyGraph(RainbowLabError):
    """The operation needs at least one edge (or vertex) to be meaningful."""


class DegreeZero(RainbowLabError):
    """The splitting procedure needs minimum degree at least one."""


class PreconditionError(RainbowLabError):
    """A documented precondition of the operation does not hold."""


class LemmaViolation(RainbowLabError):
    """An asserted conclusion of a regularization procedure failed.

    This signals a bug (the conclusions are theorems under the checked
    preconditions), so it should never be seen in normal operation.
    """


class PartitionFailure(RainbowLabError):
    """No sampled tripartition reached the required transversal edge count."""
