"""Exception taxonomy shared by all burnkit modules."""


class BurnkitError(Exception):
    """Base class for all burnkit errors."""


class GraphError(BurnkitError):
    """Invalid graph construction or graph operation."""


class VertexRangeError(GraphError):
    """An edge endpoint is outside 0..n-1."""


class SelfLoopError(GraphError):
    """A self-loop was supplied to a simple-graph constructor."""


class DuplicateEdgeError(GraphError):
    """The same edge was supplied twice."""


class DisconnectedError(GraphError):
    """The graph (or a removal remainder) is not connected."""


class NotATreeError(GraphError):
    """A tree was required but the edge count is not n-1."""


class CapExceededError(BurnkitError):
    """An instance exceeds a desk-scale cap and no override was given."""


class InternalContradictionError(BurnkitError):
    """A constructive step that the underlying theory guarantees has failed.

    This is surfaced loudly and never swallowed: if it fires, either the
    implementation is wrong or the input refutes a proven statement.
    """


class ParseError(BurnkitError):
    """Malformed input file; carries a human-readable position."""
