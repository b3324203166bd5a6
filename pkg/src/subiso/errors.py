"""Exception types shared across the toolkit."""


class SubisoError(Exception):
    """Base class for all toolkit errors."""


class GraphError(SubisoError):
    """Invalid graph construction or use."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class IndexOutOfRange(GraphError):
    pass


class IncompleteMapping(SubisoError):
    """A mapping was used where a total mapping is required."""


class MaxLTooLarge(SubisoError):
    """Requested path length bound exceeds the configured safety cap."""


class CoverIncomplete(SubisoError):
    """The greedy path cover left residual edges; should be unreachable
    for connected inputs."""


class TooLargeForOracle(SubisoError):
    """Input exceeds the brute-force oracle's size guard."""


class ParseError(SubisoError):
    """Malformed dataset file."""

    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class ValidationError(SubisoError):
    """A parsed graph violates a structural requirement."""


class InfeasibleParameters(SubisoError):
    """Generator parameters cannot produce a simple connected graph."""


class InfeasibleQuerySize(SubisoError):
    """No data graph is large enough to extract queries of the requested size."""


class ConfigError(SubisoError):
    """Invalid benchmark configuration."""


class EngineDisagreement(SubisoError):
    """Two engines returned different verdicts for the same pair; indicates a bug."""


class SearchTimeout(SubisoError):
    """A single containment check exceeded its deadline."""
