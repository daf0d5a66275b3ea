class LeakyForceError(Exception):
    """Base class for package errors."""


class ParameterError(LeakyForceError, ValueError):
    """A family or pattern parameter is outside its domain."""


class GraphParseError(LeakyForceError, ValueError):
    """Malformed edge-list or graph6 input."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphValidationError(LeakyForceError, ValueError):
    """Structurally invalid graph (self-loop, asymmetric adjacency, ...)."""


class VertexDomainError(LeakyForceError, ValueError):
    """A vertex index is outside ``0..n-1``."""


class FortError(LeakyForceError, RuntimeError):
    """A fort operation was called outside its precondition."""


class InfeasibleCoverError(LeakyForceError):
    """Some fort cannot reach the required multiplicity."""

    def __init__(self, fort_index, fort, need):
        self.fort_index = fort_index
        self.fort = fort
        super().__init__(
            f"fort #{fort_index} {sorted(fort)} cannot be covered {need} times"
        )


class InternalLogicError(LeakyForceError, RuntimeError):
    """Invariant violation inside the constraint-generation loop."""


class ResourceLimitError(LeakyForceError):
    """Exhaustive search refused because the instance exceeds its cap."""
