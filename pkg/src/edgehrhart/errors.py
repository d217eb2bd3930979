"""Exception hierarchy shared by the pipeline stages."""


class EdgehrhartError(Exception):
    """Base class for every error raised by this package."""


class GraphError(EdgehrhartError, ValueError):
    """The input graph is malformed or violates a structural requirement."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    def __init__(self, message, components=None, line=None):
        self.components = components or []
        super().__init__(message, line=line)


class GraphSyntaxError(GraphError):
    pass


class ResourceLimit(EdgehrhartError):
    """A configurable enumeration cap was exceeded."""

    def __init__(self, stage, cap):
        self.stage = stage
        self.cap = cap
        super().__init__(f"{stage}: exceeded cap of {cap}")


class SignResolutionFailure(EdgehrhartError, AssertionError):
    """No sign choice of alternating products makes a generator homogeneous."""


class InvalidParameter(EdgehrhartError, ValueError):
    pass


class HypothesisViolated(EdgehrhartError, ValueError):
    """A factoring theorem was applied to a split that breaks a hypothesis."""

    def __init__(self, which, message):
        self.which = which
        super().__init__(f"hypothesis ({which}) violated: {message}")


class NumericalInstability(EdgehrhartError, ArithmeticError):
    pass
