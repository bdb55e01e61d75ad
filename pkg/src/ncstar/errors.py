"""Exception hierarchy shared by every module of the package."""


class NCStarError(Exception):
    """Base class for all errors raised by ncstar."""


class EmptyGraph(NCStarError, ValueError):
    pass


class Disconnected(NCStarError, ValueError):
    pass


class InvalidPoint(NCStarError, ValueError):
    pass


class SubdivisionTooCoarse(NCStarError, ValueError):
    pass


class NonCanonicalRegion(NCStarError, ValueError):
    pass


class EmptyRegion(NCStarError, ValueError):
    pass


class SubgraphGraphMismatch(NCStarError, ValueError):
    pass


class GraphMismatch(NCStarError, ValueError):
    pass


class BudgetExceeded(NCStarError, RuntimeError):
    pass


class InvalidCertificate(NCStarError, ValueError):
    pass


class NotATangle(NCStarError, ValueError):
    pass


class NotInFT(NCStarError, ValueError):
    pass


class PointInsideA(NCStarError, ValueError):
    pass


class InvalidStart(NCStarError, ValueError):
    pass


class InternalInvariantViolation(NCStarError, AssertionError):
    """A mathematically guaranteed fact failed at runtime."""


class ParseError(NCStarError, ValueError):
    def __init__(self, line: int, message: str = ""):
        self.line = line
        super().__init__(f"line {line}: {message}" if message else f"line {line}")


class UnsupportedFormat(NCStarError, ValueError):
    pass
