"""Exception types raised across the package."""


class RbLieError(Exception):
    """Base class for all package errors."""


class NotLyndonShirshov(RbLieError, ValueError):
    """A word that must be Lyndon-Shirshov is not."""


class NotASubwordOccurrence(RbLieError, ValueError):
    """A span does not describe a nonempty subword of the given word."""


class OverlappingOccurrences(RbLieError, ValueError):
    pass


class InvalidRule(RbLieError, ValueError):
    """A rewriting rule is not monic or violates the operator-degree condition."""


class BoundExceeded(RbLieError):
    """An input or intermediate term exceeds the system's operator-degree bound."""


class FuseBlown(RbLieError):
    """The defensive step counter of a normal form computation ran out."""


class JacobiViolation(RbLieError, ValueError):
    """A multiplication table fails the composition check (Jacobi identity)."""


class UnknownGenerator(RbLieError, KeyError):
    pass


class ParseError(RbLieError, SyntaxError, ValueError):
    """Malformed term text; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class PresentationError(RbLieError, ValueError):
    """A presentation document is malformed or names unknown basis elements."""
