"""Exception hierarchy shared by every kmcds module."""


class KmcdsError(Exception):
    """Base class for all errors raised by kmcds."""


class InvalidInputError(KmcdsError, ValueError):
    """An argument is malformed or refers to vertices outside the graph."""


class NoPathError(KmcdsError):
    """No path joins the two vertex sets once the forbidden set is removed."""


class NotSeparableError(KmcdsError, ValueError):
    """Adjacent vertices cannot be separated by deleting other vertices."""


class PreconditionError(KmcdsError, ValueError):
    """An operation was called on an input violating its stated precondition."""


class InfeasibleInputError(KmcdsError):
    """No set with the requested domination property exists."""


class UnsupportedParametersError(KmcdsError, ValueError):
    """The solver only handles m >= k >= 1."""


class InfeasibleGraphError(KmcdsError):
    """The input graph is not k-connected, so no (k,m)-CDS exists."""


class InternalError(KmcdsError, AssertionError):
    """A step the correctness argument guarantees did not hold."""


class ParseError(KmcdsError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
