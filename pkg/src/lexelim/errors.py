"""Exception hierarchy shared by every module."""


class LexelimError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertex(LexelimError, ValueError):
    pass


class InvalidEdge(LexelimError, ValueError):
    pass


class InvalidOrdering(LexelimError, ValueError):
    pass


class InvalidParameter(LexelimError, ValueError):
    pass


class TooLarge(LexelimError, ValueError):
    """Input exceeds the cap of an exponential (desk-scale) routine."""


class NotLexBFS(LexelimError, ValueError):
    pass


class NotAWheel(LexelimError, ValueError):
    pass


class Exhausted(LexelimError, RuntimeError):
    """Rejection sampling ran out of attempts."""


class TheoremViolation(LexelimError, AssertionError):
    """A guaranteed structure was not found. Always an implementation bug."""


class LemmaViolation(LexelimError, AssertionError):
    """No connecting path exists; either a bug or a violated precondition."""


class CertificateError(LexelimError):
    """Input lies outside the class an algorithm was written for.

    ``vertex`` is the vertex whose neighbourhood misbehaves and ``witness``
    the vertices proving it (a hole, a forbidden triple, ...).
    """

    def __init__(self, message, vertex=None, witness=(), position=None):
        super().__init__(message)
        self.vertex = vertex
        self.witness = tuple(witness)
        self.position = position


class NeighborhoodNotChordal(CertificateError):
    pass


class NotCompleteMultipartite(CertificateError):
    pass


class NotTwoCliques(CertificateError):
    pass


class NotCliqueOrStable(CertificateError):
    pass


class NotInC7(CertificateError):
    pass


class NotInC2(CertificateError):
    pass


class NotFound(CertificateError):
    pass
