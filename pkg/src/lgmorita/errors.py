"""Exception hierarchy shared by every module of the package."""


class LGError(Exception):
    """Base class for all errors raised by lgmorita."""


class DoesNotDivide(LGError):
    pass


class ZeroDivisor(LGError, ZeroDivisionError):
    pass


class IndexOutOfRange(LGError, IndexError):
    pass


class ShapeMismatch(LGError, ValueError):
    pass


class NotSquare(ShapeMismatch):
    pass


class NotAFactorization(LGError):
    """Raised when ``P @ Q != f * I``; carries the first offending entry."""

    def __init__(self, message, entry=None, expected=None, received=None):
        super().__init__(message)
        self.entry = entry
        self.expected = expected
        self.received = received


class TargetTooSmall(LGError, ValueError):
    pass


class ZeroPolynomial(LGError, ValueError):
    pass


class SourceTargetMismatch(LGError, ValueError):
    pass


class PolynomialMismatch(LGError):
    """A 1-morphism does not factor the polynomial its endpoints demand."""

    def __init__(self, message, expected=None, received=None):
        super().__init__(message)
        self.expected = expected
        self.received = received


class NotAMorphism(LGError):
    pass


class ConstantPotential(LGError, ValueError):
    pass


class ParseError(LGError, SyntaxError):
    """Polynomial text could not be parsed; ``position`` is a 0-based offset."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position


class UnknownToken(ParseError):
    pass


class DocumentError(LGError, ValueError):
    pass


class IdentityViolation(LGError, AssertionError):
    """A determinant identity that must hold algebraically failed."""
