"""Errors raised by the algebra modules and the command line."""


class HochschildError(Exception):
    """Base class for every error raised by the package."""


class DivisionByZero(HochschildError, ZeroDivisionError):
    pass


class FieldMismatch(HochschildError, TypeError):
    pass


class SpecializationPole(HochschildError):
    """A generic-q value has a pole at the requested rational point."""


class ParseError(HochschildError):
    """
    Polynomial text does not follow the grammar.

    Attributes:
    - position: 0-based offset of the offending character
    - expected: sorted tuple of token kinds that would have been accepted
    """

    def __init__(self, message: str, position: int, expected=()):
        self.position = position
        self.expected = tuple(sorted(expected))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at position {position}{detail}")


class UnknownVariable(HochschildError):
    pass


class AmbientMismatch(HochschildError):
    pass


class ZeroPolynomial(HochschildError):
    pass


class OrderNotEliminating(HochschildError):
    pass


class InternalDivisionFailure(HochschildError):
    pass


class InfiniteWithoutBound(HochschildError):
    """The quotient is infinite-dimensional and no degree bound was given."""


class InfiniteQuotient(HochschildError):
    pass


class NotHomogeneous(HochschildError):
    pass


class OutOfBuiltRange(HochschildError):
    pass


class ComplexNotClosed(HochschildError):
    """Two consecutive differentials do not compose to zero."""


class ConfigurationError(HochschildError):
    pass


# errors that come from what the user typed, reported with exit status 2
INPUT_ERRORS = (
    ParseError,
    SpecializationPole,
    UnknownVariable,
    ConfigurationError,
    NotHomogeneous,
    InfiniteWithoutBound,
    InfiniteQuotient,
    FieldMismatch,
    AmbientMismatch,
    ZeroPolynomial,
    OutOfBuiltRange,
)
