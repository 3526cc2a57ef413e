"""Exception hierarchy shared by all modules."""


class PgeigenError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameter(PgeigenError, ValueError):
    pass


class UnsupportedField(PgeigenError, ValueError):
    pass


class FieldDivisionByZero(PgeigenError, ZeroDivisionError):
    pass


class IncompatibleScalars(PgeigenError, TypeError):
    pass


class InvalidPair(PgeigenError, ValueError):
    pass


class InvalidSupport(PgeigenError, ValueError):
    pass


class InvalidIndex(PgeigenError, ValueError):
    pass


class InvariantViolation(PgeigenError, AssertionError):
    """A structural fact that must hold for every valid input did not.

    Raised only when the implementation itself is wrong.
    """
