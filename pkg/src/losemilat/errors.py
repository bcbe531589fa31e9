"""Exception hierarchy shared by the library and the CLI."""


class LosemilatError(Exception):
    """Base class for all errors raised by this package."""


class ContextError(LosemilatError, ValueError):
    """An element, point or term does not fit the ambient semilattice."""


class ArityError(LosemilatError, ValueError):
    """A term or equation mentions a variable the point does not have."""


class ParseError(LosemilatError, ValueError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class InstanceTooLarge(LosemilatError):
    """Raised instead of silently truncating an enumeration."""


class GuardError(LosemilatError, ValueError):
    """A brute-force oracle was asked for an instance outside its guard."""


class UnsupportedRegime(LosemilatError):
    """The decomposition theorem only covers equations with n <= l."""


class UniverseMismatch(LosemilatError, ValueError):
    """The equation does not use exactly the variables x1..xn."""


class EmptySetError(LosemilatError, ValueError):
    """Irreducibility is not defined for the empty set."""


class InconsistencyError(LosemilatError, AssertionError):
    """An internal postcondition failed. Always a bug."""
