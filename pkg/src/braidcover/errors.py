"""Exception hierarchy.

The CLI maps the three top-level families onto exit codes 1, 2 and 3, so
every error raised by the library derives from exactly one of them.
"""


class BraidCoverError(Exception):
    """Base class for all errors raised by this package."""


class InputError(BraidCoverError, ValueError):
    """Malformed or inconsistent input (parse failures, invalid labelings)."""


class UndefinedResult(BraidCoverError, ArithmeticError):
    """The requested quantity is mathematically undefined for this input."""


class PreconditionError(BraidCoverError, ValueError):
    """A well-formed input violates an operation's precondition."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegreeMismatch(InputError):
    pass


class InvalidLabeling(InputError):
    pass


class AsymmetricInput(InputError):
    pass


class ChernClassNotTorsion(UndefinedResult):
    pass


class MultiComponentClosure(PreconditionError):
    pass


class GeneratorOutOfRange(PreconditionError):
    pass


class NotTransitive(PreconditionError):
    pass


class NotSimple(PreconditionError):
    pass


class LabelsDontShareSymbol(PreconditionError):
    pass


class BadComponentIndex(PreconditionError):
    pass


class NotCharacteristic(PreconditionError):
    pass


class BadPQ(PreconditionError):
    pass


class BadN(PreconditionError):
    pass
