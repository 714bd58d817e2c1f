"""Exception hierarchy shared by all modules.

Library functions raise these; the CLI maps :class:`InputError` to exit
code 2 and :class:`PreconditionError` to exit code 3.
"""


class LSFError(Exception):
    """Base class for every error raised by this package."""


class InputError(LSFError, ValueError):
    """Malformed input (bad rational, bad JSON term list, ...)."""


class PreconditionError(LSFError, ValueError):
    """Well-formed input that violates an operation's precondition."""


class ZeroPolynomial(PreconditionError):
    pass


class InexactDivision(PreconditionError):
    pass


class ZeroSpecialization(PreconditionError):
    pass


class InvalidLinkData(PreconditionError):
    pass


class NotACandidate(PreconditionError):
    pass


class TooManyDegenerate(PreconditionError):
    pass


class Unsupported(PreconditionError):
    pass


class UnstableWindow(PreconditionError):
    pass


class NotAKnot(PreconditionError):
    pass


class NotPositive(PreconditionError):
    pass


class OutOfProvenRange(PreconditionError):
    pass
