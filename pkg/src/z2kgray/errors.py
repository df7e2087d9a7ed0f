"""Exception hierarchy. Mathematical failures are reported as data; these are for malformed input."""


class Z2kError(ValueError):
    """Base class for all package errors."""


class ModulusMismatch(Z2kError):
    pass


class LengthMismatch(Z2kError):
    pass


class OutOfRange(Z2kError):
    pass


class NotInImage(Z2kError):
    pass


class NotACodeword(Z2kError):
    pass


class SizeLimitExceeded(Z2kError):
    pass


class LimitExceeded(Z2kError):
    pass


class DegenerateCode(Z2kError):
    pass


class NotApplicable(Z2kError):
    pass


class EmptyCode(Z2kError):
    pass


class ParityError(Z2kError):
    pass
