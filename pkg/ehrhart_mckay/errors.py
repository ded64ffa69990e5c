class EhrhartMcKayError(Exception):
    """Base class for every error raised by ehrhart_mckay."""


class InvalidAlgebraError(EhrhartMcKayError, ValueError):
    pass


class TruncationError(EhrhartMcKayError, ValueError):
    pass


class UnsupportedMethodError(EhrhartMcKayError, ValueError):
    pass


class SeriesDomainError(EhrhartMcKayError, ValueError):
    """A series operation left the ring it is defined on (e.g. 1/(1-m) with m of degree 0)."""


class WindowOverflowError(EhrhartMcKayError):
    """A truncation window dropped a term that could still reach the extracted coefficient."""


class ProjectionError(EhrhartMcKayError):
    """Root-of-unity averaging produced a coefficient that is not a nonnegative integer."""


class VeeUndefinedError(EhrhartMcKayError):
    pass


class CountMismatchError(EhrhartMcKayError):
    """Two independent computations of the same count disagree."""


# Exit codes used by the command line front end
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

USAGE_ERRORS = (InvalidAlgebraError, TruncationError, UnsupportedMethodError)
