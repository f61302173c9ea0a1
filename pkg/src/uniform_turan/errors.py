"""Exception types shared across the package."""


class TuranError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraph(TuranError, ValueError):
    pass


class InvalidCertificate(TuranError, ValueError):
    """Certificate is structurally wrong for the graph it is checked against."""


class GuardExceeded(TuranError):
    """Input is larger than the configured desk-scale guard."""


class SearchTimeout(TuranError):
    """A search ran out of time before reaching a verdict.

    Never to be read as UNSAT.
    """
