"""
Domain exceptions.

Everything derives from ``ValueError`` so that callers treating bad input as a
value error (the routers, the CLI) keep working without knowing the subclasses.
"""


class JaggedError(ValueError):
    """Base class for all domain errors."""


class SeriesError(JaggedError):
    """Invalid operation on a truncated power series."""


class FamilyError(JaggedError):
    """Malformed family description or a partition outside its family."""


class CountingError(JaggedError):
    """Invalid arguments to a counting or congruence routine."""


class IllPosedSystemError(JaggedError):
    """A q-difference system that cannot be solved by iteration."""


class UnknownIdentityError(JaggedError):
    """Lookup of an identity name that is not registered."""
