"""Exception types shared across the package."""


class SlopeforgeError(Exception):
    """Base class for all package-specific errors."""


class CatalogError(SlopeforgeError, ValueError):
    """A curve catalog is malformed or a lookup failed."""


class WordParseError(SlopeforgeError, ValueError):
    """A twist-word text could not be parsed."""


class GenusMismatchError(SlopeforgeError, ValueError):
    """Operands live on surfaces of different genus."""


class TrivialityError(SlopeforgeError, ValueError):
    """A word required to act trivially on homology does not."""


class SubstitutionError(SlopeforgeError, ValueError):
    """A relator substitution did not match at the requested position."""


class ParameterError(SlopeforgeError, ValueError):
    """A construction parameter is out of its admissible range."""


class BudgetExceeded(SlopeforgeError, RuntimeError):
    """A word-level construction would exceed the letter budget."""
