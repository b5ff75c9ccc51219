"""Exception types shared across the package."""


class TailcastError(Exception):
    """Base class for all package-specific errors."""


class CatalogFormatError(TailcastError):
    """Raised for malformed catalog files (bad header, no valid rows)."""


class DegenerateSampleError(TailcastError, ValueError):
    """Raised when a tail sample cannot identify a scaling exponent
    (e.g. every value equals the threshold)."""


class AdaptationError(TailcastError, RuntimeError):
    """Raised when MCMC step-size adaptation fails (acceptance pinned
    at 0 or 1 after burn-in)."""
