"""Exception types shared across the package."""


class TrigZeroError(Exception):
    """Base class for all library-specific errors."""


class IdenticallyZero(TrigZeroError):
    """The polynomial is identically zero, so its zero count is undefined."""


class UnsupportedExact(TrigZeroError):
    """Exact counting was requested for a kind that only supports numeric counting."""


class NumericallyAmbiguous(TrigZeroError):
    """A root fell in the ambiguous band around the unit circle; the numeric
    count cannot be certified at the requested tolerance."""


class AllZero(TrigZeroError):
    """A sample sequence was entirely zero, so sign-change counting is undefined."""


class AllDrawsZero(TrigZeroError):
    """Every Monte Carlo draw was identically zero (or the ensemble is almost
    surely zero), so no conditional mean exists."""
