"""Exception types shared across the package."""


class FactorcatError(Exception):
    """Base class for all library-specific errors."""


class CapabilityError(FactorcatError):
    """An operation was requested on a monoid that lacks the capability,
    e.g. a divisibility-only query on a general pre-ordered instance."""


class GuardError(FactorcatError):
    """A bounded-resource guard tripped: enumeration too large or an
    integer outside the documented trial-division range."""


class InvalidMorphismError(FactorcatError, ValueError):
    """The given data does not define a morphism: mismatched sizes,
    mismatched monoids, or a violated order constraint."""
