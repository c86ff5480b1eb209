"""Exceptions shared across the package."""


class HopflabError(Exception):
    pass


class FieldMismatch(HopflabError):
    """Operands live over different ground fields."""


class NoSuchRoot(HopflabError):
    """The field contains no primitive root of unity of the requested order."""


class NoConvolutionInverse(HopflabError):
    """The two-sided convolution inverse system is inconsistent."""


class NotVerified(HopflabError):
    """A construction was fed an algebra that has not passed its axiom suite."""


class FlagError(HopflabError):
    """A cocycle/map is missing a property required by the operation."""


class EnumerationTooLarge(HopflabError):
    """The requested exhaustive search exceeds the configured bound."""

    def __init__(self, size, bound):
        super().__init__(f"enumeration of size {size} exceeds bound {bound}")
        self.size = size
        self.bound = bound


class LiftError(HopflabError):
    """The projective representation cannot be lifted by the constructive path."""
