"""Exception types raised by the toolkit."""


class BrahmaguptaError(ValueError):
    """Base class for domain errors (bad radicand, empty norm class, ...)."""


class RadicandError(BrahmaguptaError):
    pass


class RadicandMismatch(BrahmaguptaError):
    pass


class NormMismatch(BrahmaguptaError):
    pass


class EmptyNormClass(BrahmaguptaError):
    pass


class PartitionError(BrahmaguptaError):
    """An element of the norm class matched no orbit of a partition."""
