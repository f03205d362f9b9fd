"""Exception taxonomy shared by all modules.

Every domain failure derives from :class:`LatticeWidthError`; the command
line maps these to exit status 1.
"""


class LatticeWidthError(Exception):
    """Base class for domain errors."""


# polygon core
class EmptyInput(LatticeWidthError, ValueError):
    pass


class CoordinateRangeError(LatticeWidthError, ValueError):
    pass


class LatticeOverflow(LatticeWidthError, OverflowError):
    """An intermediate value left the signed 64-bit range."""


class InvalidShoeParameters(LatticeWidthError, ValueError):
    pass


class NotUnimodular(LatticeWidthError, ValueError):
    pass


# width solver
class NoAdjoint(LatticeWidthError):
    """Tightness was queried on a polygon without interior lattice points."""


class DegeneratePolygon(LatticeWidthError):
    pass


class ZeroDirection(LatticeWidthError, ValueError):
    pass


# toric bridge
class DegenerateEmbedding(LatticeWidthError, ValueError):
    pass


class NonPrimitiveDirection(LatticeWidthError, ValueError):
    pass


class UnsolvableExponentSystem(LatticeWidthError):
    """The exponent differences do not generate the requested direction."""


class ZeroSample(LatticeWidthError, ValueError):
    pass


class ZeroScale(LatticeWidthError, ValueError):
    pass


# picard adjoint
class BasisMismatch(LatticeWidthError, ValueError):
    pass


class AlreadyMinimal(LatticeWidthError):
    pass


class ChainError(LatticeWidthError):
    """Failure inside the adjoint chain; ``partial`` holds the steps done so far."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = list(partial or [])


class NotMprs(ChainError):
    """A necessary condition of a minimally polarized surface fails."""


class NonBasisContractionNeeded(ChainError):
    pass


class MinimalityUndecidable(ChainError):
    pass


class UnrecognizedMinimalModel(ChainError):
    pass
