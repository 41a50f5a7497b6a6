"""Exception types raised across the package."""


class RadiusLabError(Exception):
    """Base class for all package errors."""


class NotHermitian(RadiusLabError, ValueError):
    pass


class NoConvergence(RadiusLabError, RuntimeError):
    pass


class NegativeEigenvalue(RadiusLabError, ValueError):
    pass


class DimensionMismatch(RadiusLabError, ValueError):
    pass


class AlphaOutOfRange(RadiusLabError, ValueError):
    pass


class RTooSmall(RadiusLabError, ValueError):
    pass


class SOutOfRange(RadiusLabError, ValueError):
    pass


class MatrixFormatError(RadiusLabError, ValueError):
    """Raised when a matrix file or array does not describe a finite square matrix."""


class UnknownBoundId(RadiusLabError, KeyError):
    pass
