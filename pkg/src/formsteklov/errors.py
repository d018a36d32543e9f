"""Exception types raised across the package."""


class FormSteklovError(Exception):
    """Base class for all package errors."""


class InvalidDomainError(FormSteklovError):
    """Domain parameters are out of range (non-positive sizes, r_in >= r_out, ...)."""


class MeshFormatError(FormSteklovError):
    """A mesh file has a malformed header or body."""


class NonManifoldError(FormSteklovError):
    """A codimension-one simplex is shared by more than two top simplices,
    or the boundary complex is not closed."""


class OrientationError(FormSteklovError):
    """A top simplex has non-positive signed volume."""


class DegenerateSimplexError(FormSteklovError):
    """A simplex has (numerically) zero volume."""


class SingularSystemError(FormSteklovError):
    """A linear system that the contract guarantees to be invertible is
    numerically singular.  Carries the offending near-null vector when one
    is available."""

    def __init__(self, message, near_null=None):
        super().__init__(message)
        self.near_null = near_null


class QuadratureError(FormSteklovError):
    """An adaptive quadrature failed to reach the requested tolerance."""


class UnknownCheckError(FormSteklovError):
    """Unknown verification check identifier."""


class AmbiguousKernelError(FormSteklovError):
    """No clear spectral gap separates near-zero eigenvalues from the rest."""
