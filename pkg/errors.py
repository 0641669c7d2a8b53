"""
Exceptions raised by the L-system toolkit.

Library modules raise these; lsystem_cli.py maps them to exit codes.
"""


class LSystemError(Exception):
    """Base class for every toolkit error."""


class DimMismatch(LSystemError, ValueError):
    """Operands are not conformable (or a square matrix was required)."""


class InvalidMatrix(LSystemError, ValueError):
    """Matrix data is malformed or holds non-finite entries."""


class SingularMatrix(LSystemError):
    """A pivot fell below the scale-relative singularity threshold."""


class NotHermitian(LSystemError):
    """Input failed the Hermitian symmetry check."""


class NotPositiveDefinite(LSystemError):
    def __init__(self, min_eigenvalue: float):
        super().__init__(f"matrix is not positive definite (min eigenvalue {min_eigenvalue:.3e})")
        self.min_eigenvalue = min_eigenvalue


class ValidationError(LSystemError):
    """An L-system invariant is violated."""

    def __init__(self, message: str, residual: float = 0.0):
        super().__init__(message)
        self.residual = residual


class NotSignature(ValidationError):
    """J is not self-adjoint and unitary."""


class ImbalanceError(ValidationError):
    """Im T differs from K J K*."""


class RangeError(ValidationError):
    """ran(Im T) is not contained in ran(K)."""


class SpectrumHit(LSystemError):
    def __init__(self, z: complex, message: str = ""):
        super().__init__(message or f"z = {z} lies in the spectrum")
        self.z = z


class DomainError(LSystemError, ValueError):
    """A parameter is outside the admissible domain."""


class PoleHit(LSystemError):
    def __init__(self, z: complex, pole: complex):
        super().__init__(f"z = {z} hits the pole {pole}")
        self.z = z
        self.pole = pole


class NumericalBreakdown(LSystemError):
    """The entropy limit procedure could not decide."""


class JMismatch(LSystemError):
    """Coupled factors carry different directing operators."""


class SystemFileError(LSystemError):
    """An L-system file could not be read or parsed."""
