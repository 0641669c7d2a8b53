"""
Dense complex linear algebra for the L-system modules.

Matrices are read-only complex128 numpy arrays. Every operation returns a
fresh array; none mutates its inputs.
"""

import warnings
from typing import Sequence

import numpy as np
import scipy.linalg

from config import HERMITIAN_TOL, POSITIVE_DEFINITE_TOL, SINGULAR_PIVOT_TOL
from errors import DimMismatch, InvalidMatrix, NotHermitian, NotPositiveDefinite, SingularMatrix


def _frozen(data: np.ndarray) -> np.ndarray:
    data.setflags(write=False)
    return data


def as_cmatrix(data) -> np.ndarray:
    """Copy data into a read-only 2-D complex matrix, rejecting NaN/inf."""
    try:
        matrix = np.array(data, dtype=np.complex128)
    except (TypeError, ValueError) as e:
        raise InvalidMatrix(f"cannot build a complex matrix: {e}") from e

    if matrix.ndim != 2 or matrix.shape[0] < 1 or matrix.shape[1] < 1:
        raise InvalidMatrix(f"expected a non-empty 2-D matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise InvalidMatrix("matrix has non-finite entries")
    return _frozen(matrix)


def identity(n: int) -> np.ndarray:
    return _frozen(np.eye(n, dtype=np.complex128))


def zeros(rows: int, cols: int) -> np.ndarray:
    return _frozen(np.zeros((rows, cols), dtype=np.complex128))


def diag(values: Sequence[complex]) -> np.ndarray:
    return _frozen(np.diag(np.asarray(values, dtype=np.complex128)))


def _require_square(M: np.ndarray, what: str) -> None:
    if M.shape[0] != M.shape[1]:
        raise DimMismatch(f"{what} needs a square matrix, got {M.shape[0]}x{M.shape[1]}")


def adjoint(M: np.ndarray) -> np.ndarray:
    return _frozen(np.conj(M).T.copy())


def re_part(M: np.ndarray) -> np.ndarray:
    """(M + M*) / 2"""
    _require_square(M, "re_part")
    return _frozen((M + np.conj(M).T) / 2)


def im_part(M: np.ndarray) -> np.ndarray:
    """(M - M*) / 2i"""
    _require_square(M, "im_part")
    return _frozen((M - np.conj(M).T) / 2j)


def mat_mul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape[1] != B.shape[0]:
        raise DimMismatch(f"cannot multiply {A.shape[0]}x{A.shape[1]} by {B.shape[0]}x{B.shape[1]}")
    return _frozen(A @ B)


def mat_add(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape != B.shape:
        raise DimMismatch(f"cannot add {A.shape} and {B.shape}")
    return _frozen(A + B)


def mat_sub(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape != B.shape:
        raise DimMismatch(f"cannot subtract {B.shape} from {A.shape}")
    return _frozen(A - B)


def scalar_mul(c: complex, M: np.ndarray) -> np.ndarray:
    return _frozen(complex(c) * M)


def fro_norm(M: np.ndarray) -> float:
    return float(np.linalg.norm(M, "fro"))


def trace(M: np.ndarray) -> complex:
    _require_square(M, "trace")
    return complex(np.trace(M))


def det(M: np.ndarray) -> complex:
    """Determinant via LAPACK LU with partial pivoting."""
    _require_square(M, "det")
    return complex(scipy.linalg.det(M))


def _lu(M: np.ndarray):
    _require_square(M, "LU factorization")
    with warnings.catch_warnings():
        # exactly singular input is reported through the pivot check below
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(M)

    smallest_pivot = float(np.min(np.abs(np.diag(lu))))
    if smallest_pivot <= SINGULAR_PIVOT_TOL * fro_norm(M):
        raise SingularMatrix(f"pivot {smallest_pivot:.3e} below threshold")
    return lu, piv


def solve(M: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Solve M X = B column by column through one LU factorization."""
    if M.shape[0] != B.shape[0]:
        raise DimMismatch(f"right-hand side has {B.shape[0]} rows, expected {M.shape[0]}")
    lu, piv = _lu(M)
    return _frozen(scipy.linalg.lu_solve((lu, piv), B))


def mat_inv(M: np.ndarray) -> np.ndarray:
    return solve(M, np.eye(M.shape[0], dtype=np.complex128))


def is_hermitian(H: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    if H.shape[0] != H.shape[1]:
        return False
    return fro_norm(H - np.conj(H).T) <= tol * (1.0 + fro_norm(H))


def herm_eig(H: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Eigendecomposition of a Hermitian matrix.
    Returns (eigenvalues ascending, unitary U) with H = U diag(eigenvalues) U*.
    """
    _require_square(H, "herm_eig")
    if not is_hermitian(H):
        raise NotHermitian("herm_eig input is not Hermitian")

    symmetric = (H + np.conj(H).T) / 2
    eigenvalues, U = np.linalg.eigh(symmetric)
    return _frozen(eigenvalues), _frozen(U)


def min_eigenvalue(H: np.ndarray) -> float:
    eigenvalues, _ = herm_eig(H)
    return float(eigenvalues[0])


def mat_modulus(M: np.ndarray) -> np.ndarray:
    """|M| = (M*M)^(1/2), assembled from the SVD M = U S V* as V S V*."""
    _require_square(M, "mat_modulus")
    _, singular_values, Vh = np.linalg.svd(M)
    V = np.conj(Vh).T
    modulus = (V * singular_values) @ Vh
    return _frozen((modulus + np.conj(modulus).T) / 2)


def mat_log_pd(H: np.ndarray) -> np.ndarray:
    """Principal logarithm of a Hermitian positive definite matrix."""
    eigenvalues, U = herm_eig(H)
    if eigenvalues[0] <= POSITIVE_DEFINITE_TOL:
        raise NotPositiveDefinite(float(eigenvalues[0]))
    return _frozen((U * np.log(eigenvalues)) @ np.conj(U).T)


def singular_values(M: np.ndarray) -> np.ndarray:
    """Singular values, descending."""
    return _frozen(np.linalg.svd(M, compute_uv=False))


def numeric_rank(M: np.ndarray, threshold: float) -> int:
    """Count singular values strictly above an absolute threshold."""
    return int(np.sum(singular_values(M) > threshold))
