"""
Canonical L-systems Theta = (T, K, J) on C^n with input-output space C^m.

Validation of the array, the transfer function W(z) = I - 2i K*(T - zI)^-1 K J,
the impedance function V(z) = K*(Re T - zI)^-1 K, the Cayley-type relations
between them, Herglotz checks, JSON persistence and the random valid system
generator used by tests and the verify command.
"""

import json
import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

import cmatrix as cm
from config import (
    HERGLOTZ_GRID_COUNT,
    HERGLOTZ_IM_MAX,
    HERGLOTZ_RE_BOUND,
    HERGLOTZ_TOL,
    IMBALANCE_TOL,
    RANK_TOL,
    SIGNATURE_TOL,
)
from errors import (
    DimMismatch,
    DomainError,
    ImbalanceError,
    InvalidMatrix,
    NotSignature,
    RangeError,
    SingularMatrix,
    SpectrumHit,
    SystemFileError,
)


@dataclass(frozen=True)
class LSystem:
    T: np.ndarray
    K: np.ndarray
    J: np.ndarray

    @property
    def n(self) -> int:
        return self.T.shape[0]

    @property
    def m(self) -> int:
        return self.J.shape[0]

    def imbalance(self) -> float:
        """||Im T - K J K*||_F"""
        return cm.fro_norm(cm.im_part(self.T) - self.K @ self.J @ cm.adjoint(self.K))


@dataclass(frozen=True)
class HerglotzReport:
    min_eigenvalue: float
    samples: int
    passed: bool


def make_lsystem(T, K, J) -> LSystem:
    """Build and validate an L-system, raising the error for the first violated invariant."""
    T = cm.as_cmatrix(T)
    K = cm.as_cmatrix(K)
    J = cm.as_cmatrix(J)

    n, m = K.shape
    if T.shape != (n, n) or J.shape != (m, m):
        raise DimMismatch(f"T is {T.shape}, K is {K.shape}, J is {J.shape}; expected n x n, n x m, m x m")

    # J must be a signature operator
    if not cm.is_hermitian(J, SIGNATURE_TOL):
        raise NotSignature("J is not self-adjoint", cm.fro_norm(J - cm.adjoint(J)))
    square_residual = cm.fro_norm(J @ J - np.eye(m))
    if square_residual > SIGNATURE_TOL * (1.0 + cm.fro_norm(J)):
        raise NotSignature("J^2 is not the identity", square_residual)

    system = LSystem(T=T, K=K, J=J)

    residual = system.imbalance()
    scale = 1.0 + cm.fro_norm(T)
    if residual > IMBALANCE_TOL * scale:
        raise ImbalanceError(f"Im T differs from K J K* (residual {residual:.3e})", residual)

    # ran(Im T) inside ran(K): appending Im T's columns must not raise the rank
    augmented = np.hstack([K, cm.im_part(T)])
    threshold = RANK_TOL * float(cm.singular_values(augmented)[0])
    rank_k = cm.numeric_rank(K, threshold)
    rank_augmented = cm.numeric_rank(augmented, threshold)
    if rank_augmented > rank_k:
        raise RangeError(
            f"ran(Im T) is not inside ran(K) (rank {rank_augmented} > {rank_k})",
            float(rank_augmented - rank_k),
        )

    return system


def transfer(system: LSystem, z: complex) -> np.ndarray:
    """W(z) = I - 2i K*(T - zI)^-1 K J"""
    shifted = system.T - z * np.eye(system.n)
    try:
        resolvent_k = cm.solve(shifted, system.K)
    except SingularMatrix as e:
        raise SpectrumHit(z, f"z = {z} lies in the spectrum of T") from e

    return cm.as_cmatrix(np.eye(system.m) - 2j * cm.adjoint(system.K) @ resolvent_k @ system.J)


def impedance(system: LSystem, z: complex) -> np.ndarray:
    """V(z) = K*(Re T - zI)^-1 K"""
    shifted = cm.re_part(system.T) - z * np.eye(system.n)
    try:
        resolvent_k = cm.solve(shifted, system.K)
    except SingularMatrix as e:
        raise SpectrumHit(z, f"z = {z} lies in the spectrum of Re T") from e

    return cm.as_cmatrix(cm.adjoint(system.K) @ resolvent_k)


def impedance_from_transfer(W: np.ndarray, J: np.ndarray) -> np.ndarray:
    """V = i (W + I)^-1 (W - I) J"""
    identity = np.eye(W.shape[0])
    return cm.as_cmatrix(1j * cm.solve(W + identity, W - identity) @ J)


def transfer_from_impedance(V: np.ndarray, J: np.ndarray) -> np.ndarray:
    """W = (I + i V J)^-1 (I - i V J)"""
    identity = np.eye(V.shape[0])
    vj = V @ J
    return cm.solve(identity + 1j * vj, identity - 1j * vj)


def upper_half_grid(
    count: int = HERGLOTZ_GRID_COUNT,
    re_bound: float = HERGLOTZ_RE_BOUND,
    im_max: float = HERGLOTZ_IM_MAX,
) -> list[complex]:
    """count x count points with |Re z| <= re_bound and 0 < Im z <= im_max."""
    re_axis = np.linspace(-re_bound, re_bound, count)
    im_axis = im_max * np.arange(1, count + 1) / count
    return [complex(x, y) for y in im_axis for x in re_axis]


def herglotz_check(system: LSystem, samples: Iterable[complex]) -> HerglotzReport:
    """Smallest eigenvalue of Im V(z) over upper half-plane samples."""
    lowest = np.inf
    count = 0
    for z in samples:
        if z.imag <= 0:
            raise DomainError(f"Herglotz samples need Im z > 0, got {z}")
        lowest = min(lowest, cm.min_eigenvalue(cm.im_part(impedance(system, z))))
        count += 1

    if count == 0:
        raise DomainError("herglotz_check needs at least one sample")
    return HerglotzReport(min_eigenvalue=float(lowest), samples=count, passed=lowest >= -HERGLOTZ_TOL)


def operator_kind(system: LSystem) -> str:
    """Sign structure of Im T: dissipative, accumulative, mixed or self-adjoint."""
    eigenvalues, _ = cm.herm_eig(cm.im_part(system.T))
    tol = HERGLOTZ_TOL * (1.0 + cm.fro_norm(system.T))
    has_positive = eigenvalues[-1] > tol
    has_negative = eigenvalues[0] < -tol

    if has_positive and has_negative:
        return "mixed"
    if has_positive:
        return "dissipative"
    if has_negative:
        return "accumulative"
    return "self-adjoint"


def random_lsystem(rng: np.random.Generator, n: int, m: int, signature: Optional[Sequence[int]] = None) -> LSystem:
    """
    Random valid system: K and a Hermitian R with entries uniform in [-1, 1]^2,
    then T = R + i K J K*, so Im T = K J K* holds by construction.
    """
    J = np.diag(np.asarray(signature if signature is not None else [1] * m, dtype=np.complex128))
    K = rng.uniform(-1, 1, (n, m)) + 1j * rng.uniform(-1, 1, (n, m))
    A = rng.uniform(-1, 1, (n, n)) + 1j * rng.uniform(-1, 1, (n, n))
    R = (A + np.conj(A).T) / 2
    return make_lsystem(R + 1j * K @ J @ np.conj(K).T, K, J)


def random_signature(rng: np.random.Generator, m: int) -> list[int]:
    return [int(s) for s in rng.choice([-1, 1], size=m)]


# JSON interchange: complex entries are [re, im] pairs

def matrix_to_json(M: np.ndarray) -> list:
    return [[[float(x.real), float(x.imag)] for x in row] for row in M]


def matrix_from_json(rows: list) -> np.ndarray:
    try:
        return cm.as_cmatrix([[complex(re, im) for re, im in row] for row in rows])
    except (TypeError, ValueError) as e:
        raise InvalidMatrix(f"bad matrix entry: {e}") from e


def system_to_json(system: LSystem, provenance: Optional[list] = None) -> dict:
    data = {
        "n": system.n,
        "m": system.m,
        "T": matrix_to_json(system.T),
        "K": matrix_to_json(system.K),
        "J": matrix_to_json(system.J),
    }
    if provenance:
        data["provenance"] = list(provenance)
    return data


def system_from_json(data: dict) -> LSystem:
    try:
        system = make_lsystem(
            matrix_from_json(data["T"]),
            matrix_from_json(data["K"]),
            matrix_from_json(data["J"]),
        )
    except (KeyError, TypeError) as e:
        raise SystemFileError(f"missing or malformed field: {e}") from e

    if data.get("n", system.n) != system.n or data.get("m", system.m) != system.m:
        raise SystemFileError(f"declared dimensions n={data.get('n')}, m={data.get('m')} do not match the matrices")
    return system


def load_lsystem(filepath: str) -> LSystem:
    """Load and validate an L-system JSON file."""
    if not os.path.exists(filepath):
        raise SystemFileError(f"no system file found at {filepath}")

    try:
        with open(filepath, "r") as f:
            data = json.load(f)
    except (json.JSONDecodeError, IOError) as e:
        raise SystemFileError(f"error reading system file {filepath}: {e}") from e

    if not isinstance(data, dict):
        raise SystemFileError(f"{filepath} does not hold a JSON object")
    return system_from_json(data)


def save_lsystem(system: LSystem, filepath: str, provenance: Optional[list] = None) -> None:
    with open(filepath, "w") as f:
        json.dump(system_to_json(system, provenance), f, indent=2)
