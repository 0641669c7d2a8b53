"""
Coupling of two L-systems sharing a directing operator J.

    T = [[T1, 2i K1 J K2*],      K = [[K1],
         [0,  T2          ]]          [K2]]

The coupled transfer function is the product W1(z) W2(z), left factor first,
and c-entropy is additive across the coupling.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

import cmatrix as cm
from config import J_MATCH_TOL
from entropy import c_entropy
from errors import DimMismatch, DomainError, JMismatch, SingularMatrix, SpectrumHit
from lsystem import LSystem, make_lsystem, transfer


@dataclass(frozen=True)
class CouplingResult:
    coupled: LSystem
    left: LSystem
    right: LSystem

    def coupling_block(self) -> np.ndarray:
        """Upper-right block 2i K1 J K2* of the coupled main operator."""
        n1 = self.left.n
        return self.coupled.T[:n1, n1:]


def couple(left: LSystem, right: LSystem) -> CouplingResult:
    if left.m != right.m:
        raise DimMismatch(f"input-output spaces differ: m={left.m} vs m={right.m}")
    j_gap = float(np.max(np.abs(left.J - right.J)))
    if j_gap > J_MATCH_TOL:
        raise JMismatch(f"directing operators differ by {j_gap:.3e}")

    J = left.J
    block = 2j * left.K @ J @ cm.adjoint(right.K)
    T = np.block([
        [left.T, block],
        [np.zeros((right.n, left.n), dtype=np.complex128), right.T],
    ])
    K = np.vstack([left.K, right.K])
    return CouplingResult(coupled=make_lsystem(T, K, J), left=left, right=right)


def couple_chain(systems: Sequence[LSystem]) -> LSystem:
    """Left fold of couple(): ((S1 . S2) . S3) ..."""
    if len(systems) < 2:
        raise DomainError(f"a coupling chain needs at least two systems, got {len(systems)}")

    coupled = systems[0]
    for system in systems[1:]:
        coupled = couple(coupled, system).coupled
    return coupled


def _resolvent(system: LSystem, z: complex) -> np.ndarray:
    try:
        return cm.mat_inv(system.T - z * np.eye(system.n))
    except SingularMatrix as e:
        raise SpectrumHit(z, f"z = {z} lies in the spectrum of a factor") from e


def coupled_resolvent_check(result: CouplingResult, z: complex) -> float:
    """
    Assemble (T - zI)^-1 blockwise as [[R1, -R1 B R2], [0, R2]] from the factor
    resolvents and return ||(T - zI) R - I||_F for the coupled T.
    """
    R1 = _resolvent(result.left, z)
    R2 = _resolvent(result.right, z)
    assembled = np.block([
        [R1, -R1 @ result.coupling_block() @ R2],
        [np.zeros((result.right.n, result.left.n), dtype=np.complex128), R2],
    ])
    n = result.coupled.n
    return cm.fro_norm((result.coupled.T - z * np.eye(n)) @ assembled - np.eye(n))


def multiplication_check(result: CouplingResult, z: complex) -> float:
    """||W(z) - W1(z) W2(z)||_F"""
    product = cm.mat_mul(transfer(result.left, z), transfer(result.right, z))
    return cm.fro_norm(transfer(result.coupled, z) - product)


def coupled_entropy_check(result: CouplingResult) -> tuple[float, float, float]:
    """c-Entropies (S, S1, S2) of the coupled system and its two factors."""
    return c_entropy(result.coupled), c_entropy(result.left), c_entropy(result.right)


def _require_unit_interval(value: float, name: str) -> None:
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value}")


def compose_dissipation(d1: float, d2: float) -> float:
    """D = 1 - (1 - D1)(1 - D2)"""
    _require_unit_interval(d1, "D1")
    _require_unit_interval(d2, "D2")
    return 1.0 - (1.0 - d1) * (1.0 - d2)


def compose_accumulation(a1: float, a2: float) -> float:
    """A = 1 - (1 - A1)(1 - A2)"""
    _require_unit_interval(a1, "A1")
    _require_unit_interval(a2, "A2")
    return 1.0 - (1.0 - a1) * (1.0 - a2)
